#!/usr/bin/env python3
"""
Tests for ordered grounds, set families, traces, VC dimension and growth fits.
"""

import json
import random
from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import families, labelled_families
from oracles import naive_vc
from vcmax.errors import InputError, ParseError, SizeCapError
from vcmax.generators import intervals_family, power_set_family, singletons_family
from vcmax.sets import (
    OrderedGround,
    SetFamily,
    estimate_growth_exponent,
    family_trace_oracle,
    format_sfam,
    load_family,
    parse_family,
    parse_sfam,
    restrict,
    sauer_bound,
    sauer_profile,
    shattered_sets,
    shatters,
    vc_dimension,
)


# ---------------------------------------------------------------------------
# grounds and families


def test_ground_rejects_bad_labels():
    with pytest.raises(InputError):
        OrderedGround(("a", "a"))
    with pytest.raises(InputError):
        OrderedGround(("a b",))
    with pytest.raises(InputError):
        OrderedGround(("a,b",))


def test_words_follow_ground_order(abc):
    family = SetFamily.from_label_sets(abc, [(), ("a",), ("b", "c")])
    assert family.words() == ["000", "100", "011"]
    assert family.label_sets() == [(), ("a",), ("b", "c")]


def test_unknown_label_is_an_input_error(abc):
    with pytest.raises(InputError, match="unknown label"):
        abc.mask_of(["z"])


def test_duplicate_members_rejected(abc):
    with pytest.raises(InputError, match="duplicate"):
        SetFamily.from_words(abc, ["100", "100"])
    family = SetFamily.from_label_sets(abc, [("a",), ("a",)], normalize=True)
    assert len(family) == 1


def test_equality_ignores_member_order(abc):
    one = SetFamily.from_words(abc, ["000", "110"])
    two = SetFamily.from_words(abc, ["110", "000"])
    assert one == two
    assert hash(one) == hash(two)


def test_sorted_puts_smaller_sets_first(abc):
    family = SetFamily.from_words(abc, ["111", "010", "000", "100"]).sorted()
    assert family.words() == ["000", "100", "010", "111"]


# ---------------------------------------------------------------------------
# formats


def test_parse_sfam_with_comments():
    text = "# two sets\na b c\n000\n101  # ends\n"
    family = parse_sfam(text)
    assert family.ground.labels == ("a", "b", "c")
    assert family.words() == ["000", "101"]


def test_parse_sfam_reports_line_numbers():
    with pytest.raises(ParseError) as info:
        parse_sfam("a b\n00\n1x\n")
    assert info.value.line == 3
    with pytest.raises(ParseError, match="duplicate"):
        parse_sfam("a b\n01\n01\n")
    with pytest.raises(ParseError, match="ground"):
        parse_sfam("# nothing\n")


def test_json_mirror_is_accepted(abc):
    family = parse_family('{"ground": ["a", "b", "c"], "members": ["000", "011"]}')
    assert family == SetFamily.from_words(abc, ["000", "011"])
    assert parse_family(format_sfam(family)) == family


@pytest.mark.parametrize("label", ["x#1", "{a", "a:b", "@a", "a\tb"])
def test_ground_rejects_format_characters(label):
    with pytest.raises(InputError, match="contains whitespace"):
        OrderedGround((label, "y"))


@given(labelled_families())
@settings(max_examples=200, deadline=None)
def test_accepted_labels_survive_the_text_formats(drawn):
    labels, members = drawn
    try:
        ground = OrderedGround(labels)
    except InputError:
        assert any(c.isspace() or c in ",:@#{" for label in labels for c in label)
        return
    family = SetFamily(ground, members)
    assert parse_family(format_sfam(family)) == family
    mirror = json.dumps(family.to_dict())
    assert parse_family(mirror) == family


def test_load_family_missing_file(tmp_path):
    with pytest.raises(InputError, match="cannot read"):
        load_family(tmp_path / "missing.sfam")


# ---------------------------------------------------------------------------
# traces and shattering


def test_restrict_examples():
    ab = OrderedGround(("a", "b"))
    family = SetFamily.from_label_sets(ab, [(), ("a",), ("a", "b")])
    traced = restrict(family, ["b"])
    assert traced.ground.labels == ("b",)
    assert traced == SetFamily.from_label_sets(OrderedGround(("b",)), [(), ("b",)])
    assert restrict(family, ["a", "b"]) == family


def test_restrict_singletons(abc):
    traced = restrict(singletons_family(abc), ["a", "b"])
    expected = SetFamily.from_label_sets(OrderedGround(("a", "b")), [("a",), ("b",), ()])
    assert traced == expected


def test_restrict_uses_ground_order(abc):
    traced = restrict(power_set_family(abc), ["c", "a"])
    assert traced.ground.labels == ("a", "c")


def test_restrict_unknown_label(abc):
    with pytest.raises(InputError):
        restrict(singletons_family(abc), ["q"])


def test_shatters_examples(abc):
    assert shatters(power_set_family(abc), ["a", "b", "c"])
    ab = OrderedGround(("a", "b"))
    assert not shatters(singletons_family(ab), ["a", "b"])
    assert shatters(SetFamily(ab, (0,)), [])


def test_vc_dimension_examples(chain6):
    assert vc_dimension(power_set_family(OrderedGround.chain(3))) == 3
    for n in range(2, 7):
        assert vc_dimension(singletons_family(OrderedGround.chain(n))) == 1
    assert vc_dimension(intervals_family(chain6, 1)) == 2


def test_vc_dimension_of_empty_family_is_an_error(abc):
    with pytest.raises(InputError):
        vc_dimension(SetFamily(abc, ()))


def test_shattered_sets_lists_witnesses(abc):
    family = SetFamily.from_words(abc, ["000", "100", "010", "110"])
    assert shattered_sets(family, 2) == [("a", "b")]
    assert shattered_sets(family, 1) == [("a",), ("b",)]


@given(families(max_n=6))
@settings(max_examples=200, deadline=None)
def test_vc_dimension_matches_exhaustive_search(family):
    assert vc_dimension(family) == naive_vc(family)



@given(families(max_n=6), st.data())
@settings(max_examples=200, deadline=None)
def test_restriction_is_closed_under_composition(family, data):
    labels = family.ground.labels
    outer = data.draw(st.sets(st.sampled_from(labels)), label="A")
    inner = data.draw(st.sets(st.sampled_from(sorted(outer))) if outer else st.just(set()), label="B")
    assert restrict(restrict(family, outer), inner) == restrict(family, inner)
    assert restrict(family, labels) == family


@given(families(max_n=6), st.data())
@settings(max_examples=200, deadline=None)
def test_restriction_does_not_raise_vc_dimension(family, data):
    subset = data.draw(st.sets(st.sampled_from(family.ground.labels), min_size=1), label="A")
    traced = restrict(family, subset)
    assert vc_dimension(traced) == naive_vc(traced)
    assert vc_dimension(traced) <= naive_vc(family)


@given(families(max_n=6))
@settings(max_examples=200, deadline=None)
def test_subsets_of_shattered_sets_are_shattered(family):
    for k in range(1, family.n + 1):
        for subset in shattered_sets(family, k):
            for smaller in combinations(subset, k - 1):
                assert shatters(family, smaller), (subset, smaller)


@pytest.mark.slow
def test_vc_dimension_matches_exhaustive_search_seeded():
    rng = random.Random(11)
    for _ in range(1000):
        n = rng.randint(1, 7)
        count = rng.randint(1, min(1 << n, 48))
        family = SetFamily(OrderedGround.chain(n), tuple(rng.sample(range(1 << n), count)))
        assert vc_dimension(family) == naive_vc(family)


# ---------------------------------------------------------------------------
# Sauer bound and profile


@pytest.mark.parametrize("n, d, expected", [(5, 2, 16), (3, 5, 8), (7, 2, 29), (4, 0, 1), (0, 0, 1)])
def test_sauer_bound(n, d, expected):
    assert sauer_bound(n, d) == expected


def test_sauer_bound_is_exact_for_large_inputs():
    assert sauer_bound(200, 3) == 1 + 200 + comb(200, 2) + comb(200, 3)


@pytest.mark.parametrize("n, d", [(-1, 2), (3, -1)])
def test_sauer_bound_rejects_negatives(n, d):
    with pytest.raises(InputError):
        sauer_bound(n, d)


def test_sauer_profile_power_set():
    profile = sauer_profile(power_set_family(OrderedGround.chain(3)))
    assert profile.counts == (1, 2, 4, 8)
    assert profile.bounds == (1, 2, 4, 8)
    assert profile.exact


def test_sauer_profile_singletons_with_empty():
    profile = sauer_profile(singletons_family(OrderedGround.chain(4), with_empty=True))
    assert profile.d == 1
    assert profile.counts[4] == 5
    assert profile.bounds[4] == 5
    assert profile.within_bounds()


def test_sauer_profile_cap_suggests_sampling():
    family = singletons_family(OrderedGround.chain(6))
    with pytest.raises(SizeCapError, match="sampled"):
        sauer_profile(family, cap=5)
    sampled = sauer_profile(family, sampled=True, samples_per_size=4, seed=3, cap=5)
    assert not sampled.exact
    assert sampled.within_bounds()


def test_sauer_profile_respects_environment_cap(monkeypatch):
    from vcmax.config import reload_config

    monkeypatch.setenv("VCMAX_CAP", "3")
    reload_config()
    with pytest.raises(SizeCapError):
        sauer_profile(singletons_family(OrderedGround.chain(4)))


@given(families(max_n=5))
@settings(max_examples=60, deadline=None)
def test_sauer_profile_never_exceeds_bound(family):
    profile = sauer_profile(family)
    assert profile.within_bounds()
    assert profile.counts[-1] == len(family)


# ---------------------------------------------------------------------------
# growth


def test_growth_of_quadratic_counts():
    estimate = estimate_growth_exponent(lambda k, rng: sauer_bound(k, 2), [8, 16, 32])
    assert 1.7 <= estimate.slope <= 2.0
    assert len(estimate.local_slopes) == 2


def test_growth_of_constant_counts():
    estimate = estimate_growth_exponent(lambda k, rng: 5, [4, 8, 16])
    assert estimate.slope == pytest.approx(0.0, abs=1e-9)
    assert not estimate.superpolynomial_suspected


def test_growth_flags_exponential_counts():
    estimate = estimate_growth_exponent(lambda k, rng: 2 ** k, [8, 16, 32])
    assert estimate.superpolynomial_suspected


@pytest.mark.parametrize("sizes", [[8], [8, 8], [16, 8], [0, 4]])
def test_growth_rejects_bad_sizes(sizes):
    with pytest.raises(InputError):
        estimate_growth_exponent(lambda k, rng: k, sizes)


def test_growth_is_deterministic_under_seed():
    family = intervals_family(OrderedGround.chain(12), 1)
    oracle = family_trace_oracle(family)
    one = estimate_growth_exponent(oracle, [3, 6, 12], seed=4)
    two = estimate_growth_exponent(oracle, [3, 6, 12], seed=4)
    assert one == two
    # the full chain always gives all intervals
    assert one.counts[-1] == len(family)


@given(st.integers(min_value=1, max_value=6))
def test_singletons_have_n_plus_one_traces_on_the_ground(n):
    family = singletons_family(OrderedGround.chain(n), with_empty=True)
    assert sauer_profile(family).counts[n] == n + 1
