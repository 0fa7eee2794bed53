#!/usr/bin/env python3
"""
Tests for maximum classes: detection, forbidden labels and codes, reconstruction,
finite characterization, pattern induction and witness search.
"""

import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import families, maximum_corpus
from oracles import naive_induces
from vcmax.errors import InputError, NotMaximumError, ParseError, SizeCapError
from vcmax.generators import (
    bounded_size_family,
    halfplane_traces,
    intervals_family,
    power_set_family,
    prefix_family,
    singletons_family,
)
from vcmax.generators.models import PointSample
from vcmax.genus import pattern_avoiding_family
from vcmax.maximum import (
    Code,
    ForbiddenLabelTable,
    all_codes,
    forbidden_codes,
    forbidden_label,
    forbidden_label_table,
    format_label_table,
    induces_pattern,
    is_d_maximum,
    is_finitely_characterized,
    is_subsequence,
    load_label_table,
    maximum_verdict,
    parse_label_table,
    pascal_split,
    reconstruct_from_labels,
    vcm_witness_search,
)
from vcmax.sets import OrderedGround, SetFamily, restrict, sauer_bound

CODES_UP_TO_4 = [c for length in range(1, 5) for c in all_codes(length)]
MAXIMUM_6 = maximum_corpus(6)
MAXIMUM_7 = maximum_corpus(7)
MAXIMUM_8_TO_10 = maximum_corpus(10, min_n=8)


# ---------------------------------------------------------------------------
# codes


def test_code_parse_and_format():
    code = Code.parse("101")
    assert str(code) == "101"
    assert len(code) == 3
    assert list(code) == [1, 0, 1]
    for bad in ("", "12", "1 0"):
        with pytest.raises(InputError):
            Code.parse(bad)


def test_all_codes_lexicographic():
    assert [str(c) for c in all_codes(2)] == ["00", "01", "10", "11"]


def test_is_subsequence_examples():
    assert is_subsequence(Code.parse("11"), Code.parse("101"))
    assert not is_subsequence(Code.parse("00"), Code.parse("101"))
    eta = Code.parse("0110")
    assert is_subsequence(eta, eta)


def test_induces_pattern_examples(abc):
    assert induces_pattern(abc, ["b"], Code.parse("010"))
    assert not induces_pattern(abc, ["b"], Code.parse("11"))
    assert induces_pattern(abc, ["a", "c"], Code.parse("101"))
    assert not induces_pattern(abc, ["a"], Code.parse("0000"))


@given(st.integers(min_value=0, max_value=7).flatmap(
    lambda n: st.tuples(st.just(n), st.integers(min_value=0, max_value=(1 << n) - 1),
                        st.sampled_from(CODES_UP_TO_4))))
@settings(max_examples=300, deadline=None)
def test_induces_pattern_matches_exhaustive_search(case):
    n, mask, code = case
    ground = OrderedGround.chain(n)
    word = [(mask >> i) & 1 for i in range(n)]
    assert induces_pattern(ground, ground.labels_of(mask), code) == naive_induces(word, code.bits)


@pytest.mark.slow
def test_induces_pattern_matches_exhaustive_search_seeded():
    rng = random.Random(7)
    for _ in range(1000):
        n = rng.randint(0, 7)
        mask = rng.randrange(1 << n) if n else 0
        code = Code(tuple(rng.randint(0, 1) for _ in range(rng.randint(1, 5))))
        ground = OrderedGround.chain(n)
        word = [(mask >> i) & 1 for i in range(n)]
        assert induces_pattern(ground, ground.labels_of(mask), code) == naive_induces(word, code.bits)


# ---------------------------------------------------------------------------
# maximality


def test_power_set_is_n_maximum():
    for n in range(1, 6):
        assert is_d_maximum(power_set_family(OrderedGround.chain(n)), n)


def test_intervals_on_six_chain_are_two_maximum(chain6):
    family = intervals_family(chain6, 1)
    assert len(family) == 22
    assert is_d_maximum(family, 2)
    assert is_d_maximum(family, 2, strict=True)


def test_singletons_without_empty_are_not_one_maximum():
    family = singletons_family(OrderedGround.chain(3))
    assert not is_d_maximum(family, 1)
    assert not is_d_maximum(family, 1, strict=True)


def test_strict_mode_respects_cap():
    family = singletons_family(OrderedGround.chain(5), with_empty=True)
    with pytest.raises(SizeCapError):
        is_d_maximum(family, 1, strict=True, cap=4)


def test_maximum_verdict_names_smallest_violation(abc):
    verdict = maximum_verdict(singletons_family(abc), 1)
    assert not verdict.is_maximum
    assert verdict.expected_size == 4
    assert verdict.size == 3
    # every pair still sees ∅ through the third singleton
    assert verdict.violation == ("a", "b", "c")
    assert verdict.violation_count == 3
    assert verdict.to_dict()["violation"] == {"subset": ["a", "b", "c"], "traces": 3, "expected": 4}


def test_maximum_verdict_for_maximum_family(chain6):
    verdict = maximum_verdict(intervals_family(chain6, 1), 2)
    assert verdict.is_maximum
    assert verdict.violation is None
    assert verdict.vc == 2


@pytest.mark.parametrize("name, family, d", MAXIMUM_6, ids=[case[0] for case in MAXIMUM_6])
def test_generated_families_are_maximum(name, family, d):
    assert is_d_maximum(family, d)
    assert len(family) == sauer_bound(family.n, d)


def _random_family_near_bounds(rng: random.Random) -> SetFamily:
    n = rng.randint(1, 8)
    total = 1 << n
    if rng.random() < 0.5:
        size = min(total, sauer_bound(n, rng.randint(0, n)))
    else:
        size = rng.randint(1, total)
    return SetFamily(OrderedGround.chain(n), tuple(rng.sample(range(total), size)))


@given(families(max_n=5), st.integers(min_value=0, max_value=5))
@settings(max_examples=300, deadline=None)
def test_fast_and_strict_checks_agree(family, d):
    assert is_d_maximum(family, d) == is_d_maximum(family, d, strict=True)


@pytest.mark.slow
def test_fast_and_strict_checks_agree_seeded():
    rng = random.Random(20240611)
    agreed_maximum = 0
    for _ in range(10_000):
        family = _random_family_near_bounds(rng)
        for d in range(family.n + 1):
            fast = is_d_maximum(family, d)
            assert fast == is_d_maximum(family, d, strict=True), (family.words(), d)
            agreed_maximum += fast
    assert agreed_maximum > 0


@pytest.mark.parametrize("name, family, d", MAXIMUM_6, ids=[case[0] for case in MAXIMUM_6])
def test_restrictions_of_maximum_families_stay_maximum(name, family, d):
    labels = family.ground.labels
    for k in range(family.n + 1):
        for subset in combinations(labels, k):
            traced = restrict(family, subset)
            assert is_d_maximum(traced, d, strict=True), (name, subset)


# ---------------------------------------------------------------------------
# forbidden labels and codes


def test_forbidden_labels_of_prefix_family():
    family = prefix_family(OrderedGround.chain(3))
    assert forbidden_label(family, ["1", "3"]) == ("3",)
    assert forbidden_label(family, ["2", "3"]) == ("3",)
    assert forbidden_codes(family, 1) == frozenset({Code.parse("01")})


def test_forbidden_labels_of_intervals(chain6):
    family = intervals_family(chain6, 1)
    for a, b, c in combinations(chain6.labels, 3):
        assert forbidden_label(family, [a, b, c]) == (a, c)
    assert forbidden_codes(family, 2) == frozenset({Code.parse("101")})


def test_forbidden_label_requires_exactly_one_missing_trace(abc):
    with pytest.raises(NotMaximumError) as info:
        forbidden_label(power_set_family(abc), ["a", "b"])
    assert info.value.subset == ("a", "b")
    assert info.value.missing == 0
    assert info.value.exit_code == 1


@pytest.mark.parametrize("d", range(0, 4))
def test_pattern_avoiding_families_have_one_forbidden_code(d):
    for eta in all_codes(d + 1):
        for n in range(d + 1, 9):
            family = pattern_avoiding_family(OrderedGround.chain(n), eta)
            assert forbidden_codes(family, d) == frozenset({eta})


@pytest.mark.slow
def test_pattern_avoiding_codes_up_to_ten():
    for d in range(0, 4):
        for eta in all_codes(d + 1):
            for n in range(d + 1, 11):
                family = pattern_avoiding_family(OrderedGround.chain(n), eta)
                assert forbidden_codes(family, d) == frozenset({eta})


# ---------------------------------------------------------------------------
# reconstruction


def test_reconstruct_prefix_family():
    family = prefix_family(OrderedGround.chain(3))
    rebuilt = reconstruct_from_labels(forbidden_label_table(family, 1))
    assert len(rebuilt) == 4
    assert rebuilt == family


def test_reconstruct_single_entry(abc):
    table = ForbiddenLabelTable(abc, 2, {("a", "b", "c"): ("b",)})
    rebuilt = reconstruct_from_labels(table)
    assert len(rebuilt) == 7
    assert abc.mask_of(["b"]) not in rebuilt


def test_reconstruct_incomplete_table(abc):
    table = ForbiddenLabelTable(abc, 1, {("a", "b"): ()})
    with pytest.raises(InputError, match="missing"):
        reconstruct_from_labels(table)


def test_table_rejects_label_outside_key(abc):
    with pytest.raises(InputError):
        ForbiddenLabelTable(abc, 1, {("a", "b"): ("c",)})
    with pytest.raises(InputError):
        ForbiddenLabelTable(abc, 1, {("a",): ()})


def _halfplane_family():
    points = ((1, 2), (2, 5), (3, 10), (4, 17), (5, 26))
    return halfplane_traces(PointSample(2, points)).family


@pytest.mark.parametrize("name, family, d", MAXIMUM_7, ids=[case[0] for case in MAXIMUM_7])
def test_labels_round_trip(name, family, d):
    table = forbidden_label_table(family, d)
    assert reconstruct_from_labels(table) == family


@pytest.mark.slow
@pytest.mark.parametrize("name, family, d", MAXIMUM_8_TO_10, ids=[case[0] for case in MAXIMUM_8_TO_10])
def test_labels_round_trip_on_larger_families(name, family, d):
    assert reconstruct_from_labels(forbidden_label_table(family, d)) == family


def test_labels_round_trip_on_halfplane_traces():
    family = _halfplane_family()
    assert is_d_maximum(family, 2)
    assert reconstruct_from_labels(forbidden_label_table(family, 2)) == family


def test_label_table_text_format(chain6):
    table = forbidden_label_table(intervals_family(chain6, 1), 2)
    text = format_label_table(table)
    assert text.startswith("@ground 1 2 3 4 5 6\n@d 2\n")
    assert "1,2,3 : 1,3" in text
    assert parse_label_table(text) == table
    assert load_label_table(text) == table


def test_label_table_parse_errors(abc):
    with pytest.raises(ParseError) as info:
        parse_label_table("@ground a b c\na,b : a\na,b\n")
    assert info.value.line == 3
    with pytest.raises(InputError, match="@ground"):
        parse_label_table("a,b : a\n")
    # an empty right side is the empty label
    table = parse_label_table("a,b :\n", ground=abc)
    assert table.entries == {("a", "b"): ()}


def test_label_table_rejects_reordered_duplicate_keys(abc):
    with pytest.raises(ParseError, match="duplicate") as info:
        parse_label_table("@ground a b c\n@d 1\na,b : a\nb,a : b\n")
    assert info.value.line == 4
    with pytest.raises(InputError, match="duplicate"):
        ForbiddenLabelTable(abc, 1, {("a", "b"): ("a",), ("b", "a"): ("b",)})


def test_label_table_json_mirror(chain6):
    import json

    table = forbidden_label_table(bounded_size_family(chain6, 2), 2)
    assert load_label_table(json.dumps(table.to_dict())) == table


# ---------------------------------------------------------------------------
# finite characterization


def test_intervals_characterized_by_101():
    family = intervals_family(OrderedGround.chain(5), 1)
    assert is_finitely_characterized(family, Code.parse("101"))
    assert not is_finitely_characterized(family, Code.parse("010"))


def test_power_set_is_not_characterized_by_short_codes():
    family = power_set_family(OrderedGround.chain(4))
    for eta in CODES_UP_TO_4:
        assert not is_finitely_characterized(family, eta)


def test_pattern_avoiders_are_characterized():
    for eta in all_codes(3):
        family = pattern_avoiding_family(OrderedGround.chain(6), eta)
        assert is_finitely_characterized(family, eta)


def test_characterization_with_explicit_probes(chain6):
    family = intervals_family(chain6, 1)
    assert is_finitely_characterized(family, Code.parse("101"), probes=[["1", "3", "5"], ["2", "6"]])


# ---------------------------------------------------------------------------
# witness search and Pascal recursion


def test_vcm_witness_on_intervals():
    family = intervals_family(OrderedGround.chain(10), 1)
    result = vcm_witness_search(family, 2, 6)
    assert result.found
    assert len(result.witness) == 6
    assert result.exhaustive


def test_vcm_witness_on_power_set():
    ground = OrderedGround.chain(3)
    result = vcm_witness_search(power_set_family(ground), 3, 5)
    assert result.found
    assert result.witness == ground.labels


def test_vcm_witness_on_singletons_drops_one_point():
    family = singletons_family(OrderedGround.chain(4))
    result = vcm_witness_search(family, 1, 4)
    assert result.found
    assert len(result.witness) == 3


def test_vcm_not_found_is_exhaustive():
    family = SetFamily(OrderedGround.chain(4), (0,))
    result = vcm_witness_search(family, 1, 4)
    assert not result.found
    assert result.exhaustive
    assert not result.budget_exhausted


def test_vcm_budget_exhaustion_is_reported():
    family = SetFamily(OrderedGround.chain(6), (0,))
    result = vcm_witness_search(family, 1, 6, budget=5)
    assert not result.found
    assert result.budget_exhausted
    assert not result.exhaustive


def test_vcm_random_search_beyond_exhaustive_cap():
    family = intervals_family(OrderedGround.chain(8), 1)
    result = vcm_witness_search(family, 2, 5, seed=1, exhaustive_cap=4)
    assert result.found
    assert not result.exhaustive
    assert len(result.witness) == 5


@pytest.mark.parametrize("name, family, d", MAXIMUM_6, ids=[case[0] for case in MAXIMUM_6])
def test_pascal_split(name, family, d):
    split = pascal_split(family)
    assert len(family) == len(split.reduced) + len(split.tail)
    if d >= 1 and split.reduced.members:
        assert is_d_maximum(split.reduced, d - 1)
