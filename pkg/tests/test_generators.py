#!/usr/bin/env python3
"""
Tests for the example family constructors and geometric trace families.
"""

import random
from fractions import Fraction
from itertools import product

import pytest

from vcmax.config import reload_config
from vcmax.errors import InputError, ParseError, SizeCapError
from vcmax.generators import (
    PointSample,
    PolySpec,
    bounded_size_family,
    format_point_sample,
    halfplane_traces,
    intervals_family,
    parse_point_sample,
    parse_poly_spec,
    polynomial_traces,
    random_convex_union,
    random_family,
    rectangle_traces,
    run_count,
)
from vcmax.maximum import is_d_maximum
from vcmax.sets import OrderedGround, sauer_bound, vc_dimension

GRID = [-3, -2, -1, 0, 1, 2, 3]
AFFINE_PLANE = PolySpec(((0, 0), (1, 0), (0, 1)))


def parabola(n: int) -> PointSample:
    return PointSample(2, tuple((t, t * t + 1) for t in range(1, n + 1)))


# ---------------------------------------------------------------------------
# combinatorial families


def test_run_count():
    assert run_count(0) == 0
    assert run_count(0b111) == 1
    assert run_count(0b10101) == 3


def test_intervals_sizes(chain6):
    assert len(intervals_family(chain6, 1)) == 22
    assert len(intervals_family(chain6, 2)) == 57
    assert 0 in intervals_family(chain6, 1)


@pytest.mark.parametrize("n, k", [(4, 1), (6, 1), (6, 2), (7, 3)])
def test_intervals_are_maximum(n, k):
    family = intervals_family(OrderedGround.chain(n), k)
    assert is_d_maximum(family, 2 * k)


def test_intervals_errors(chain6):
    with pytest.raises(InputError):
        intervals_family(chain6, 0)
    with pytest.raises(SizeCapError):
        intervals_family(chain6, 1, cap=5)


def test_bounded_size_family(abc):
    family = bounded_size_family(abc, 1)
    assert family.words() == ["000", "100", "010", "001"]
    assert len(bounded_size_family(OrderedGround.chain(5), 2)) == sauer_bound(5, 2)
    with pytest.raises(InputError):
        bounded_size_family(abc, 4)
    with pytest.raises(InputError):
        bounded_size_family(abc, -1)


def test_random_family_is_deterministic(chain6):
    one = random_family(chain6, 10, seed=7)
    assert one == random_family(chain6, 10, seed=7)
    assert len(one) == 10
    with pytest.raises(InputError):
        random_family(chain6, 0)
    with pytest.raises(InputError):
        random_family(chain6, 65)


def test_random_convex_union_is_seeded():
    one = random_convex_union(random.Random(12))
    two = random_convex_union(random.Random(12))
    assert one == two


# ---------------------------------------------------------------------------
# point samples and specs


def test_point_sample_validation():
    with pytest.raises(InputError):
        PointSample(0, ())
    with pytest.raises(InputError, match="distinct"):
        PointSample(2, ((1, 2), (1, 2)))
    with pytest.raises(InputError, match="dimension"):
        PointSample(2, ((1, 2, 3),))
    with pytest.raises(InputError, match="label"):
        PointSample(1, ((1,), (2,)), labels=("a",))


def test_point_sample_labels_and_random_draws():
    sample = parabola(3)
    assert sample.ground.labels == ("p0", "p1", "p2")
    drawn = PointSample.random(2, 5, seed=1)
    assert drawn == PointSample.random(2, 5, seed=1)
    assert drawn.n == 5


def test_general_position():
    assert parabola(7).general_position
    assert not PointSample(2, ((1, 1), (2, 2), (3, 3))).general_position
    assert not PointSample(2, ((0, 0), (1, 2))).general_position
    assert PointSample(1, ((1,),)).general_position is None


def test_parse_point_sample():
    sample = parse_point_sample("# sample\n2\n1 2\n3/2, 4\n")
    assert sample.points == ((Fraction(1), Fraction(2)), (Fraction(3, 2), Fraction(4)))
    assert parse_point_sample(format_point_sample(sample)) == sample


@pytest.mark.parametrize("text, line", [("x\n1 2\n", 1), ("2\n1 2\n1 2 3\n", 3), ("2\n1 q\n", 2)])
def test_parse_point_sample_errors(text, line):
    with pytest.raises(ParseError) as info:
        parse_point_sample(text)
    assert info.value.line == line


def test_parse_point_sample_rejects_duplicates():
    with pytest.raises(ParseError, match="distinct"):
        parse_point_sample("1\n2\n2\n")


def test_parse_poly_spec():
    spec = parse_poly_spec("*0 0\n1 0\n0 1\n")
    assert spec == AFFINE_PLANE
    assert spec.d == 2
    assert spec.arity == 2
    assert spec.features((Fraction(2), Fraction(3))) == (1, 2, 3)


@pytest.mark.parametrize("text", ["0 0\n", "0 0\n1 a\n", "0 0\n1\n", "0 0\n0 0\n", "0 0\n-1 0\n"])
def test_parse_poly_spec_errors(text):
    with pytest.raises(ParseError):
        parse_poly_spec(text)


# ---------------------------------------------------------------------------
# geometric traces


def test_halfplane_traces_on_parabola():
    result = halfplane_traces(parabola(7))
    assert len(result.family) == 29
    assert result.completeness == "exact"
    assert result.general_position
    assert vc_dimension(result.family) == 2
    assert is_d_maximum(result.family, 2)


def test_halfplane_traces_single_point():
    result = halfplane_traces(PointSample(2, ((1, 1),)))
    assert len(result.family) == 2


def test_halfplane_traces_collinear_points():
    result = halfplane_traces(PointSample(2, ((1, 1), (2, 2), (3, 3))))
    assert len(result.family) == 4
    assert result.general_position is False


def test_halfplane_traces_point_at_origin():
    result = halfplane_traces(PointSample(2, ((0, 0),)))
    assert result.degenerate_points == ("p0",)
    assert result.family.members == (1,)


def test_halfplane_traces_need_planar_points():
    with pytest.raises(InputError):
        halfplane_traces(PointSample(1, ((1,),)))


def test_geometry_cap(monkeypatch):
    monkeypatch.setenv("VCMAX_GEOMETRY_CAP", "3")
    reload_config()
    with pytest.raises(SizeCapError, match="VCMAX_GEOMETRY_CAP"):
        halfplane_traces(parabola(4))


@pytest.mark.parametrize("n", range(1, 7))
def test_rectangle_traces_on_a_diagonal(n):
    sample = PointSample(2, tuple((i, i) for i in range(n)))
    assert len(rectangle_traces(sample).family) == n * (n - 1) // 2 + n + 1


def test_rectangle_traces_diamond_with_centre():
    sample = PointSample(2, ((0, 1), (1, 0), (2, 1), (1, 2), (1, 1)))
    family = rectangle_traces(sample).family
    assert len(family) < 31
    assert vc_dimension(family) == 4


def test_polynomial_traces_match_halfplanes():
    sample = parabola(6)
    poly = polynomial_traces(sample, AFFINE_PLANE, GRID)
    assert poly.completeness == "exact"
    assert poly.family == halfplane_traces(sample).family


def test_polynomial_traces_on_the_line():
    sample = PointSample(1, ((1,), (2,), (-1,)))
    result = polynomial_traces(sample, PolySpec(((0,), (1,))), GRID)
    assert len(result.family) == 4


def test_polynomial_traces_degenerate_points():
    sample = PointSample(2, ((0, 1), (0, 2)))
    result = polynomial_traces(sample, PolySpec(((0, 0), (1, 0))), GRID)
    assert result.degenerate_points == ("p0", "p1")
    assert len(result.family) == 1


def _grid_point_traces(sample, spec, grid):
    traces = set()
    for c in product(grid, repeat=spec.d):
        mask = 0
        for i, point in enumerate(sample.points):
            u = spec.features(point)
            if u[0] + sum(ck * uk for ck, uk in zip(c, u[1:])) >= 0:
                mask |= 1 << i
        traces.add(mask)
    return traces


def test_polynomial_traces_beyond_two_coefficients_are_a_lower_bound():
    sample = PointSample(2, ((1, 2), (2, 1), (-1, 3), (3, -2), (0, 4), (-2, -1)))
    spec = PolySpec(((0, 0), (1, 0), (0, 1), (2, 0)))
    coarse = polynomial_traces(sample, spec, [-1, 0, 1], seed=5)
    fine = polynomial_traces(sample, spec, GRID, seed=5)
    assert fine.completeness == "lower bound"
    assert set(coarse.family.members) <= set(fine.family.members)
    assert _grid_point_traces(sample, spec, GRID) <= set(fine.family.members)
    assert len(fine.family) <= sauer_bound(sample.n, spec.d)
    assert vc_dimension(fine.family) <= spec.d
    assert fine.family == polynomial_traces(sample, spec, GRID, seed=5).family


def test_polynomial_traces_shatter_three_points_with_a_square_term():
    sample = PointSample(2, ((1, 0), (0, 1), (-1, -1)))
    spec = PolySpec(((0, 0), (1, 0), (0, 1), (2, 0)))
    result = polynomial_traces(sample, spec, GRID)
    assert len(result.family) == sauer_bound(3, 3) == 8
    assert vc_dimension(result.family) == 3


def test_polynomial_traces_errors():
    with pytest.raises(InputError, match="grid"):
        polynomial_traces(parabola(3), AFFINE_PLANE, [])
    with pytest.raises(InputError, match="variables"):
        polynomial_traces(PointSample(1, ((1,),)), AFFINE_PLANE, GRID)
