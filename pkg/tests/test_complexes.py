import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tropchow.complexes import (
    Cell,
    QuotientVector,
    WeightedComplex,
    balancing_check,
    cell_contains,
    complex_equal,
    fan_from_rays,
    lattice_normal,
    linear_combination,
    negate_complex,
    normalize,
)

E3 = [QuotientVector.unit(i, 3) for i in range(4)]


def ray_sum_oracle(rays, mults):
    """Weighted sum of integer vectors in the chart, the balancing residual of a 1-dim fan."""
    total = [0, 0, 0]
    for v, m in zip(rays, mults):
        c = QuotientVector(v).chart()
        total = [t + m * int(x) for t, x in zip(total, c)]
    return tuple(total)


def test_quotient_vector_is_canonical():
    assert QuotientVector((3, 4, 5)) == QuotientVector((0, 1, 2))
    assert QuotientVector((1, 1, 1)).is_zero()
    assert QuotientVector.from_chart((1, 2)).entries == (0, 1, 2)
    assert -QuotientVector((0, 1, 2)) == QuotientVector((2, 1, 0))


def test_quotient_vector_rejects_floats():
    with pytest.raises(TypeError):
        QuotientVector((0.5, 1))


def test_cell_dimension_and_primitive_rays():
    c = Cell.cone([(0, 2, 0, 0), (0, 0, 3, 0)])
    assert c.dim == 2
    assert QuotientVector((0, 1, 0, 0)) in c.rays
    assert Cell.point((1, 2, 3)).dim == 0
    seg = Cell(2, (QuotientVector((0, 0, 0)), QuotientVector((0, 1, 0))))
    assert seg.dim == 1


def test_cell_contains():
    c = Cell.cone([(0, 0, 0, 1, 0), (0, 1, 0, 1, 1)])
    assert cell_contains(c, (6, 8, 6, 11, 8))
    assert not cell_contains(Cell.cone([E3[0]]), E3[1])
    assert cell_contains(Cell.cone([E3[0]]), (0, 0, 0, 0))
    assert not cell_contains(Cell.cone([E3[0]]), (0, 0, 0, 0), relative_interior=True)


def test_sigma0_balanced():
    s0 = fan_from_rays([(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)], [4] * 4)
    assert balancing_check(s0).balanced


def test_sigma6_residual_matches_ray_sum():
    rays, mults = [(3, -1, -3, 1), (0, 0, 1, 0), (-1, 3, -3, 1)], [1, 4, 1]
    r = balancing_check(fan_from_rays(rays, mults))
    assert not r.balanced
    (_, residual), = r.failures
    oracle = ray_sum_oracle(rays, mults)
    assert tuple(residual) == oracle == QuotientVector((2, 2, -2, 2)).chart()


def test_fan_from_rays_folds_content():
    f = fan_from_rays([(2, 0, 0, 0)], [3])
    (c, m), = f.cells
    assert m == 6 and c.rays == (QuotientVector((1, 0, 0, 0)),)


def test_standard_plane_2_4_balanced_and_not_after_removal():
    E = [QuotientVector.unit(i, 4) for i in range(5)]
    cells = tuple((Cell.cone([E[i], E[j]]), 1) for i, j in itertools.combinations(range(5), 2))
    assert balancing_check(WeightedComplex(4, 2, cells)).balanced
    assert not balancing_check(WeightedComplex(4, 2, cells[:-1])).balanced


def test_segment_is_unbalanced():
    seg = WeightedComplex(2, 1, ((Cell(2, (QuotientVector((0, 0, 0)), QuotientVector((0, 1, 0)))), 1),))
    r = balancing_check(seg)
    assert not r.balanced and len(r.failures) == 2


def test_subdivision_is_equal():
    c = Cell.cone([E3[0], E3[1]])
    mid = E3[0] + E3[1]
    a = WeightedComplex(3, 2, ((c, 1),))
    b = WeightedComplex(3, 2, ((Cell.cone([E3[0], mid]), 1), (Cell.cone([mid, E3[1]]), 1)))
    assert complex_equal(a, b).equal
    cmp = complex_equal(a, b.scaled(2))
    assert not cmp.equal and cmp.weights == (1, 2)
    assert complex_equal(a, b.scaled(2), "support_only").equal
    merged = normalize(WeightedComplex(3, 2, a.cells + b.cells))
    assert all(m == 2 for _, m in merged.cells)


def test_overlapping_cells_sum():
    a = WeightedComplex(3, 1, ((Cell.cone([E3[0]]), 1), (Cell.cone([E3[0]]), 2)))
    b = WeightedComplex(3, 1, ((Cell.cone([E3[0]]), 3),))
    assert complex_equal(a, b).equal


def test_linear_combination_cancels():
    f = fan_from_rays([(1, 0, 0, 0), (0, 1, 0, 0)], [1, 2])
    assert linear_combination([(1, f), (-1, f)]).cells == ()
    assert complex_equal(linear_combination([(2, f), (1, f)]), f.scaled(3)).equal


def test_lattice_normal_examples():
    # the normal takes the smallest positive value of ell on the saturated tangent lattice
    for tangent, ell in [([(1, 0), (0, 1)], (0, 1)), ([(2, 0), (0, 2)], (0, 1)), ([(1, 1), (1, -1)], (0, 1)),
                         ([(1, 0, 0), (0, 1, 0)], (0, 2, 0))]:
        u = lattice_normal(tangent, ell)
        val = sum(a * b for a, b in zip(ell, u))
        assert val == min(abs(x) for x in ell if x)
    with pytest.raises(ValueError):
        lattice_normal([(1, 0, 0)], (0, 1, 0))


int_vec = st.tuples(*[st.integers(-3, 3)] * 4).filter(lambda v: len(set(v)) > 1)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(int_vec, st.integers(1, 4)), min_size=1, max_size=5))
def test_balancing_matches_ray_sum_oracle(items):
    rays = [v for v, _ in items]
    mults = [m for _, m in items]
    fan = fan_from_rays(rays, mults)
    assert balancing_check(fan).balanced == (ray_sum_oracle(rays, mults) == (0, 0, 0))


@settings(max_examples=40, deadline=None)
@given(st.lists(st.tuples(int_vec, st.integers(-3, 3)), min_size=1, max_size=4), st.integers(-2, 3))
def test_scaling_and_negation_properties(items, a):
    fan = fan_from_rays([v for v, _ in items], [m for _, m in items])
    assert complex_equal(linear_combination([(a, fan)]), normalize(fan.scaled(a))).equal
    assert complex_equal(negate_complex(negate_complex(fan)), fan).equal
    assert balancing_check(negate_complex(fan)).balanced == balancing_check(fan).balanced
