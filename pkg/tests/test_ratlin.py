import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tropchow.ratlin import (
    INFINITE,
    LatticeBasis,
    LinearSystem,
    determinant,
    fourier_motzkin,
    hermite_normal_form,
    hrep_to_vrep,
    integer_kernel,
    lattice_index,
    lp_feasible,
    primitive_vector,
    rank,
    saturate,
    vrep_to_hrep,
)


def coset_count(rows, bound=60):
    """Index of a full-rank sublattice of Z^r by brute-force coset enumeration.

    Two points of a box are in the same coset iff their difference solves
    rows^T c = diff with integer c.
    """
    r = len(rows)
    det = abs(determinant(rows))
    size = int(det)
    box = itertools.product(range(size), repeat=r)
    reps = []
    for p in box:
        if not any(_same_coset(p, q, rows) for q in reps):
            reps.append(p)
            if len(reps) > bound:
                break
    return len(reps)


def _same_coset(p, q, rows):
    from tropchow.ratlin import solve

    diff = [a - b for a, b in zip(p, q)]
    cols = [list(col) for col in zip(*rows)]
    c = solve(cols, diff)
    return c is not None and all(x.denominator == 1 for x in c)


def test_lattice_index_examples():
    assert lattice_index(LatticeBasis(2, ((1, 1), (1, -1))), LatticeBasis.standard(2)) == 2
    assert lattice_index(LatticeBasis.standard(3), LatticeBasis.standard(3)) == 1
    assert lattice_index(LatticeBasis(2, ((2, 0),)), LatticeBasis.standard(2)) == INFINITE


def test_lattice_index_errors():
    with pytest.raises(ValueError):
        lattice_index(LatticeBasis(2, ((1, 0),)), LatticeBasis.standard(3))
    with pytest.raises(ValueError):
        lattice_index(LatticeBasis(2, ((0, 1),)), LatticeBasis(2, ((1, 0),)))
    with pytest.raises(ValueError):
        lattice_index(LatticeBasis(2, ((1, 0),)), LatticeBasis(2, ((2, 0),)))


def test_lattice_index_in_proper_sublattice():
    sup = LatticeBasis(3, ((1, 1, 0), (0, 1, 1)))
    sub = LatticeBasis(3, ((2, 2, 0), (0, 3, 3)))
    assert lattice_index(sub, sup) == 6


small = st.integers(-4, 4)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=3, max_size=3))
def test_index_matches_det_and_cosets(rows):
    det = determinant(rows)
    if det == 0:
        assert lattice_index(LatticeBasis(3, rows), LatticeBasis.standard(3)) == INFINITE
        return
    idx = lattice_index(LatticeBasis(3, rows), LatticeBasis.standard(3))
    assert idx == abs(det)
    h = hermite_normal_form(rows)
    assert abs(determinant(h)) == idx
    if idx <= 12:
        assert coset_count(rows) == idx


def test_saturate_examples():
    assert saturate(LatticeBasis(2, ((2, 0),))).rows == ((1, 0),)
    assert saturate(LatticeBasis(2, ((1, 1), (1, -1)))).rows == ((1, 0), (0, 1))
    assert saturate(LatticeBasis(2, ())).rows == ()


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(small, min_size=4, max_size=4), min_size=1, max_size=3))
def test_saturation_properties(rows):
    b = LatticeBasis(4, rows)
    s = saturate(b)
    assert saturate(s) == s
    if not any(any(r) for r in rows):
        return
    assert rank(list(s.rows)) == rank(rows)
    # [sup : B] = [sup : sat(B)] * [sat(B) : B] for sup = Z^4 restricted to the span
    sup = s
    idx_b = lattice_index(b, sup)
    if idx_b != INFINITE:
        assert idx_b % lattice_index(s, sup) == 0
    for row in rows:
        g = math.gcd(*row)
        if g:
            assert _in_lattice(tuple(a // g for a in row), s.rows)


def _in_lattice(v, rows):
    from tropchow.ratlin import solve

    cols = [list(c) for c in zip(*rows)]
    c = solve(cols, list(v))
    return c is not None and all(x.denominator == 1 for x in c)


def test_hnf_idempotent():
    rows = [(2, 4, 6), (1, 3, 5), (0, 2, 4)]
    h = hermite_normal_form(rows)
    assert hermite_normal_form(h) == h


def test_integer_kernel():
    ker = integer_kernel([(2, 4, 6)], 3)
    assert len(ker) == 2
    for k in ker:
        assert 2 * k[0] + 4 * k[1] + 6 * k[2] == 0
    # kernel basis is saturated: (x,y,z) = (-2y-3z, y, z) has an integer basis
    assert saturate(LatticeBasis(3, ker)).rows == tuple(hermite_normal_form(ker))


def test_primitive_vector():
    assert primitive_vector((2, 4, 6, 0), 3) == (0, 1, 2, -1)
    assert primitive_vector((1, 0, 0, 0), 3) == (0, -1, -1, -1)
    with pytest.raises(ValueError):
        primitive_vector((3, 3, 3, 3), 3)


@pytest.mark.parametrize("method", ["simplex", "fourier-motzkin"])
def test_lp_examples(method):
    s = LinearSystem(1, inequalities=[((1,), 1), ((-1,), -1)])
    assert lp_feasible(s, method) == (1,)
    s = LinearSystem(1, inequalities=[((1,), 1), ((-1,), -1)], strict_inequalities=[((1,), 1)])
    assert lp_feasible(s, method) is None
    assert lp_feasible(LinearSystem(3), method) == (0, 0, 0)


@pytest.mark.parametrize("method", ["simplex", "fourier-motzkin"])
def test_lp_cone_coefficients(method):
    # (0,2,0,5,2) = a*e4 + b*(e2+e4+e5) in R^5/R, written in the chart
    g1 = (0, 0, 0, 1, 0)
    g2 = (0, 1, 0, 1, 1)
    target = (0, 2, 0, 5, 2)
    # unknowns a, b, t (t = shift along (1,...,1))
    eqs = [((g1[i], g2[i], 1), target[i]) for i in range(5)]
    s = LinearSystem(3, equalities=eqs, inequalities=[((1, 0, 0), 0), ((0, 1, 0), 0)])
    w = lp_feasible(s, method)
    assert w[:2] == (3, 2)


rows3 = st.lists(st.integers(-3, 3), min_size=3, max_size=3)


@settings(max_examples=150, deadline=None)
@given(
    st.lists(st.tuples(rows3, st.integers(-4, 4)), max_size=5),
    st.lists(st.tuples(rows3, st.integers(-4, 4)), max_size=3),
    st.lists(st.tuples(rows3, st.integers(-4, 4)), max_size=1),
)
def test_simplex_agrees_with_elimination(ineq, strict, eq):
    s = LinearSystem(3, equalities=eq, inequalities=ineq, strict_inequalities=strict)
    a = lp_feasible(s)
    b = fourier_motzkin(s)
    assert (a is None) == (b is None)
    if a is not None:
        assert s.satisfied_by(a)
        assert s.satisfied_by(b)


def test_vrep_to_hrep_cone():
    # cone(e0, e1) in R^4/R in the chart (e0 -> (-1,-1,-1), e1 -> (1,0,0))
    eqs, ineqs = vrep_to_hrep([(0, 0, 0)], [(-1, -1, -1), (1, 0, 0)])
    assert len(eqs) == 1 and len(ineqs) == 2
    for g in [(-1, -1, -1), (1, 0, 0), (0, -1, -1)]:
        assert all(sum(a * x for a, x in zip(row, g)) == b for row, b in eqs)
        assert all(sum(a * x for a, x in zip(row, g)) >= b for row, b in ineqs)
    assert not all(sum(a * x for a, x in zip(row, (0, 1, 0))) >= b for row, b in ineqs + eqs)


def test_vrep_to_hrep_trivial_cases():
    eqs, ineqs = vrep_to_hrep([(0, 0, 0)])
    assert len(eqs) == 3 and ineqs == []
    eqs, ineqs = vrep_to_hrep([(0, 0, 0)], lineality=[(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert eqs == [] and ineqs == []
    with pytest.raises(ValueError):
        vrep_to_hrep([])


@settings(max_examples=60, deadline=None)
@given(st.lists(rows3, min_size=1, max_size=4), st.lists(rows3, max_size=3))
def test_vrep_hrep_roundtrip(verts, rays):
    eqs, ineqs = vrep_to_hrep(verts, rays)
    for v in verts:
        assert all(sum(a * x for a, x in zip(r, v)) == b for r, b in eqs)
        assert all(sum(a * x for a, x in zip(r, v)) >= b for r, b in ineqs)
    for d in rays:
        assert all(sum(a * x for a, x in zip(r, d)) == 0 for r, _ in eqs)
        assert all(sum(a * x for a, x in zip(r, d)) >= 0 for r, _ in ineqs)
    back = hrep_to_vrep(eqs, ineqs, 3)
    assert back is not None
    bv, br, bl = back
    # every recovered vertex lies in the original hull: check via LP on convex coefficients
    for p in bv:
        nv, nr = len(verts), len(rays)
        rows = [[Fraction(verts[j][i]) for j in range(nv)] + [Fraction(rays[j][i]) for j in range(nr)] for i in range(3)]
        eq = [(r, p[i]) for i, r in enumerate(rows)] + [([1] * nv + [0] * nr, 1)]
        ineq = [([1 if j == t else 0 for j in range(nv + nr)], 0) for t in range(nv + nr)]
        assert lp_feasible(LinearSystem(nv + nr, equalities=eq, inequalities=ineq)) is not None
