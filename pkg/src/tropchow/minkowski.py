"""Weighted Minkowski sums of complexes.

The pairwise sum of cells s1, s2 of dimensions d1, d2 gets weight
m1 * m2 * [N_{s1+s2} : N_{s1} + N_{s2}] when dim(s1+s2) = d1 + d2 and 0
otherwise, where N_s is the lattice of integer points of the linear span of
s - s.  Overlapping pairwise sums are then merged on a common refinement.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .complexes import Cell, QuotientVector, WeightedComplex, negate_complex, normalize
from .ratlin import INFINITE, LatticeBasis, lattice_index, saturate


@dataclass(frozen=True)
class PairwiseSumRecord:
    left_cell: Cell
    right_cell: Cell
    sum_cell: Cell
    raw_weight: Fraction


def cell_sum(a: Cell, b: Cell) -> Cell:
    verts = tuple(u + v for u in a.vertices for v in b.vertices)
    return Cell(a.n, verts, a.rays + b.rays, a.lineality + b.lineality)


def sum_index(a: Cell, b: Cell, s: Cell | None = None):
    """[N_{a+b} : N_a + N_b], or INFINITE when the dimensions do not add up."""
    s = s or cell_sum(a, b)
    n = a.n
    if s.dim != a.dim + b.dim:
        return INFINITE
    if s.dim == 0:
        return 1
    sup = saturate(LatticeBasis(n, tuple(s.tangent_rows())))
    na = saturate(LatticeBasis(n, tuple(a.tangent_rows()))).rows
    nb = saturate(LatticeBasis(n, tuple(b.tangent_rows()))).rows
    return lattice_index(LatticeBasis(n, na + nb), sup)


def pairwise_sums(s1: WeightedComplex, s2: WeightedComplex) -> list[PairwiseSumRecord]:
    if s1.n != s2.n:
        raise ValueError("ambient mismatch")
    out = []
    for (a, m1), (b, m2) in itertools.product(s1.maximal_cells(), s2.maximal_cells()):
        s = cell_sum(a, b)
        idx = sum_index(a, b, s)
        w = Fraction(0) if idx == INFINITE else m1 * m2 * idx
        out.append(PairwiseSumRecord(a, b, s, w))
    return out


def minkowski_sum(s1: WeightedComplex, s2: WeightedComplex) -> WeightedComplex:
    """Weighted Minkowski sum, pure of dimension dim s1 + dim s2, weight-zero parts dropped."""
    d = s1.dim + s2.dim
    if d > s1.n:
        raise ValueError("sum dimension exceeds the ambient dimension")
    recs = pairwise_sums(s1, s2)
    cells = tuple((r.sum_cell, r.raw_weight) for r in recs if r.raw_weight != 0)
    return normalize(WeightedComplex(s1.n, d, cells))


def standard_plane(k: int, n: int) -> WeightedComplex:
    """The fan with rays e_0..e_n whose k-subsets span weight-one maximal cones."""
    if not 0 <= k <= n - 1:
        raise ValueError("need 0 <= k <= n-1")
    e = [QuotientVector.unit(i, n) for i in range(n + 1)]
    if k == 0:
        return WeightedComplex(n, 0, ((Cell.point([0] * (n + 1)), Fraction(1)),))
    cells = tuple((Cell.cone([e[i] for i in sub], n), Fraction(1)) for sub in itertools.combinations(range(n + 1), k))
    return WeightedComplex(n, k, cells)


def fink_skeleton(sigma: WeightedComplex, k: int | None = None) -> WeightedComplex:
    """sigma + (-Lambda_0(k, n)) with k = n - 1 - dim(sigma) unless given."""
    implied = sigma.n - 1 - sigma.dim
    if k is None:
        k = implied
    if k != implied:
        raise ValueError(f"dim {sigma.dim} + k {k} != n - 1 = {sigma.n - 1}")
    return minkowski_sum(sigma, negate_complex(standard_plane(k, sigma.n)))
