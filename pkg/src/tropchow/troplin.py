"""Tropical Pluecker vectors and tropical linear spaces (min convention).

Coordinates are indexed by (k+1)-subsets of {0..n} in colex order, which for
(k, n) = (1, 4) is 01, 02, 12, 03, 13, 23, 04, 14, 24, 34.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .complexes import Cell, QuotientVector, WeightedComplex, _qv
from .ratlin import LinearSystem, as_fraction, hrep_to_vrep, lp_feasible


@lru_cache(maxsize=None)
def subsets(k: int, n: int) -> tuple[tuple[int, ...], ...]:
    """(k+1)-subsets of {0..n} in colex order."""
    return tuple(sorted(itertools.combinations(range(n + 1), k + 1), key=lambda s: s[::-1]))


@lru_cache(maxsize=None)
def subset_index(k: int, n: int) -> dict:
    return {s: i for i, s in enumerate(subsets(k, n))}


def subset_label(s: Sequence[int]) -> str:
    return "".join(str(i) for i in s) if all(i < 10 for i in s) else ",".join(map(str, s))


@dataclass(frozen=True, eq=False)
class PlueckerVector:
    """A point of R^N/R(1,...,1), N = C(n+1, k+1); equality is modulo the shift."""

    k: int
    n: int
    coords: tuple[Fraction, ...]

    def __post_init__(self):
        vals = tuple(as_fraction(a) for a in self.coords)
        if not 0 <= self.k <= self.n - 1:
            raise ValueError("need 0 <= k <= n-1")
        if len(vals) != len(subsets(self.k, self.n)):
            raise ValueError(f"expected {len(subsets(self.k, self.n))} coordinates, got {len(vals)}")
        object.__setattr__(self, "coords", vals)

    def __getitem__(self, s) -> Fraction:
        return self.coords[subset_index(self.k, self.n)[tuple(sorted(s))]]

    def canonical(self) -> tuple[Fraction, ...]:
        c0 = self.coords[0]
        return tuple(a - c0 for a in self.coords)

    def __eq__(self, other):
        if not isinstance(other, PlueckerVector):
            return NotImplemented
        return (self.k, self.n, self.canonical()) == (other.k, other.n, other.canonical())

    def __hash__(self):
        return hash((self.k, self.n, self.canonical()))

    def __add__(self, other: "PlueckerVector") -> "PlueckerVector":
        return PlueckerVector(self.k, self.n, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "PlueckerVector") -> "PlueckerVector":
        return PlueckerVector(self.k, self.n, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return PlueckerVector(self.k, self.n, tuple(-a for a in self.coords))

    def as_quotient(self) -> QuotientVector:
        return QuotientVector(self.coords)

    @classmethod
    def from_quotient(cls, k: int, n: int, v) -> "PlueckerVector":
        return cls(k, n, tuple(_qv(v).entries))

    def __repr__(self):
        return f"PlueckerVector(k={self.k}, n={self.n}, coords=({', '.join(str(a) for a in self.coords)}))"


def phi_vector(k: int, n: int, a) -> PlueckerVector:
    """(a_0..a_n) -> (sum_{i in I} a_i)_I, evaluated on the representative as given."""
    a = [as_fraction(x) for x in a]
    if len(a) != n + 1:
        raise ValueError("ambient mismatch")
    return PlueckerVector(k, n, tuple(sum(a[i] for i in s) for s in subsets(k, n)))


@dataclass
class PlueckerCheck:
    valid: bool
    witness: tuple | None = None  # (S, i, j, k, l)

    def __bool__(self):
        return self.valid


def _three_term_patterns(k: int, n: int):
    for S in itertools.combinations(range(n + 1), k - 1):
        rest = [x for x in range(n + 1) if x not in S]
        for i, j, kk, l in itertools.combinations(rest, 4):
            yield S, i, j, kk, l


def is_tropical_pluecker(q: PlueckerVector) -> PlueckerCheck:
    """Three-term tropical Pluecker relations: each minimum attained at least twice."""
    for S, i, j, kk, l in _three_term_patterns(q.k, q.n):
        def c(*idx):
            return q[tuple(S) + idx]

        terms = [c(i, j) + c(kk, l), c(i, kk) + c(j, l), c(i, l) + c(j, kk)]
        if terms.count(min(terms)) < 2:
            return PlueckerCheck(False, (S, i, j, kk, l))
    return PlueckerCheck(True)


def _circuits(q: PlueckerVector):
    """For each (k+2)-subset J: list of (j, constant q_{J-j})."""
    out = []
    for J in itertools.combinations(range(q.n + 1), q.k + 2):
        out.append([(j, q[tuple(x for x in J if x != j)]) for j in J])
    return out


def point_in_linear_space(p, q: PlueckerVector, check: bool = True) -> bool:
    """p lies in Lambda_q iff every circuit minimum min_j (q_{J-j} + p_j) is attained twice."""
    p = _qv(p)
    if p.n != q.n:
        raise ValueError("ambient mismatch")
    if check and not is_tropical_pluecker(q):
        raise ValueError("not a tropical Pluecker vector")
    for circ in _circuits(q):
        vals = [c + p[j] for j, c in circ]
        if vals.count(min(vals)) < 2:
            return False
    return True


def line_through_two_points(u, v) -> PlueckerVector:
    """Pluecker vector q_ij = min(u_i + v_j, u_j + v_i) of the tropical line through u and v.

    Evaluated on the representatives as given, so the output is not shifted.
    """
    uu = [as_fraction(x) for x in u]
    vv = [as_fraction(x) for x in v]
    if len(uu) != len(vv):
        raise ValueError("ambient mismatch")
    n = len(uu) - 1
    coords = []
    for i, j in subsets(1, n):
        a, b = uu[i] + vv[j], uu[j] + vv[i]
        if a == b:
            raise ValueError(f"tie u_{i}+v_{j} = u_{j}+v_{i}; the min-plus minor is not certified")
        coords.append(min(a, b))
    return PlueckerVector(1, n, tuple(coords))


def translate_line(q: PlueckerVector, t) -> PlueckerVector:
    """q + phi(t); its linear space is t + Lambda_q."""
    return q + phi_vector(q.k, q.n, t)


# ---------------------------------------------------------------------------
# case split over which terms attain each circuit minimum


def _tie_constraints(circ, a, b, n):
    """Constraints (in chart variables x, p = (0, x)) for terms a, b tied at the minimum."""

    def row(j):
        r = [0] * n
        if j > 0:
            r[j - 1] = 1
        return r

    consts = dict(circ)
    eqs = [([x - y for x, y in zip(row(a), row(b))], consts[b] - consts[a])]
    ineqs = []
    for c, cc in circ:
        if c in (a, b):
            continue
        ineqs.append(([x - y for x, y in zip(row(c), row(a))], consts[a] - cc))
    return eqs, ineqs


def _satisfies(w, eqs, ineqs) -> bool:
    return all(sum(a * x for a, x in zip(r, w)) == b for r, b in eqs) and all(
        sum(a * x for a, x in zip(r, w)) >= b for r, b in ineqs
    )


def tie_regions(q: PlueckerVector, base_eqs=(), base_ineqs=()) -> Iterator:
    """Depth-first enumeration of the closed regions of Lambda_q (intersected with a base polyhedron).

    Circuits are processed in lexicographic order and tied pairs in
    lexicographic order within each circuit; partial systems are pruned by
    exact LP.  Yields (equalities, inequalities, witness) for every feasible
    leaf.
    """
    n = q.n
    circuits = _circuits(q)

    def rec(depth, eqs, ineqs, w):
        if depth == len(circuits):
            yield eqs, ineqs, w
            return
        circ = circuits[depth]
        for a, b in itertools.combinations([j for j, _ in circ], 2):
            e, i = _tie_constraints(circ, a, b, n)
            if _satisfies(w, e, i):
                child = w
            else:
                child = lp_feasible(LinearSystem(n, equalities=eqs + e, inequalities=ineqs + i))
                if child is None:
                    continue
            yield from rec(depth + 1, eqs + e, ineqs + i, child)

    w0 = lp_feasible(LinearSystem(n, equalities=list(base_eqs), inequalities=list(base_ineqs)))
    if w0 is not None:
        yield from rec(0, list(base_eqs), list(base_ineqs), w0)


def linear_space_as_complex(q: PlueckerVector) -> WeightedComplex:
    """Explicit 1-dimensional model of Lambda_q for k = 1 (all weights 1)."""
    if q.k != 1:
        raise NotImplementedError("only lines (k = 1) are materialized")
    if not is_tropical_pluecker(q):
        raise ValueError("not a tropical Pluecker vector")
    n = q.n
    seen = {}
    for eqs, ineqs, _ in tie_regions(q):
        v = hrep_to_vrep(eqs, ineqs, n)
        if v is None:
            continue
        verts, rays, lin = v
        if lin:
            raise AssertionError("a tropical line has no lineality")
        cell = Cell(n, tuple(QuotientVector.from_chart(x) for x in verts), tuple(QuotientVector.from_chart(r) for r in rays))
        if cell.dim != 1:
            continue
        key = (tuple(sorted(x.entries for x in cell.vertices)), tuple(sorted(r.entries for r in cell.rays)))
        seen.setdefault(key, cell)
    cells = tuple((seen[k], Fraction(1)) for k in sorted(seen))
    return WeightedComplex(n, 1, cells)
