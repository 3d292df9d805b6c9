"""Points, cells and weighted complexes in the quotient space R^{n+1}/R(1,...,1).

A cell is stored by generators (vertices, rays, lineality).  A weighted
complex is a finite list of (cell, multiplicity) pairs of a common dimension.
Cells may overlap arbitrarily: every comparison goes through a common
refinement, so two complexes are equal when their weight functions agree
almost everywhere on the union of their top-dimensional cells.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from . import _refine
from .ratlin import (
    LatticeBasis,
    LinearSystem,
    as_fraction,
    integer_kernel,
    integerize,
    lp_feasible,
    nullspace,
    primitive,
    rank,
    rref,
    saturate,
    vrep_to_hrep,
)


@dataclass(frozen=True)
class QuotientVector:
    """A class in R^{n+1}/R(1,...,1), stored with first entry 0."""

    entries: tuple[Fraction, ...]

    def __init__(self, entries: Iterable):
        vals = [as_fraction(a) for a in entries]
        if not vals:
            raise ValueError("a quotient vector needs at least one entry")
        a0 = vals[0]
        object.__setattr__(self, "entries", tuple(a - a0 for a in vals))

    @classmethod
    def from_chart(cls, x: Sequence) -> "QuotientVector":
        return cls([0, *x])

    @classmethod
    def unit(cls, i: int, n: int) -> "QuotientVector":
        return cls([1 if j == i else 0 for j in range(n + 1)])

    @property
    def n(self) -> int:
        return len(self.entries) - 1

    def chart(self) -> tuple[Fraction, ...]:
        return self.entries[1:]

    def is_zero(self) -> bool:
        return not any(self.entries)

    def is_integral(self) -> bool:
        return all(a.denominator == 1 for a in self.entries)

    def int_entries(self) -> tuple[int, ...]:
        if not self.is_integral():
            raise ValueError(f"{self} is not integral")
        return tuple(int(a) for a in self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __add__(self, other):
        other = _qv(other)
        return QuotientVector(a + b for a, b in zip(self.entries, other.entries))

    def __sub__(self, other):
        other = _qv(other)
        return QuotientVector(a - b for a, b in zip(self.entries, other.entries))

    def __neg__(self):
        return QuotientVector(-a for a in self.entries)

    def scale(self, c) -> "QuotientVector":
        c = as_fraction(c)
        return QuotientVector(c * a for a in self.entries)

    def __repr__(self):
        return "QuotientVector(" + ", ".join(str(a) for a in self.entries) + ")"


def _qv(v) -> QuotientVector:
    return v if isinstance(v, QuotientVector) else QuotientVector(v)


def canonicalize(v) -> QuotientVector:
    """Representative with first entry 0."""
    return _qv(v)


def _primitive_class(v: QuotientVector) -> QuotientVector:
    x = integerize(v.chart())
    if not any(x):
        raise ValueError("zero direction")
    return QuotientVector.from_chart(x)


@dataclass(frozen=True)
class Cell:
    """conv(vertices) + cone(rays) + span(lineality) in R^{n+1}/R."""

    n: int
    vertices: tuple[QuotientVector, ...]
    rays: tuple[QuotientVector, ...] = ()
    lineality: tuple[QuotientVector, ...] = ()

    def __post_init__(self):
        verts = tuple(dict.fromkeys(_qv(v) for v in self.vertices))
        if not verts:
            raise ValueError("a cell needs at least one vertex")
        rays = tuple(dict.fromkeys(_primitive_class(_qv(r)) for r in self.rays if not _qv(r).is_zero()))
        lin = tuple(dict.fromkeys(_primitive_class(_qv(r)) for r in self.lineality if not _qv(r).is_zero()))
        for v in verts + rays + lin:
            if v.n != self.n:
                raise ValueError(f"{v} does not live in R^{self.n + 1}/R")
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "rays", rays)
        object.__setattr__(self, "lineality", lin)

    @classmethod
    def cone(cls, rays, n: int | None = None, lineality=()) -> "Cell":
        rays = [_qv(r) for r in rays]
        if n is None:
            if not rays:
                raise ValueError("cannot infer n from an empty ray list")
            n = rays[0].n
        return cls(n, (QuotientVector([0] * (n + 1)),), tuple(rays), tuple(lineality))

    @classmethod
    def point(cls, v) -> "Cell":
        v = _qv(v)
        return cls(v.n, (v,))

    @property
    def is_cone(self) -> bool:
        return len(self.vertices) == 1 and self.vertices[0].is_zero()

    def tangent_rows(self) -> list[tuple]:
        """Chart vectors spanning the direction space."""
        v0 = self.vertices[0].chart()
        rows = [tuple(a - b for a, b in zip(v.chart(), v0)) for v in self.vertices[1:]]
        rows += [r.chart() for r in self.rays] + [l.chart() for l in self.lineality]
        return [integerize(r) for r in rows if any(r)]

    @cached_property
    def dim(self) -> int:
        rows = self.tangent_rows()
        return rank(rows) if rows else 0

    def hrep(self):
        """(equalities, inequalities) in chart coordinates; see ratlin.vrep_to_hrep."""
        return vrep_to_hrep(
            [v.chart() for v in self.vertices],
            [r.chart() for r in self.rays],
            [l.chart() for l in self.lineality],
        )

    def negate(self) -> "Cell":
        return Cell(self.n, tuple(-v for v in self.vertices), tuple(-r for r in self.rays), self.lineality)

    def translate(self, t) -> "Cell":
        t = _qv(t)
        return Cell(self.n, tuple(v + t for v in self.vertices), self.rays, self.lineality)

    def interior_point(self) -> QuotientVector:
        """Average of the vertices plus the sum of the rays: a relative interior point."""
        k = len(self.vertices)
        pt = [sum(v.chart()[i] for v in self.vertices) / k for i in range(self.n)]
        for r in self.rays:
            pt = [a + b for a, b in zip(pt, r.chart())]
        return QuotientVector.from_chart(pt)


def cell_contains(c: Cell, p, relative_interior: bool = False) -> bool:
    """Exact membership of the class of p in c (strictly positive coefficients for the relative interior)."""
    p = _qv(p)
    if p.n != c.n:
        raise ValueError("ambient mismatch")
    gens = [v.chart() for v in c.vertices] + [r.chart() for r in c.rays]
    nv, nr = len(c.vertices), len(c.rays)
    nl = len(c.lineality)
    nvar = nv + nr + nl
    eqs = []
    for i in range(c.n):
        row = [g[i] for g in gens] + [l.chart()[i] for l in c.lineality]
        eqs.append((row, p.chart()[i]))
    eqs.append(([1] * nv + [0] * (nr + nl), 1))
    unit = [[1 if j == t else 0 for j in range(nvar)] for t in range(nv + nr)]
    if relative_interior:
        sys = LinearSystem(nvar, equalities=eqs, strict_inequalities=[(u, 0) for u in unit])
    else:
        sys = LinearSystem(nvar, equalities=eqs, inequalities=[(u, 0) for u in unit])
    return lp_feasible(sys) is not None


@dataclass(frozen=True)
class WeightedComplex:
    """Pure d-dimensional weighted complex; cells of lower dimension carry no weight."""

    n: int
    dim: int
    cells: tuple[tuple[Cell, Fraction], ...] = ()

    def __post_init__(self):
        cells = tuple((c, as_fraction(m)) for c, m in self.cells)
        for c, _ in cells:
            if c.n != self.n:
                raise ValueError("cell ambient mismatch")
            if c.dim > self.dim:
                raise ValueError(f"cell of dimension {c.dim} in a complex of dimension {self.dim}")
        object.__setattr__(self, "cells", cells)

    @classmethod
    def zero(cls, n: int, dim: int) -> "WeightedComplex":
        return cls(n, dim, ())

    def maximal_cells(self):
        return [(c, m) for c, m in self.cells if c.dim == self.dim]

    def scaled(self, a) -> "WeightedComplex":
        a = as_fraction(a)
        return WeightedComplex(self.n, self.dim, tuple((c, a * m) for c, m in self.cells))

    def translate(self, t) -> "WeightedComplex":
        return WeightedComplex(self.n, self.dim, tuple((c.translate(t), m) for c, m in self.cells))

    def rays(self) -> list[QuotientVector]:
        seen = {}
        for c, _ in self.cells:
            for r in c.rays:
                seen[r] = True
        return list(seen)

    def __len__(self):
        return len(self.cells)


def fan_from_rays(rays, mults, n: int | None = None) -> WeightedComplex:
    """One-dimensional fan from weighted integer vectors.

    The lattice content g of each vector is folded into the weight, so the
    vector v with weight m becomes the primitive ray of v with weight m*g and
    the weighted vector sum is preserved.
    """
    cells = []
    for v, m in zip(rays, mults):
        v = _qv(v)
        if n is None:
            n = v.n
        x = integerize(v.chart()) if v.is_integral() else None
        if x is None:
            raise ValueError(f"{v} is not an integer vector")
        g = math.gcd(*[int(a) for a in v.chart()])
        if g == 0:
            raise ValueError("zero vector is not a ray")
        cells.append((Cell.cone([v], n), as_fraction(m) * g))
    if n is None:
        raise ValueError("empty ray list needs n")
    return WeightedComplex(n, 1, tuple(cells))


def negate_complex(sigma: WeightedComplex) -> WeightedComplex:
    """Image under p -> -p, weights preserved."""
    return WeightedComplex(sigma.n, sigma.dim, tuple((c.negate(), m) for c, m in sigma.cells))


# ---------------------------------------------------------------------------
# embedding into integer cones


class _Embedding:
    """Maps cells of R^{n+1}/R to pointed integer cones.

    Fans live directly in the chart Z^n.  When some cell is not a cone, every
    cell is homogenized: Z^{n+1} with a leading coordinate t, vertices at t=1.
    """

    def __init__(self, n: int, homogeneous: bool):
        self.n = n
        self.homogeneous = homogeneous
        self.m = n + 1 if homogeneous else n

    @classmethod
    def for_cells(cls, n: int, cells: Iterable[Cell]) -> "_Embedding":
        return cls(n, any(not c.is_cone for c in cells))

    def generators(self, c: Cell):
        if self.homogeneous:
            gens = [integerize((1,) + tuple(v.chart())) for v in c.vertices]
            gens += [(0,) + tuple(integerize(r.chart())) for r in c.rays]
            lin = [(0,) + tuple(integerize(l.chart())) for l in c.lineality]
        else:
            gens = [tuple(integerize(r.chart())) for r in c.rays]
            lin = [tuple(integerize(l.chart())) for l in c.lineality]
        return gens, lin

    def pieces(self, c: Cell) -> list[_refine.Piece]:
        gens, lin = self.generators(c)
        allg = gens + lin + [tuple(-x for x in l) for l in lin]
        if not any(any(g) for g in allg):
            return [_refine.make_piece([], self.m)]
        L = _lineality_space(allg, self.m)
        if not L:
            return [_refine.make_piece(allg, self.m)]
        # split into pointed pieces: project along L, then add one sign per basis vector
        proj = [_project_out(g, L) for g in allg]
        proj = [p for p in proj if any(p)]
        out = []
        for signs in _sign_vectors(len(L)):
            extra = [tuple(s * x for x in l) for s, l in zip(signs, L)]
            out.append(_refine.make_piece(proj + extra, self.m))
        return out

    def to_point(self, x) -> QuotientVector:
        if self.homogeneous:
            t = x[0]
            if t == 0:
                raise ValueError("point at infinity")
            return QuotientVector.from_chart([Fraction(a, t) for a in x[1:]])
        return QuotientVector.from_chart(x)

    def from_point(self, p: QuotientVector):
        ch = p.chart()
        if self.homogeneous:
            return integerize((1,) + tuple(ch))
        return tuple(ch)

    def to_cell(self, piece: _refine.Piece) -> Cell:
        if not self.homogeneous:
            if not piece.rays:
                return Cell.point([0] * (self.n + 1))
            return Cell.cone([QuotientVector.from_chart(r) for r in piece.rays], self.n)
        verts = [QuotientVector.from_chart([Fraction(a, r[0]) for a in r[1:]]) for r in piece.rays if r[0] > 0]
        rays = [QuotientVector.from_chart(r[1:]) for r in piece.rays if r[0] == 0]
        return Cell(self.n, tuple(verts), tuple(rays))

    def tangent_of_key(self, key) -> list[tuple[int, ...]]:
        """Chart direction space of the affine span described by a span key."""
        if not self.homogeneous:
            return [tuple(r) for r in key]
        col = [[r[0] for r in key]]
        combos = nullspace(col, len(key)) if any(col[0]) else [
            tuple(1 if i == j else 0 for j in range(len(key))) for i in range(len(key))
        ]
        rows = []
        for c in combos:
            v = [sum(ci * r[k] for ci, r in zip(c, key)) for k in range(self.m)]
            rows.append(primitive(v[1:]))
        return [r for r in rows if any(r)]


def _lineality_space(gens, m):
    from .ratlin import cone_facets

    gens = [g for g in gens if any(g)]
    perp, facets = cone_facets(gens, [], m)
    rows = [list(p) for p in perp] + [list(f) for f in facets]
    return nullspace(rows, m) if rows else [tuple(1 if i == j else 0 for j in range(m)) for i in range(m)]


def _project_out(g, L):
    """Orthogonal projection of g onto the complement of span(L), integerized."""
    # solve Gram system for coefficients
    k = len(L)
    gram = [[sum(a * b for a, b in zip(L[i], L[j])) for j in range(k)] for i in range(k)]
    rhs = [sum(a * b for a, b in zip(L[i], g)) for i in range(k)]
    from .ratlin import solve

    c = solve(gram, rhs)
    v = [Fraction(g[t]) - sum(c[i] * L[i][t] for i in range(k)) for t in range(len(g))]
    return integerize(v) if any(v) else tuple(0 for _ in g)


def _sign_vectors(k):
    if k == 0:
        yield ()
        return
    for rest in _sign_vectors(k - 1):
        yield rest + (1,)
        yield rest + (-1,)


def _items(emb: _Embedding, weighted_cells, dim: int):
    items = []
    for c, w in weighted_cells:
        if c.dim != dim:
            continue
        for p in emb.pieces(c):
            items.append((p, w))
    return items


def refine_weights(n: int, dim: int, families: Sequence[Sequence[tuple[Cell, Fraction]]]):
    """Refine several weighted cell families at once.

    Returns (embedding, [(fragment piece, weight vector)]) where entry i of a
    weight vector is the total weight family i puts on the fragment.
    """
    allcells = [c for fam in families for c, _ in fam]
    emb = _Embedding.for_cells(n, allcells)
    k = len(families)
    tagged = []
    for i, fam in enumerate(families):
        for c, m in fam:
            w = [Fraction(0)] * k
            w[i] = as_fraction(m)
            tagged.append((c, tuple(w)))
    items = _items(emb, tagged, dim)
    frags = _refine.refine(items)
    return emb, [(p, w) for p, w, _ in frags]


def normalize(sigma: WeightedComplex) -> WeightedComplex:
    """Refine overlaps, sum weights, drop weight-zero fragments and lower-dimensional cells."""
    emb, frags = refine_weights(sigma.n, sigma.dim, [sigma.cells])
    cells = [(emb.to_cell(p), w[0]) for p, w in frags if w[0] != 0]
    cells.sort(key=lambda cm: _cell_sort_key(cm[0]))
    return WeightedComplex(sigma.n, sigma.dim, tuple(cells))


def _cell_sort_key(c: Cell):
    return (
        tuple(v.entries for v in c.vertices),
        tuple(r.entries for r in c.rays),
        tuple(l.entries for l in c.lineality),
    )


def linear_combination(terms: Sequence[tuple]) -> WeightedComplex:
    """Sum of a_i * Sigma_i, normalized (weight-zero parts dropped)."""
    terms = [(as_fraction(a), s) for a, s in terms]
    if not terms:
        raise ValueError("empty combination")
    n, d = terms[0][1].n, terms[0][1].dim
    cells = []
    for a, s in terms:
        if s.n != n:
            raise ValueError("ambient mismatch")
        if s.dim != d and s.cells:
            raise ValueError("dimension mismatch")
        cells.extend((c, a * m) for c, m in s.cells)
    return normalize(WeightedComplex(n, d, tuple(cells)))


@dataclass
class Comparison:
    equal: bool
    witness: QuotientVector | None = None
    weights: tuple | None = None

    def __bool__(self):
        return self.equal


def complex_equal(a: WeightedComplex, b: WeightedComplex, mode: str = "weighted") -> Comparison:
    """Equality up to refinement.

    ``weighted`` compares weights on a common refinement; ``support_only``
    compares where the weights are nonzero.  On failure the witness is a
    relative-interior point of a fragment where the two sides disagree.
    """
    if a.n != b.n:
        raise ValueError("ambient mismatch")
    if a.dim != b.dim:
        if not a.cells or not b.cells:
            d = a.dim if a.cells else b.dim
            a = WeightedComplex(a.n, d, a.cells)
            b = WeightedComplex(b.n, d, b.cells)
        else:
            raise ValueError("dimension mismatch")
    emb, frags = refine_weights(a.n, a.dim, [a.cells, b.cells])
    for p, (wa, wb) in sorted(frags, key=lambda pw: pw[0].interior_point()):
        if mode == "weighted":
            bad = wa != wb
        elif mode in ("support_only", "support"):
            bad = (wa != 0) != (wb != 0)
        else:
            raise ValueError(f"unknown mode {mode!r}")
        if bad:
            return Comparison(False, emb.to_point(p.interior_point()), (wa, wb))
    return Comparison(True)


# ---------------------------------------------------------------------------
# balancing


@dataclass
class BalancingReport:
    balanced: bool
    failures: list = field(default_factory=list)  # (wall cell, residual vector in the quotient lattice)

    def __bool__(self):
        return self.balanced


def _ext_gcd_combination(values: list[int]) -> tuple[int, list[int]]:
    """g = gcd(values) and integer coefficients c with sum(c_i v_i) = g."""
    g, coeffs = 0, [0] * len(values)
    for i, v in enumerate(values):
        if v == 0:
            continue
        if g == 0:
            g, coeffs = abs(v), [0] * len(values)
            coeffs[i] = 1 if v > 0 else -1
            continue
        # extended Euclid on (g, v)
        old_r, r = g, v
        old_s, s = 1, 0
        old_t, t = 0, 1
        while r:
            q = old_r // r
            old_r, r = r, old_r - q * r
            old_s, s = s, old_s - q * s
            old_t, t = t, old_t - q * t
        if old_r < 0:
            old_r, old_s, old_t = -old_r, -old_s, -old_t
        coeffs = [old_s * c for c in coeffs]
        coeffs[i] += old_t
        g = old_r
    return g, coeffs


def lattice_normal(cell_tangent: Sequence[Sequence[int]], ell: Sequence) -> tuple[int, ...]:
    """Primitive lattice normal u_{sigma/tau}: a vector of sat(T_sigma) with ell(u) = minimal positive value.

    ell is a linear form vanishing on T_tau and positive on sigma.
    """
    n = len(ell)
    basis = saturate(LatticeBasis(n, tuple(cell_tangent))).rows
    vals = [sum(a * b for a, b in zip(ell, bv)) for bv in basis]
    g, c = _ext_gcd_combination(vals)
    if g == 0:
        raise ValueError("form vanishes on the cell")
    return tuple(sum(ci * bv[k] for ci, bv in zip(c, basis)) for k in range(n))


def balancing_check(sigma: WeightedComplex) -> BalancingReport:
    """Check the balancing condition at every codimension-one wall.

    For each hyperplane W spanned by a facet, the facets lying in W carry the
    vectors m * u_{sigma/tau} reduced modulo the lattice of W; these are
    refined inside W and every fragment must sum to zero.
    """
    d = sigma.dim
    if d == 0:
        return BalancingReport(True)
    cells = [(c, m) for c, m in sigma.cells if c.dim == d and m != 0]
    emb = _Embedding.for_cells(sigma.n, [c for c, _ in cells])
    walls: dict[tuple, list] = {}
    for c, m in cells:
        tangent = c.tangent_rows()
        for piece in emb.pieces(c):
            for f in piece.facets:
                tight = [r for r in piece.rays if sum(a * b for a, b in zip(f, r)) == 0]
                if emb.homogeneous and not any(r[0] for r in tight):
                    continue  # face at infinity
                facet_piece = _refine.make_piece(tight, emb.m)
                ell = f[1:] if emb.homogeneous else f
                u = lattice_normal(tangent, ell)
                walls.setdefault(facet_piece.key, []).append((facet_piece, m, u))
    failures = []
    for key in sorted(walls, key=lambda k: (len(k), k)):
        entries = walls[key]
        tau_t = emb.tangent_of_key(key)
        proj = integer_kernel(tau_t, sigma.n) if tau_t else [
            tuple(1 if i == j else 0 for j in range(sigma.n)) for i in range(sigma.n)
        ]
        items = []
        for piece, m, u in entries:
            red = tuple(m * sum(a * b for a, b in zip(row, u)) for row in proj)
            items.append((piece, red))
        for frag, w, _ in _refine.refine(items):
            if any(w):
                failures.append((emb.to_cell(frag), w))
    return BalancingReport(not failures, failures)
