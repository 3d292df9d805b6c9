"""The map phi, the fans Lambda_0 and Gamma_0, and tropical Chow hypersurfaces Z = phi(Sigma) + Gamma_0."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import _refine
from .complexes import (
    Cell,
    QuotientVector,
    WeightedComplex,
    _Embedding,
    _qv,
    refine_weights,
)
from .minkowski import cell_sum, minkowski_sum, standard_plane
from .ratlin import (
    LinearSystem,
    hrep_to_vrep,
    integerize,
    lp_feasible,
    nullspace,
    rank,
)
from .troplin import (
    PlueckerVector,
    is_tropical_pluecker,
    linear_space_as_complex,
    phi_vector,
    point_in_linear_space,
    subset_label,
    subsets,
    tie_regions,
)

__all__ = [
    "PhiMatrix",
    "Gamma0Fan",
    "phi",
    "phi_complex",
    "standard_plane",
    "gamma0",
    "gamma0_contains",
    "gamma_p",
    "chow_hypersurface",
    "chow_support_member",
    "meets",
    "h_equations",
    "restrict_to_H_identity",
]


@dataclass(frozen=True)
class PhiMatrix:
    """Incidence matrix: entry (i, I) is 1 iff i is in I."""

    k: int
    n: int

    @property
    def columns(self):
        return subsets(self.k, self.n)

    @property
    def rows(self) -> list[tuple[int, ...]]:
        return [tuple(1 if i in s else 0 for s in self.columns) for i in range(self.n + 1)]

    def chart_matrix(self) -> list[list[int]]:
        """Matrix of phi between chart coordinates: x -> chart(phi((0, x)))."""
        cols = self.columns
        out = []
        for I in cols[1:]:
            row = []
            for i in range(1, self.n + 1):
                row.append((1 if i in I else 0) - (1 if i in cols[0] else 0))
            out.append(row)
        return out


def phi(k: int, n: int, a) -> PlueckerVector:
    return phi_vector(k, n, a)


def _phi_qv(k, n, v: QuotientVector) -> QuotientVector:
    return phi_vector(k, n, v.entries).as_quotient()


def phi_cell(k: int, c: Cell) -> Cell:
    n = c.n
    N = len(subsets(k, n)) - 1
    return Cell(
        N,
        tuple(_phi_qv(k, n, v) for v in c.vertices),
        tuple(_phi_qv(k, n, r) for r in c.rays),
        tuple(_phi_qv(k, n, l) for l in c.lineality),
    )


def phi_complex(sigma: WeightedComplex, k: int) -> WeightedComplex:
    """Image of every cell under phi, weights kept."""
    N = len(subsets(k, sigma.n)) - 1
    return WeightedComplex(N, sigma.dim, tuple((phi_cell(k, c), m) for c, m in sigma.cells))


# ---------------------------------------------------------------------------
# Gamma_0

def _e(k, n, s):
    cols = subsets(k, n)
    return QuotientVector([1 if c == s else 0 for c in cols])


def gamma0_13_rays() -> dict[str, QuotientVector]:
    """Rays e_ij and -f_i of the (1,3) fan, keyed by label."""
    rays = {}
    for s in subsets(1, 3):
        rays["e" + subset_label(s)] = _e(1, 3, s)
    for i in range(4):
        rays[f"-f{i}"] = -phi_vector(1, 3, [1 if j == i else 0 for j in range(4)]).as_quotient()
    return rays


# transcribed from the figure: outer 5-cycle, inner 5-cycle, spokes
GAMMA0_13_EDGES = (
    ("e23", "e01"), ("e01", "-f2"), ("-f2", "e03"), ("e03", "-f1"), ("-f1", "e23"),
    ("-f0", "e13"), ("e13", "e02"), ("e02", "-f3"), ("-f3", "e12"), ("e12", "-f0"),
    ("e23", "-f0"), ("e01", "-f3"), ("-f2", "e13"), ("e03", "e12"), ("-f1", "e02"),
)


def gamma0_contains(q: PlueckerVector) -> bool:
    """Oracle: q is a tropical Pluecker vector whose linear space contains the origin."""
    if not is_tropical_pluecker(q):
        return False
    return point_in_linear_space([0] * (q.n + 1), q, check=False)


@dataclass(frozen=True)
class Gamma0Fan:
    k: int
    n: int
    provenance: str  # "fixture" or "oracle-only"
    complex: WeightedComplex | None = None
    labels: tuple = ()
    contains: Callable[[PlueckerVector], bool] = field(default=gamma0_contains, repr=False, compare=False)


def gamma0(k: int, n: int) -> Gamma0Fan:
    """The fan Gamma_0 for (1,3) from its transcription; other (k, n) get the oracle only."""
    if (k, n) == (1, 3):
        rays = gamma0_13_rays()
        cells = tuple((Cell.cone([rays[a], rays[b]], 5), Fraction(1)) for a, b in GAMMA0_13_EDGES)
        return Gamma0Fan(1, 3, "fixture", WeightedComplex(5, 2, cells), GAMMA0_13_EDGES)
    return Gamma0Fan(k, n, "oracle-only")


def _require_fan(k, n) -> WeightedComplex:
    g = gamma0(k, n)
    if g.complex is None:
        raise NotImplementedError(f"no explicit Gamma_0 for (k, n) = ({k}, {n}); only (1, 3) is available")
    return g.complex


def gamma_p(k: int, n: int, p) -> WeightedComplex:
    """Gamma_p = phi(p) + Gamma_0."""
    g = _require_fan(k, n)
    return g.translate(phi_vector(k, n, _qv(p).entries).as_quotient())


def chow_hypersurface(sigma: WeightedComplex, k: int) -> WeightedComplex:
    """Z_Sigma = phi(Sigma) + Gamma_0 as a weighted Minkowski sum."""
    n = sigma.n
    if sigma.cells and sigma.dim != n - k - 1:
        raise ValueError(f"need a complex of dimension n-k-1 = {n - k - 1}, got {sigma.dim}")
    g = _require_fan(k, n)
    if not sigma.cells:
        return WeightedComplex.zero(g.n, g.dim + n - k - 1)
    return minkowski_sum(phi_complex(sigma, k), g)


# ---------------------------------------------------------------------------
# membership: does Lambda_q meet |Sigma| ?


@dataclass
class MembershipResult:
    member: bool
    witness: QuotientVector | None = None
    cell_index: int | None = None

    def __bool__(self):
        return self.member


def _cell_system(c: Cell):
    eqs, ineqs = c.hrep()
    return [(list(r), b) for r, b in eqs], [(list(r), b) for r, b in ineqs]


def chow_support_member(q: PlueckerVector, sigma: WeightedComplex) -> MembershipResult:
    """Decide whether Lambda_q meets |Sigma|, i.e. whether q lies in the support of Z_Sigma.

    Cells are tried in order; within a cell, tie patterns of the circuit
    minima are enumerated depth-first in lexicographic order with exact LP
    pruning.  The first feasible leaf gives the witness s in Lambda_q and in
    the cell.
    """
    if q.n != sigma.n:
        raise ValueError("ambient mismatch")
    if not is_tropical_pluecker(q):
        raise ValueError("not a tropical Pluecker vector")
    for idx, (c, m) in enumerate(sigma.cells):
        if m == 0 or c.dim != sigma.dim:
            continue
        eqs, ineqs = _cell_system(c)
        for _, _, w in tie_regions(q, eqs, ineqs):
            s = QuotientVector.from_chart(w)
            return MembershipResult(True, s, idx)
    return MembershipResult(False)


def meets(q: PlueckerVector, sigma: WeightedComplex) -> MembershipResult:
    """Intersect the explicit model of Lambda_q (k = 1) with every cell of Sigma."""
    line = linear_space_as_complex(q)
    n = q.n
    for idx, (c, m) in enumerate(sigma.cells):
        if m == 0 or c.dim != sigma.dim:
            continue
        ce, ci = _cell_system(c)
        for edge, _ in line.cells:
            ee, ei = _cell_system(edge)
            w = lp_feasible(LinearSystem(n, equalities=ce + ee, inequalities=ci + ei))
            if w is not None:
                return MembershipResult(True, QuotientVector.from_chart(w), idx)
    return MembershipResult(False)


# ---------------------------------------------------------------------------
# restriction to H = phi(R^{n+1}/R)


def h_equations(k: int, n: int) -> list[tuple[int, ...]]:
    """Integer equations (in Pluecker chart coordinates) cutting out H = phi(R^{n+1}/R)."""
    M = PhiMatrix(k, n).chart_matrix()
    cols = [list(c) for c in zip(*M)]  # images of chart basis vectors
    N = len(M)
    return nullspace(cols, N) if cols else []


def _pullback(cell: Cell, M) -> list[Cell]:
    """{x : phi(x) in cell} as a cell of R^{n+1}/R (cones only)."""
    eqs, ineqs = cell.hrep()
    n = len(M[0])

    def comp(row):
        return [sum(row[r] * M[r][j] for r in range(len(M))) for j in range(n)]

    v = hrep_to_vrep([(comp(r), b) for r, b in eqs], [(comp(r), b) for r, b in ineqs], n)
    if v is None:
        return []
    verts, rays, lin = v
    return [
        Cell(
            n,
            tuple(QuotientVector.from_chart(x) for x in verts),
            tuple(QuotientVector.from_chart(r) for r in rays),
            tuple(QuotientVector.from_chart(l) for l in lin),
        )
    ]


def _set_sum_cells(a: WeightedComplex, b: WeightedComplex) -> list[Cell]:
    return [cell_sum(x, y) for (x, _), (y, _) in itertools.product(a.maximal_cells(), b.maximal_cells())]


def _covered(piece: Cell, others: list[Cell]) -> QuotientVector | None:
    """None if piece is contained in the union of others, else a point of piece outside it."""
    d = piece.dim
    n = piece.n
    if d == 0:
        for o in others:
            from .complexes import cell_contains

            if cell_contains(o, piece.vertices[0]):
                return None
        return piece.vertices[0]
    peq, _ = piece.hrep()
    parts = []
    for o in others:
        oeq, oin = o.hrep()
        v = hrep_to_vrep(list(oeq) + list(peq), list(oin), n)
        if v is None:
            continue
        verts, rays, lin = v
        c = Cell(
            n,
            tuple(QuotientVector.from_chart(x) for x in verts),
            tuple(QuotientVector.from_chart(r) for r in rays),
            tuple(QuotientVector.from_chart(l) for l in lin),
        )
        if c.dim == d:
            parts.append((c, Fraction(1)))
    emb, frags = refine_weights(n, d, [[(piece, Fraction(1))], parts])
    for p, (wa, wb) in frags:
        if wa != 0 and wb == 0:
            return emb.to_point(p.interior_point())
    return None


@dataclass
class RestrictionReport:
    equal: bool
    witness: QuotientVector | None = None
    side: str | None = None  # which side has the extra point

    def __bool__(self):
        return self.equal


def restrict_to_H_identity(sigma: WeightedComplex, k: int = 1, n: int = 3) -> RestrictionReport:
    """Compare |phi(Sigma) + Gamma_0| intersected with H against phi(|Sigma| + |-Lambda_0|).

    Both sides are pulled back to R^{n+1}/R (phi is injective) and compared
    as unions of cells by mutual containment.
    """
    if (k, n) != (1, 3):
        raise NotImplementedError("only (k, n) = (1, 3) has an explicit Gamma_0")
    if sigma.n != n:
        raise ValueError("ambient mismatch")
    if not sigma.cells:
        return RestrictionReport(True)
    g = _require_fan(k, n)
    M = PhiMatrix(k, n).chart_matrix()
    left = []
    for c in _set_sum_cells(phi_complex(sigma, k), g):
        left.extend(_pullback(c, M))
    from .complexes import negate_complex

    right = _set_sum_cells(sigma, negate_complex(standard_plane(k, n)))
    for c in left:
        w = _covered(c, right)
        if w is not None:
            return RestrictionReport(False, w, "left")
    for c in right:
        w = _covered(c, left)
        if w is not None:
            return RestrictionReport(False, w, "right")
    return RestrictionReport(True)
