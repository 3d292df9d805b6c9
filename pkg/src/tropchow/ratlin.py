"""Exact integer and rational linear algebra.

Everything here works on plain Python ints and :class:`fractions.Fraction`;
there is no floating point anywhere.  Vectors are tuples or lists, matrices
are lists of rows.

Quotient-lattice chart: the lattice Z^{n+1}/Z(1,...,1) is identified with Z^n
through ``(a_0, ..., a_n) -> (a_1 - a_0, ..., a_n - a_0)``.  All lattice
computations (index, saturation, primitivity) happen in that chart.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

INFINITE = math.inf


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass ints, Fractions or 'p/q' strings")
    return Fraction(x)


def dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


def vec_gcd(v: Iterable[int]) -> int:
    g = 0
    for a in v:
        g = math.gcd(g, a)
    return g


def primitive(v: Sequence[int]) -> tuple[int, ...]:
    """Divide an integer vector by the gcd of its entries (zero stays zero)."""
    g = vec_gcd(v)
    if g <= 1:
        return tuple(v)
    return tuple(a // g for a in v)


def integerize(v: Sequence) -> tuple[int, ...]:
    """Smallest positive multiple of a rational vector that is integral and primitive."""
    den = 1
    for a in v:
        a = as_fraction(a)
        den = den * a.denominator // math.gcd(den, a.denominator)
    return primitive(tuple(int(as_fraction(a) * den) for a in v))


# ---------------------------------------------------------------------------
# rational elimination


def rref(rows: Sequence[Sequence], ncols: int | None = None):
    """Reduced row echelon form over Q. Returns (nonzero rows, pivot columns)."""
    m = [[as_fraction(a) for a in r] for r in rows]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(m)):
            if m[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [a * inv for a in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    if not rows:
        return 0
    return _int_rank([list(integerize(r)) if _has_fraction(r) else list(r) for r in rows])


def _has_fraction(r) -> bool:
    return any(isinstance(a, Fraction) and a.denominator != 1 for a in r)


def _int_rank(m: list[list[int]]) -> int:
    # fraction-free (Bareiss-style) elimination
    m = [list(map(int, r)) for r in m]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    prev = 1
    for c in range(ncols):
        piv = None
        for i in range(r, len(m)):
            if m[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        for i in range(r + 1, len(m)):
            a = m[i][c]
            m[i] = [(p * x - a * y) // prev for x, y in zip(m[i], m[r])]
        prev = p
        r += 1
        if r == len(m):
            break
    return r


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[tuple[int, ...]]:
    """Integer primitive basis of the rational right kernel {x : rows x = 0}."""
    if not rows:
        return [tuple(1 if i == j else 0 for j in range(ncols)) for i in range(ncols)]
    red, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, p in zip(red, pivots):
            x[p] = -row[f]
        basis.append(integerize(x))
    return basis


def row_space_key(rows: Sequence[Sequence], ncols: int) -> tuple[tuple[int, ...], ...]:
    """Canonical hashable description of the Q-span of ``rows``."""
    red, _ = rref(rows, ncols)
    return tuple(integerize(r) for r in red)


def solve(rows: Sequence[Sequence], rhs: Sequence) -> list[Fraction] | None:
    """One solution of ``rows x = rhs`` (free variables set to 0), or None."""
    ncols = len(rows[0]) if rows else 0
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug, ncols + 1)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for row, p in zip(red, pivots):
        x[p] = row[ncols]
    return x


def determinant(m: Sequence[Sequence]) -> Fraction:
    n = len(m)
    a = [[as_fraction(x) for x in r] for r in m]
    det = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        for i in range(c + 1, n):
            f = a[i][c] / a[c][c]
            if f:
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return det


# ---------------------------------------------------------------------------
# integer lattices


def hermite_normal_form(rows: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Row-style Hermite normal form; zero rows are dropped.

    Pivots are positive and entries above a pivot are reduced into
    ``[0, pivot)``.  The result is a canonical basis of the lattice spanned by
    ``rows``; applying the function twice changes nothing.
    """
    m = [list(map(int, r)) for r in rows if any(r)]
    if not m:
        return []
    ncols = len(m[0])
    r = 0
    pivots = []
    for c in range(ncols):
        # euclid down column c on rows r..end
        while True:
            nz = [i for i in range(r, len(m)) if m[i][c] != 0]
            if not nz:
                break
            i0 = min(nz, key=lambda i: abs(m[i][c]))
            m[r], m[i0] = m[i0], m[r]
            done = True
            for i in range(r + 1, len(m)):
                if m[i][c]:
                    q = m[i][c] // m[r][c]
                    m[i] = [a - q * b for a, b in zip(m[i], m[r])]
                    if m[i][c]:
                        done = False
            if done:
                break
        if r < len(m) and m[r][c] != 0:
            if m[r][c] < 0:
                m[r] = [-a for a in m[r]]
            pivots.append(c)
            r += 1
            if r == len(m):
                break
    m = m[:r]
    for i, c in enumerate(pivots):
        for j in range(i):
            q = m[j][c] // m[i][c]
            if q:
                m[j] = [a - q * b for a, b in zip(m[j], m[i])]
    return [tuple(row) for row in m]


def integer_kernel(rows: Sequence[Sequence[int]], ncols: int) -> list[tuple[int, ...]]:
    """Basis of the integer kernel {x in Z^ncols : rows x = 0} (column reduction)."""
    a = [list(map(int, r)) for r in rows]
    u = [[1 if i == j else 0 for j in range(ncols)] for i in range(ncols)]  # columns = transform

    def colop(dst, src, q):
        # col_dst -= q * col_src
        for row in a:
            row[dst] -= q * row[src]
        for row in u:
            row[dst] -= q * row[src]

    def swap(c1, c2):
        for row in a:
            row[c1], row[c2] = row[c2], row[c1]
        for row in u:
            row[c1], row[c2] = row[c2], row[c1]

    c = 0
    for row in a:
        if c >= ncols:
            break
        while True:
            nz = [j for j in range(c, ncols) if row[j] != 0]
            if not nz:
                break
            j0 = min(nz, key=lambda j: abs(row[j]))
            swap(c, j0)
            done = True
            for j in range(c + 1, ncols):
                if row[j]:
                    colop(j, c, row[j] // row[c])
                    if row[j]:
                        done = False
            if done:
                break
        if row[c] != 0:
            c += 1
    return [tuple(u[i][j] for i in range(ncols)) for j in range(c, ncols)]


@dataclass(frozen=True)
class LatticeBasis:
    """Rows spanning a sublattice of Z^ambient_rank (rows may be dependent)."""

    ambient_rank: int
    rows: tuple[tuple[int, ...], ...] = field(default=())

    def __post_init__(self):
        rows = tuple(tuple(int(a) for a in r) for r in self.rows)
        for r in rows:
            if len(r) != self.ambient_rank:
                raise ValueError(f"row {r} does not have length {self.ambient_rank}")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def standard(cls, r: int) -> "LatticeBasis":
        return cls(r, tuple(tuple(1 if i == j else 0 for j in range(r)) for i in range(r)))

    @property
    def rank(self) -> int:
        return _int_rank([list(r) for r in self.rows]) if self.rows else 0

    def normal_form(self) -> "LatticeBasis":
        return LatticeBasis(self.ambient_rank, tuple(hermite_normal_form(self.rows)))


def lattice_index(sub: LatticeBasis, sup: LatticeBasis):
    """Group index [L_sup : L_sub], or ``INFINITE`` when the rank drops.

    ``sub`` must lie in the Q-span of ``sup``.  The index is the product of the
    pivots of the Hermite form of ``sub`` written in a basis of ``sup``.
    """
    if sub.ambient_rank != sup.ambient_rank:
        raise ValueError("dimension mismatch between lattices")
    basis = hermite_normal_form(sup.rows)
    r = len(basis)
    sub_rows = [row for row in sub.rows if any(row)]
    if sub_rows and rank(list(basis) + sub_rows) > r:
        raise ValueError("sub is not contained in the span of super")
    sub_rank = _int_rank([list(x) for x in sub_rows]) if sub_rows else 0
    if sub_rank < r:
        return INFINITE
    if r == 0:
        return 1
    pivots = [next(j for j, a in enumerate(row) if a) for row in basis]
    coords = []
    for s in sub_rows:
        c = []
        for i, p in enumerate(pivots):
            val = Fraction(s[p]) - sum(c[j] * basis[j][p] for j in range(i))
            c.append(val / basis[i][p])
        if any(x.denominator != 1 for x in c):
            raise ValueError("sub is not a sublattice of super")
        coords.append(tuple(int(x) for x in c))
    h = hermite_normal_form(coords)
    idx = 1
    for i, row in enumerate(h):
        idx *= row[i]
    return idx


def saturate(basis: LatticeBasis) -> LatticeBasis:
    """Basis (in Hermite form) of span_Q(rows) intersected with Z^ambient_rank."""
    m = basis.ambient_rank
    rows = [r for r in basis.rows if any(r)]
    if not rows:
        return LatticeBasis(m, ())
    perp = nullspace(rows, m)
    if not perp:
        return LatticeBasis.standard(m)
    ker = integer_kernel(perp, m)
    return LatticeBasis(m, tuple(hermite_normal_form(ker)))


def to_chart(v: Sequence) -> tuple:
    """Quotient vector (n+1 entries) -> chart coordinates (n entries)."""
    a0 = v[0]
    return tuple(a - a0 for a in v[1:])


def from_chart(x: Sequence) -> tuple:
    return (0,) + tuple(x)


def primitive_vector(v: Sequence[int], n: int | None = None) -> tuple[int, ...]:
    """Primitive generator of the ray through ``v`` in Z^{n+1}/Z(1,...,1).

    Returned as the representative with first entry 0.
    """
    if n is not None and len(v) != n + 1:
        raise ValueError(f"expected {n + 1} entries, got {len(v)}")
    x = to_chart([int(a) for a in v])
    if not any(x):
        raise ValueError("zero class has no primitive generator")
    return from_chart(primitive(x))


# ---------------------------------------------------------------------------
# linear systems and LP feasibility


@dataclass(frozen=True)
class LinearSystem:
    """Rows ``a`` with right-hand sides ``b``.

    equalities:  a.x == b
    inequalities: a.x >= b
    strict_inequalities: a.x > b
    """

    nvars: int
    equalities: tuple = ()
    inequalities: tuple = ()
    strict_inequalities: tuple = ()

    def __post_init__(self):
        for name in ("equalities", "inequalities", "strict_inequalities"):
            rows = tuple(
                (tuple(as_fraction(a) for a in row), as_fraction(b))
                for row, b in getattr(self, name)
            )
            for row, _ in rows:
                if len(row) != self.nvars:
                    raise ValueError(f"row of length {len(row)} in a system with {self.nvars} variables")
            object.__setattr__(self, name, rows)

    def satisfied_by(self, x: Sequence) -> bool:
        x = [as_fraction(a) for a in x]
        return (
            all(dot(a, x) == b for a, b in self.equalities)
            and all(dot(a, x) >= b for a, b in self.inequalities)
            and all(dot(a, x) > b for a, b in self.strict_inequalities)
        )


def lp_feasible(system: LinearSystem, method: str = "fourier-motzkin") -> tuple[Fraction, ...] | None:
    """Decide feasibility of a mixed strict/non-strict rational system.

    Returns a witness satisfying every constraint exactly, or None.  The
    default engine is exact Fourier-Motzkin elimination; ``"simplex"`` selects
    an exact two-phase simplex with Bland's rule instead.  Both are
    deterministic.
    """
    if method == "simplex":
        return _simplex_feasible(system)
    if method in ("fourier-motzkin", "fm"):
        return fourier_motzkin(system)
    raise ValueError(f"unknown method {method!r}")


def _simplex_feasible(system: LinearSystem):
    d = system.nvars
    has_strict = bool(system.strict_inequalities)
    # columns: x+ (d), x- (d), [s], slacks..., then rhs
    rows = []  # (coeff dict over columns, rhs)
    ncols = 2 * d + (1 if has_strict else 0)
    s_col = 2 * d
    slack_rows = []
    for a, b in system.equalities:
        rows.append((list(a) + [-x for x in a] + ([0] if has_strict else []), b, None))
    for a, b in system.inequalities:
        rows.append((list(a) + [-x for x in a] + ([0] if has_strict else []), b, -1))
    for a, b in system.strict_inequalities:
        rows.append((list(a) + [-x for x in a] + [-1], b, -1))
    if has_strict:
        cap = [0] * (2 * d) + [1]
        rows.append((cap, Fraction(1), 1))
    nslack = sum(1 for r in rows if r[2] is not None)
    total = ncols + nslack
    tab = []
    k = 0
    for coeffs, b, sl in rows:
        row = [Fraction(c) for c in coeffs] + [Fraction(0)] * nslack
        if sl is not None:
            row[ncols + k] = Fraction(sl)
            k += 1
        rhs = Fraction(b)
        if rhs < 0:
            row = [-c for c in row]
            rhs = -rhs
        tab.append(row + [rhs])
    m = len(tab)
    if m == 0:
        return tuple(Fraction(0) for _ in range(d))
    # phase I with artificials
    art0 = total
    for i, row in enumerate(tab):
        rhs = row.pop()
        row.extend(Fraction(1) if j == i else Fraction(0) for j in range(m))
        row.append(rhs)
    width = total + m
    basis = [art0 + i for i in range(m)]
    # objective: minimize sum of artificials -> reduced costs
    cost = [Fraction(0)] * width + [Fraction(0)]
    for j in range(art0, art0 + m):
        cost[j] = Fraction(1)
    obj = _reduced(cost, tab, basis)
    _run_simplex(tab, basis, obj, width)
    if obj[-1] != 0:
        return None
    # drive artificials out
    for i in range(m):
        if basis[i] >= art0:
            piv = next((j for j in range(total) if tab[i][j] != 0), None)
            if piv is not None:
                _pivot(tab, basis, i, piv, None)
    keep = [i for i in range(m) if basis[i] < art0]
    tab = [tab[i][:total] + [tab[i][-1]] for i in keep]
    basis = [basis[i] for i in keep]
    if has_strict:
        cost = [Fraction(0)] * total + [Fraction(0)]
        cost[s_col] = Fraction(-1)  # minimize -s
        obj = _reduced(cost, tab, basis)
        _run_simplex(tab, basis, obj, total)
        if -obj[-1] <= 0:
            return None
    vals = [Fraction(0)] * total
    for i, bcol in enumerate(basis):
        vals[bcol] = tab[i][-1]
    x = tuple(vals[j] - vals[d + j] for j in range(d))
    return x


def _reduced(cost, tab, basis):
    obj = list(cost)
    for i, bcol in enumerate(basis):
        c = obj[bcol]
        if c:
            obj = [o - c * t for o, t in zip(obj, tab[i])]
    # obj[-1] holds -value; store value
    obj[-1] = -obj[-1]
    return obj


def _pivot(tab, basis, r, c, obj):
    p = tab[r][c]
    if p != 1:
        tab[r] = [a / p for a in tab[r]]
    pr = tab[r]
    for i in range(len(tab)):
        if i != r:
            f = tab[i][c]
            if f:
                tab[i] = [a - f * b for a, b in zip(tab[i], pr)]
    if obj is not None:
        f = obj[c]
        if f:
            # obj[-1] stores the objective value: value += f * rhs
            val = obj[-1] + f * pr[-1]
            for j in range(len(obj) - 1):
                obj[j] -= f * pr[j]
            obj[-1] = val
    basis[r] = c


def _run_simplex(tab, basis, obj, width):
    # minimize; Bland's rule
    while True:
        enter = next((j for j in range(width) if obj[j] < 0), None)
        if enter is None:
            return
        best = None
        for i, row in enumerate(tab):
            if row[enter] > 0:
                ratio = row[-1] / row[enter]
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            raise ArithmeticError("unbounded phase; should not happen for bounded objectives")
        _pivot(tab, basis, best[1], enter, obj)


# ---------------------------------------------------------------------------
# Fourier-Motzkin


def _normalize_constraint(a, b):
    # scale so that the first nonzero coefficient has absolute value 1
    for x in a:
        if x != 0:
            s = abs(x)
            return tuple(y / s for y in a), b / s
    return tuple(a), b


def fourier_motzkin(system: LinearSystem):
    """Exact feasibility by variable elimination with strictness tracking.

    The witness is rebuilt by back-substitution; each variable takes the
    midpoint of its tightest bounds, or bound +/- 1 when one side is open.
    """
    d = system.nvars
    # eliminate equalities by substitution
    eqs = [(list(a), b) for a, b in system.equalities]
    subst = []  # (var, coeffs over all vars, const): x_var = const - sum(coeffs * x)
    cons = [(list(a), b, False) for a, b in system.inequalities] + [
        (list(a), b, True) for a, b in system.strict_inequalities
    ]
    while eqs:
        a, b = eqs.pop()
        j = next((i for i, x in enumerate(a) if x != 0), None)
        if j is None:
            if b != 0:
                return None
            continue
        p = a[j]
        expr = [x / p for x in a]
        const = b / p
        # x_j = const - sum_{i != j} expr[i] x_i
        subst.append((j, expr, const))

        def sub(row, rhs):
            f = row[j]
            if f == 0:
                return row, rhs
            return [r - f * e for r, e in zip(row, expr)], rhs - f * const

        eqs = [tuple(sub(list(r), c)) for r, c in eqs]
        eqs = [(list(r), c) for r, c in eqs]
        cons = [(*sub(r, c), s) for r, c, s in cons]
    stages = []
    order = list(range(d))
    live = cons
    for j in order:
        stages.append((j, [c for c in live if c[0][j] != 0]))
        lower = [c for c in live if c[0][j] > 0]
        upper = [c for c in live if c[0][j] < 0]
        rest = [c for c in live if c[0][j] == 0]
        new = {}
        for a1, b1, s1 in lower:
            for a2, b2, s2 in upper:
                f1, f2 = -a2[j], a1[j]
                a = tuple(f1 * x + f2 * y for x, y in zip(a1, a2))
                b = f1 * b1 + f2 * b2
                rest.append((list(a), b, s1 or s2))
        for a, b, s in rest:
            na, nb = _normalize_constraint(a, b)
            prev = new.get(na)
            if prev is None or nb > prev[0] or (nb == prev[0] and s and not prev[1]):
                new[na] = (nb, s)
        live = []
        for na, (nb, s) in new.items():
            if all(x == 0 for x in na):
                if nb > 0 or (nb == 0 and s):
                    return None
                continue
            live.append((list(na), nb, s))
    x = [Fraction(0)] * d
    for j, involved in reversed(stages):
        lo = hi = None
        lo_strict = hi_strict = False
        for a, b, s in involved:
            rest = b - sum(a[i] * x[i] for i in range(d) if i != j)
            bound = rest / a[j]
            if a[j] > 0:
                if lo is None or bound > lo or (bound == lo and s):
                    lo, lo_strict = bound, s
            else:
                if hi is None or bound < hi or (bound == hi and s):
                    hi, hi_strict = bound, s
        if lo is not None and hi is not None:
            x[j] = lo if lo == hi else (lo + hi) / 2
        elif lo is not None:
            x[j] = lo + 1 if lo_strict else lo
        elif hi is not None:
            x[j] = hi - 1 if hi_strict else hi
        else:
            x[j] = Fraction(0)
    for j, expr, const in reversed(subst):
        x[j] = const - sum(expr[i] * x[i] for i in range(d) if i != j)
    return tuple(x)


# ---------------------------------------------------------------------------
# V <-> H conversion (brute force over tight subsets; fine for dimension <= ~10)


def _homogenize(vertices, rays, lineality):
    gens = []
    for v in vertices:
        gens.append(integerize([Fraction(1)] + [as_fraction(a) for a in v]))
    for r in rays:
        gens.append(integerize([Fraction(0)] + [as_fraction(a) for a in r]))
    lin = [integerize([Fraction(0)] + [as_fraction(a) for a in l]) for l in lineality]
    return [g for g in gens if any(g)], [l for l in lin if any(l)]


def cone_facets(gens: Sequence[Sequence[int]], lin: Sequence[Sequence[int]], m: int):
    """Facet normals of pos(gens) + span(lin) inside its own span.

    Returns (span_perp, facets): integer equations of the span and inward
    facet normals chosen inside the span (hence unique up to scale).
    """
    allv = [list(g) for g in gens] + [list(l) for l in lin]
    perp = nullspace(allv, m) if allv else [tuple(1 if i == j else 0 for j in range(m)) for i in range(m)]
    if not allv:
        return perp, []
    span_basis, _ = rref(allv, m)
    span_basis = [integerize(r) for r in span_basis]
    D = len(span_basis)
    lr = rank(lin) if lin else 0
    if D == lr:
        return perp, []
    size = D - 1 - lr
    facets = {}
    gl = [tuple(g) for g in gens]
    for T in itertools.combinations(range(len(gl)), size):
        sub = [gl[i] for i in T] + [tuple(l) for l in lin]
        M = [[dot(b, w) for b in span_basis] for w in sub]
        if M and rank(M) != D - 1:
            continue
        ker = nullspace(M, D) if M else nullspace([], D)
        if len(ker) != 1:
            continue
        c = ker[0]
        a = [sum(ci * b[k] for ci, b in zip(c, span_basis)) for k in range(m)]
        a = primitive(a)
        vals = [dot(a, g) for g in gl]
        if all(v >= 0 for v in vals):
            facets[a] = True
        elif all(v <= 0 for v in vals):
            facets[tuple(-x for x in a)] = True
    return perp, sorted(facets)


def vrep_to_hrep(vertices, rays=(), lineality=()):
    """H-representation of conv(vertices) + cone(rays) + span(lineality).

    Returns ``(equalities, inequalities)``; each entry is ``(row, rhs)`` with
    integer rows, meaning ``row.x == rhs`` resp. ``row.x >= rhs``.  The facet
    list is irredundant and sorted.
    """
    gens, lin = _homogenize(vertices, rays, lineality)
    if not gens and not lin:
        raise ValueError("empty generator set")
    if not any(g[0] for g in gens):
        raise ValueError("a polyhedron needs at least one vertex")
    m = len(gens[0]) if gens else len(lin[0])
    perp, facets = cone_facets(gens, lin, m)
    eqs = []
    for e in perp:
        eqs.append((tuple(e[1:]), -e[0]))
    eqs = sorted(_canon_eq(a, b) for a, b in eqs)
    ineqs = []
    for a in facets:
        tight = [g for g in gens if dot(a, g) == 0]
        if not any(g[0] for g in tight):
            continue  # face at infinity
        ineqs.append((tuple(a[1:]), -a[0]))
    return eqs, sorted(ineqs)


def _canon_eq(a, b):
    j = next((i for i, x in enumerate(a) if x), None)
    if j is not None and a[j] < 0:
        return tuple(-x for x in a), -b
    return tuple(a), b


def hrep_to_vrep(equalities, inequalities, nvars: int):
    """Generators of {x : eq rows == rhs, ineq rows >= rhs}.

    Returns ``(vertices, rays, lineality)`` with Fraction vertices and integer
    rays, or None if the polyhedron is empty.  Vertices are the minimal faces
    of the pointed part (orthogonal to the lineality space).
    """
    m = nvars + 1
    eq = [tuple([-as_fraction(b)] + [as_fraction(a) for a in row]) for row, b in equalities]
    ineq = [tuple([-as_fraction(b)] + [as_fraction(a) for a in row]) for row, b in inequalities]
    ineq.append(tuple([Fraction(1)] + [Fraction(0)] * nvars))
    eq = [integerize(r) for r in eq if any(r)]
    ineq = [integerize(r) for r in ineq]
    lin = nullspace(eq + ineq, m)
    eq2 = eq + [tuple(l) for l in lin]
    E = nullspace(eq2, m) if eq2 else nullspace([], m)
    D = len(E)
    if D == 0:
        return None
    r_eq = rank(eq2) if eq2 else 0
    size = m - 1 - r_eq
    rays = {}
    cand = [r for r in ineq if any(r)]
    for T in itertools.combinations(range(len(cand)), size):
        rows = eq2 + [cand[i] for i in T]
        ker = nullspace(rows, m)
        if len(ker) != 1:
            continue
        r = ker[0]
        for s in (r, tuple(-x for x in r)):
            if all(dot(c, s) >= 0 for c in cand):
                rays[s] = True
    if size == 0 and D == 1:
        r = E[0]
        for s in (r, tuple(-x for x in r)):
            if all(dot(c, s) >= 0 for c in cand):
                rays[s] = True
    verts = []
    out_rays = []
    for r in sorted(rays):
        if r[0] > 0:
            verts.append(tuple(Fraction(a, r[0]) for a in r[1:]))
        elif r[0] == 0:
            out_rays.append(tuple(r[1:]))
    if not verts:
        return None
    return verts, out_rays, [tuple(l[1:]) for l in lin]
