"""Recovering curve multiplicities in R^4/R from their Chow hypersurfaces.

The locus Lambda = Lambda_0 u (-Lambda_0) is where the support of Z_Sigma can
lose information about Sigma.  Multiplicity recovery is done by exact linear
algebra: Z is linear, so the weights of Z_target on the fragments of a common
refinement give one linear equation each in the unknown multiplicities.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .chow import gamma0, gamma0_13_rays, phi_cell, phi_complex, _phi_qv
from .complexes import (
    Cell,
    QuotientVector,
    WeightedComplex,
    _qv,
    complex_equal,
    fan_from_rays,
    normalize,
    refine_weights,
)
from .minkowski import pairwise_sums, cell_sum
from .ratlin import INFINITE, LinearSystem, integerize, lp_feasible, rank, rref

N_LAMBDA = 3  # curves live in R^4/R


def lambda_rays() -> list[QuotientVector]:
    """rho_1..rho_4 = pos(e_0..e_3), rho_5..rho_8 = pos(-e_0..-e_3)."""
    e = [QuotientVector.unit(i, N_LAMBDA) for i in range(4)]
    return e + [-v for v in e]


def lambda_locus() -> WeightedComplex:
    return WeightedComplex(N_LAMBDA, 1, tuple((Cell.cone([r], N_LAMBDA), Fraction(1)) for r in lambda_rays()))


def in_lambda(p) -> bool:
    """p lies on span(e_i) for some i."""
    p = _qv(p)
    if p.is_zero():
        return True
    for i in range(4):
        others = [p[j] for j in range(4) if j != i]
        if others[0] == others[1] == others[2]:
            return True
    return False


def in_plane(p, i: int, j: int) -> bool:
    """p lies in H_ij = span(e_i, e_j): the remaining two coordinates agree."""
    p = _qv(p)
    k, l = [x for x in range(4) if x not in (i, j)]
    return p[k] == p[l]


def in_plane_unions(p) -> bool:
    return all(in_plane(p, a, b) or in_plane(p, c, d) for (a, b), (c, d) in (((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2))))


# ---------------------------------------------------------------------------
# separating cones


# the assignment printed with the injectivity argument
SEPARATING_ASSIGNMENT = {1: ("e01", "-f3"), 2: ("e01", "-f3"), 5: ("e01", "-f3"), 6: ("e01", "-f3"),
                         3: ("e01", "-f2"), 4: ("e01", "-f2"), 7: ("e01", "-f2"), 8: ("e01", "-f2")}

# a variant that passes every check: pos(e23, -f0) for the rays along e2 and e3
WORKING_ASSIGNMENT = {1: ("e01", "-f3"), 2: ("e01", "-f3"), 5: ("e01", "-f3"), 6: ("e01", "-f3"),
                      3: ("e23", "-f0"), 4: ("e23", "-f0"), 7: ("e23", "-f0"), 8: ("e23", "-f0")}


@dataclass
class SeparationCertificate:
    cones: dict  # i -> Cell phi(rho_i) + sigma_i
    dimension_ok: dict  # i -> bool
    no_overlap: dict  # (i, j) -> bool: no 3-dimensional overlap with phi(rho_j) + Gamma_0
    interior_disjoint: dict  # (i, j) -> bool: relative interior misses |phi(rho_j) + Gamma_0| entirely

    @property
    def passed(self) -> bool:
        return all(self.dimension_ok.values()) and all(self.interior_disjoint.values())

    def failures(self) -> list:
        out = [("dimension", i) for i, ok in sorted(self.dimension_ok.items()) if not ok]
        out += [("overlap", ij) for ij, ok in sorted(self.interior_disjoint.items()) if not ok]
        return out

    def __bool__(self):
        return self.passed


def _relint_meets(a: Cell, b: Cell) -> bool:
    """Does the relative interior of the cone a meet the cone b?"""
    ga = [r.chart() for r in a.rays]
    gb = [r.chart() for r in b.rays]
    na, nb = len(ga), len(gb)
    nvar = na + nb
    dim = len(ga[0]) if ga else len(gb[0])
    eqs = [([g[t] for g in ga] + [-g[t] for g in gb], 0) for t in range(dim)]
    eqs.append(([1] * na + [0] * nb, 1))  # scale; a is pointed so the combination is nonzero
    strict = [([1 if k == i else 0 for k in range(nvar)], 0) for i in range(na)]
    ineq = [([1 if k == na + i else 0 for k in range(nvar)], 0) for i in range(nb)]
    return lp_feasible(LinearSystem(nvar, equalities=eqs, inequalities=ineq, strict_inequalities=strict)) is not None


class CertificationError(ValueError):
    def __init__(self, certificate: SeparationCertificate):
        self.certificate = certificate
        super().__init__(f"separating cone certification failed: {certificate.failures()}")


def separating_cones(assignment: dict | None = None, strict: bool = True) -> SeparationCertificate:
    """Check that phi(rho_i) + sigma_i is 3-dimensional and not overlapped by phi(rho_j) + Gamma_0, j != i.

    ``no_overlap`` asks only that no 3-dimensional piece of phi(rho_j) +
    Gamma_0 overlaps the cone, which is what the multiplicity argument needs;
    ``interior_disjoint`` asks that the relative interior misses that set
    entirely.  Without an argument the printed assignment is checked.
    With ``strict`` a failed certificate raises CertificationError, which
    carries the certificate.
    """
    if assignment is None:
        assignment = SEPARATING_ASSIGNMENT
    rays = gamma0_13_rays()
    lam = lambda_rays()
    g0 = gamma0(1, 3).complex
    cones = {}
    dim_ok = {}
    for i, (a, b) in sorted(assignment.items()):
        c = Cell.cone([_phi_qv(1, 3, lam[i - 1]), rays[a], rays[b]], 5)
        cones[i] = c
        dim_ok[i] = c.dim == 3
    no_overlap = {}
    disjoint = {}
    for i in sorted(cones):
        for j in range(1, 9):
            if j == i:
                continue
            pj = Cell.cone([_phi_qv(1, 3, lam[j - 1])], 5)
            sums = [cell_sum(pj, g) for g, _ in g0.cells]
            full = [(s, Fraction(1)) for s in sums if s.dim == 3]
            _, frags = refine_weights(5, 3, [[(cones[i], Fraction(1))], full])
            no_overlap[(i, j)] = not any(wa != 0 and wb != 0 for _, (wa, wb) in frags)
            disjoint[(i, j)] = not any(_relint_meets(cones[i], s) for s in sums)
    cert = SeparationCertificate(cones, dim_ok, no_overlap, disjoint)
    if strict and not cert.passed:
        raise CertificationError(cert)
    return cert


# ---------------------------------------------------------------------------
# multiplicity recovery


@dataclass
class RecoveryResult:
    status: str  # "unique", "inconsistent" or "underdetermined"
    multiplicities: tuple[Fraction, ...] | None = None
    kernel_dim: int = 0
    equations: int = 0

    @property
    def ok(self) -> bool:
        return self.status == "unique"


def _ray_units(v) -> tuple[Cell, Fraction]:
    """Primitive ray of an integer vector and its lattice content."""
    v = _qv(v)
    x = [int(a) for a in v.chart()]
    g = math.gcd(*x)
    if g == 0:
        raise ValueError("zero candidate ray")
    return Cell.cone([v], v.n), Fraction(g)


def basis_chow_cells(v, k: int = 1) -> list[tuple[Cell, Fraction]]:
    """Weighted pairwise sums making up Z(F_v), F_v = one unit of the vector v."""
    c, g = _ray_units(v)
    fan = WeightedComplex(c.n, 1, ((c, g),))
    g0 = gamma0(k, c.n).complex
    return [(r.sum_cell, r.raw_weight) for r in pairwise_sums(phi_complex(fan, k), g0) if r.raw_weight != 0]


def recover_multiplicities(candidate_rays: Sequence, z_target: WeightedComplex) -> RecoveryResult:
    """Solve Z(sum_i m_i F_{v_i}) = Z_target exactly for the m_i.

    Each candidate is an integer vector v of R^4/R; F_v puts weight
    content(v) on the primitive ray of v, so m_i counts copies of v.
    """
    cands = [_qv(v) for v in candidate_rays]
    m = len(cands)
    if z_target.cells and z_target.dim != 3:
        raise ValueError("target must be 3-dimensional in R^6/R")
    families = [basis_chow_cells(v) for v in cands]
    families.append(list(z_target.cells))
    N = 5
    _, frags = refine_weights(N, 3, families)
    rows = []
    for p, w in sorted(frags, key=lambda pw: pw[0].interior_point()):
        rows.append(list(w[:m]) + [w[m]])
    if m == 0:
        ok = all(r[-1] == 0 for r in rows)
        return RecoveryResult("unique" if ok else "inconsistent", (), 0, len(rows))
    if not rows:
        rows = [[Fraction(0)] * (m + 1)]
    red, piv = rref(rows, m + 1)
    if m in piv:
        return RecoveryResult("inconsistent", None, 0, len(rows))
    kdim = m - len(piv)
    if kdim:
        return RecoveryResult("underdetermined", None, kdim, len(rows))
    sol = [Fraction(0)] * m
    for r, c in zip(red, piv):
        sol[c] = r[m]
    return RecoveryResult("unique", tuple(sol), 0, len(rows))


def support_outside_lambda(s1: WeightedComplex, s2: WeightedComplex, z1=None, z2=None) -> bool:
    """|s1| minus Lambda equals |s2| minus Lambda, for curve fans with equal Chow supports."""
    from .chow import chow_hypersurface

    z1 = z1 if z1 is not None else chow_hypersurface(s1, 1)
    z2 = z2 if z2 is not None else chow_hypersurface(s2, 1)
    if not complex_equal(z1, z2, "support_only"):
        raise ValueError("the Chow hypersurfaces have different supports")

    def rays_off(s):
        out = set()
        for c, w in normalize(s).cells:
            for r in c.rays:
                if not in_lambda(r):
                    out.add(r)
        return out

    return rays_off(s1) == rays_off(s2)


# ---------------------------------------------------------------------------
# random balanced curves


def random_balanced_fan(rng: random.Random, n: int = 3, nrays: int | None = None, lo: int = -3, hi: int = 3,
                        wlo: int = 1, whi: int = 4) -> WeightedComplex:
    """Random balanced 1-dimensional fan in R^{n+1}/R.

    Rays have entries in [lo, hi] and weights in [wlo, whi]; one closing ray
    is added with weight equal to the lattice content of the weighted sum, so
    the result is balanced by construction.  Repeated rays are merged.
    """
    if nrays is None:
        nrays = rng.randint(2, 5)
    prims, ws = [], []
    while len(prims) < nrays:
        v = [rng.randint(lo, hi) for _ in range(n + 1)]
        if len(set(v)) == 1:
            continue
        prims.append(integerize(QuotientVector(v).chart()))
        ws.append(rng.randint(wlo, whi))
    total = [sum(w * x[t] for x, w in zip(prims, ws)) for t in range(n)]
    cells = [(Cell.cone([QuotientVector.from_chart(x)], n), Fraction(w)) for x, w in zip(prims, ws)]
    if any(total):
        g = math.gcd(*total)
        cells.append((Cell.cone([QuotientVector.from_chart([-a // g for a in total])], n), Fraction(g)))
    return normalize(WeightedComplex(n, 1, tuple(cells)))
