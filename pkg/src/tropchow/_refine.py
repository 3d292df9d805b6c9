"""Common refinement of pointed integer cones.

A piece is a pointed polyhedral cone in Z^m given by its extreme rays and its
facet normals (both primitive integer vectors, normals chosen inside the
linear span of the piece, inward pointing).  Pieces that share a linear span
are cut against each other's facet hyperplanes until every fragment is either
inside or interior-disjoint from every other piece; weights are then summed
on each fragment.

Weights are tuples of Fractions so that several weight functions can be
refined at once (used for support comparison and for multiplicity recovery).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .ratlin import cone_facets, dot, primitive, row_space_key


@dataclass(frozen=True)
class Piece:
    rays: tuple[tuple[int, ...], ...]
    facets: tuple[tuple[int, ...], ...]
    key: tuple
    dim: int
    m: int

    def interior_point(self) -> tuple[int, ...]:
        if not self.rays:
            return tuple([0] * self.m)
        return tuple(sum(c) for c in zip(*self.rays))

    def strictly_contains(self, x) -> bool:
        """x is assumed to lie in the span of the piece."""
        return all(dot(f, x) > 0 for f in self.facets)

    def contains(self, x) -> bool:
        return all(dot(f, x) >= 0 for f in self.facets)


def make_piece(gens, m: int) -> Piece:
    """Piece spanned by nonzero integer generators (the cone must be pointed)."""
    gens = sorted({primitive(g) for g in gens if any(g)})
    if not gens:
        return Piece((), (), (), 0, m)
    key = row_space_key(gens, m)
    D = len(key)
    if D == 1:
        r = gens[0]
        if any(g != r for g in gens):
            raise ValueError("generators contain a line")
        return Piece((r,), (r,), key, 1, m)
    if len(gens) == D:
        facets = _simplicial_facets(gens, key, m)
    else:
        _, facets = cone_facets(gens, [], m)
    masks = {g: frozenset(i for i, f in enumerate(facets) if dot(f, g) == 0) for g in gens}
    rays = []
    for g in gens:
        z = masks[g]
        if all(not (masks[h] >= z) for h in gens if h != g):
            rays.append(g)
    if len(rays) < D:
        raise ValueError("generators contain a line")
    return Piece(tuple(rays), tuple(facets), key, D, m)


def _simplicial_facets(gens, key, m):
    from .ratlin import nullspace

    D = len(gens)
    coords = [[dot(b, g) for b in key] for g in gens]
    facets = []
    for i in range(D):
        rows = [coords[j] for j in range(D) if j != i]
        ker = nullspace(rows, D)
        c = ker[0]
        a = primitive([sum(ci * b[k] for ci, b in zip(c, key)) for k in range(m)])
        if dot(a, gens[i]) < 0:
            a = tuple(-x for x in a)
        facets.append(a)
    return sorted(facets)


def cut(piece: Piece, h) -> tuple[Piece | None, Piece | None]:
    """Split a piece by the hyperplane h.x = 0 into (h >= 0 part, h <= 0 part)."""
    s = [dot(h, r) for r in piece.rays]
    if all(x >= 0 for x in s):
        return piece, None
    if all(x <= 0 for x in s):
        return None, piece
    rays = piece.rays
    facets = piece.facets
    masks = [sum(1 << i for i, f in enumerate(facets) if dot(f, r) == 0) for r in rays]
    pos = [i for i, x in enumerate(s) if x > 0]
    neg = [i for i, x in enumerate(s) if x < 0]
    zero = [i for i, x in enumerate(s) if x == 0]
    new = []
    for p in pos:
        for q in neg:
            common = masks[p] & masks[q]
            if any((masks[r] & common) == common for r in range(len(rays)) if r != p and r != q):
                continue
            v = [s[p] * b - s[q] * a for a, b in zip(rays[p], rays[q])]
            new.append(primitive(v))
    hp = primitive(h)
    hn = tuple(-x for x in hp)

    def build(side, sign):
        rs = [rays[i] for i in side] + [rays[i] for i in zero] + new
        fs = []
        for i, f in enumerate(facets):
            bit = 1 << i
            if any(masks[j] & bit for j in side):
                fs.append(f)
        fs.append(hp if sign > 0 else hn)
        return Piece(tuple(dict.fromkeys(rs)), tuple(fs), piece.key, piece.dim, piece.m)

    return build(pos, 1), build(neg, -1)


def _separated(a: Piece, b: Piece) -> bool:
    for f in a.facets:
        if all(dot(f, r) <= 0 for r in b.rays):
            return True
    for f in b.facets:
        if all(dot(f, r) <= 0 for r in a.rays):
            return True
    return False


def _add(u, v):
    return tuple(x + y for x, y in zip(u, v))


def refine(items: list[tuple[Piece, tuple]]) -> list[tuple[Piece, tuple, tuple[int, ...]]]:
    """Common refinement of weighted pieces.

    Returns (fragment, summed weight, indices of covering items) for a family
    of fragments with pairwise disjoint relative interiors whose union is the
    union of the input pieces of top dimension within each span.  Every
    fragment lies inside or interior-disjoint from every input piece.
    """
    groups: dict[tuple, list[int]] = {}
    for idx, (p, _) in enumerate(items):
        groups.setdefault(p.key, []).append(idx)
    out = []
    for key in sorted(groups, key=lambda k: (len(k), k)):
        members = groups[key]
        if not key:
            # the origin: a single point
            total = None
            for j in members:
                total = items[j][1] if total is None else _add(total, items[j][1])
            out.append((items[members[0]][0], total, tuple(members)))
            continue
        for i in members:
            pi = items[i][0]
            cands = [j for j in members if j != i and not _separated(pi, items[j][0])]
            frags = [pi]
            hyper = []
            seen = set()
            for j in cands:
                for f in items[j][0].facets:
                    if f not in seen and tuple(-x for x in f) not in seen:
                        seen.add(f)
                        hyper.append(f)
            for h in hyper:
                nxt = []
                for fr in frags:
                    a, b = cut(fr, h)
                    if a is not None:
                        nxt.append(a)
                    if b is not None:
                        nxt.append(b)
                frags = nxt
            for fr in frags:
                x = fr.interior_point()
                cover = [i] + [j for j in cands if items[j][0].strictly_contains(x)]
                if min(cover) != i:
                    continue
                total = items[i][1]
                for j in cover[1:]:
                    total = _add(total, items[j][1])
                out.append((fr, total, tuple(sorted(cover))))
    return out


def zero_weight(length: int) -> tuple:
    return tuple(Fraction(0) for _ in range(length))
