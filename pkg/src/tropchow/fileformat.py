"""Line-oriented text format for complexes, Pluecker vectors, points and vector lists.

Grammar (one record per line, '#' starts a comment line, blank lines ignored)::

    document  := header record*
    header    := "tropchow 1"
    record    := "name" WORD
               | "kind" ("complex" | "pluecker" | "point" | "vectors")
               | "ambient" INT            # n: points of R^{n+1}/R
               | "ambient" INT INT        # k n: Pluecker space of (k, n)
               | "dim" INT                # complexes only
               | "flag" WORD              # known anomaly; the fixture loads flagged
               | "note" TEXT              # free provenance text, repeatable
               | "vector" RAT+            # n+1 entries, indexed from 0 in order
               | "label" INT TEXT         # name for a vector index
               | "cell" FIELD*            # complexes only
               | "coords" RAT+            # pluecker and point kinds
    FIELD     := ("v=" | "r=" | "l=") INTLIST | "m=" RAT
    INTLIST   := empty | INT ("," INT)*
    RAT       := INT | INT "/" INT

A cell without ``v=`` has the origin as its only vertex.  ``m=`` defaults
to 1.  Pluecker coordinates follow the colex order of the (k+1)-subsets.
Parse errors are reported as ``file:line:col: message``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .complexes import Cell, QuotientVector, WeightedComplex
from .troplin import PlueckerVector, subsets

HEADER = "tropchow 1"
KINDS = ("complex", "pluecker", "point", "vectors")


class FormatError(ValueError):
    def __init__(self, source: str, line: int, col: int, message: str):
        self.source, self.line, self.col, self.message = source, line, col, message
        super().__init__(f"{source}:{line}:{col}: {message}")


@dataclass
class CellRecord:
    vertices: tuple[int, ...] = ()
    rays: tuple[int, ...] = ()
    lineality: tuple[int, ...] = ()
    mult: Fraction = Fraction(1)


@dataclass
class Document:
    kind: str
    ambient: tuple[int, ...]  # (n,) or (k, n)
    name: str | None = None
    dim: int | None = None
    flags: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    vectors: list[tuple[Fraction, ...]] = field(default_factory=list)
    labels: dict[int, str] = field(default_factory=dict)
    cells: list[CellRecord] = field(default_factory=list)
    coords: tuple[Fraction, ...] | None = None

    @property
    def n(self) -> int:
        return self.ambient[-1]

    def payload(self):
        """The mathematical object described by the document."""
        if self.kind == "complex":
            return self.to_complex()
        if self.kind == "pluecker":
            return PlueckerVector(self.ambient[0], self.ambient[1], self.coords)
        if self.kind == "point":
            return QuotientVector(self.coords)
        return [QuotientVector(v) for v in self.vectors]

    def to_complex(self) -> WeightedComplex:
        vs = [QuotientVector(v) for v in self.vectors]
        origin = QuotientVector([0] * (self.n + 1))
        cells = []
        for c in self.cells:
            verts = tuple(vs[i] for i in c.vertices) or (origin,)
            cell = Cell(self.n, verts, tuple(vs[i] for i in c.rays), tuple(vs[i] for i in c.lineality))
            cells.append((cell, c.mult))
        return WeightedComplex(self.n, self.dim, tuple(cells))


# ---------------------------------------------------------------------------
# parsing


def _rat(tok: str, err) -> Fraction:
    try:
        if "/" in tok:
            a, b = tok.split("/")
            if not b.lstrip("-").isdigit() or not a.lstrip("-").isdigit():
                raise ValueError
            return Fraction(int(a), int(b))
        return Fraction(int(tok))
    except (ValueError, ZeroDivisionError):
        raise err(f"not an exact rational: {tok!r}") from None


def _int(tok: str, err) -> int:
    try:
        return int(tok)
    except ValueError:
        raise err(f"not an integer: {tok!r}") from None


def _tokens(line: str):
    """Whitespace-separated tokens with their 1-based columns."""
    out, i = [], 0
    while i < len(line):
        if line[i].isspace():
            i += 1
            continue
        j = i
        while j < len(line) and not line[j].isspace():
            j += 1
        out.append((line[i:j], i + 1))
        i = j
    return out


def parse(text: str, source: str = "<string>") -> Document:
    lines = text.splitlines()
    doc = {"flags": [], "notes": [], "vectors": [], "labels": {}, "cells": []}
    seen_header = False
    for lineno, raw in enumerate(lines, 1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        toks = _tokens(raw)
        key, kcol = toks[0]

        def err(msg, col=kcol):
            return FormatError(source, lineno, col, msg)

        if not seen_header:
            if [t for t, _ in toks] != HEADER.split():
                raise err(f"expected header {HEADER!r}")
            seen_header = True
            continue
        args = toks[1:]
        if key in ("name", "kind", "dim", "flag"):
            if len(args) != 1:
                raise err(f"{key} takes exactly one argument")
            val, col = args[0]
            if key in doc and key != "flags":
                raise err(f"duplicate {key}")
            if key == "kind":
                if val not in KINDS:
                    raise err(f"unknown kind {val!r}", col)
                doc["kind"] = val
            elif key == "dim":
                doc["dim"] = _int(val, lambda m: err(m, col))
            elif key == "flag":
                doc["flags"].append(val)
            else:
                doc["name"] = val
        elif key == "ambient":
            if "ambient" in doc:
                raise err("duplicate ambient")
            if len(args) not in (1, 2):
                raise err("ambient takes n or k n")
            doc["ambient"] = tuple(_int(t, lambda m, c=c: err(m, c)) for t, c in args)
        elif key == "note":
            doc["notes"].append(raw[raw.index("note") + 4:].strip())
        elif key in ("vector", "coords"):
            if not args:
                raise err(f"{key} needs entries")
            vals = tuple(_rat(t, lambda m, c=c: err(m, c)) for t, c in args)
            if key == "vector":
                doc["vectors"].append((vals, lineno, kcol))
            else:
                if "coords" in doc:
                    raise err("duplicate coords")
                doc["coords"] = (vals, lineno, kcol)
        elif key == "label":
            if len(args) < 2:
                raise err("label takes an index and a name")
            idx = _int(args[0][0], lambda m: err(m, args[0][1]))
            doc["labels"][idx] = raw[args[1][1] - 1:].rstrip()
        elif key == "cell":
            rec = CellRecord()
            seen = set()
            for tok, col in args:
                if "=" not in tok:
                    raise err(f"expected v=, r=, l= or m=, got {tok!r}", col)
                f, val = tok.split("=", 1)
                if f not in ("v", "r", "l", "m") or f in seen:
                    raise err(f"unknown or repeated cell field {f!r}", col)
                seen.add(f)
                if f == "m":
                    rec.mult = _rat(val, lambda m, c=col: err(m, c))
                else:
                    idx = tuple(_int(x, lambda m, c=col: err(m, c)) for x in val.split(",")) if val else ()
                    setattr(rec, {"v": "vertices", "r": "rays", "l": "lineality"}[f], idx)
            doc["cells"].append((rec, lineno, kcol))
        else:
            raise err(f"unknown field {key!r}")
    if not seen_header:
        raise FormatError(source, 1, 1, f"missing header {HEADER!r}")
    end = len(lines) or 1
    for req in ("kind", "ambient"):
        if req not in doc:
            raise FormatError(source, end, 1, f"missing {req}")
    kind, amb = doc["kind"], doc["ambient"]
    if kind == "pluecker" and len(amb) != 2:
        raise FormatError(source, end, 1, "pluecker documents need 'ambient k n'")
    if kind != "pluecker" and len(amb) != 1:
        raise FormatError(source, end, 1, f"{kind} documents need 'ambient n'")
    n = amb[-1]
    vectors = []
    for vals, ln, col in doc["vectors"]:
        if len(vals) != n + 1:
            raise FormatError(source, ln, col, f"vector has {len(vals)} entries, expected {n + 1}")
        vectors.append(vals)
    for idx in doc["labels"]:
        if not 0 <= idx < len(vectors):
            raise FormatError(source, end, 1, f"label for unknown vector {idx}")
    cells = []
    for rec, ln, col in doc["cells"]:
        for i in rec.vertices + rec.rays + rec.lineality:
            if not 0 <= i < len(vectors):
                raise FormatError(source, ln, col, f"vector index {i} out of range")
        cells.append(rec)
    coords = None
    if kind in ("pluecker", "point"):
        if "coords" not in doc:
            raise FormatError(source, end, 1, "missing coords")
        coords, ln, col = doc["coords"]
        want = len(subsets(amb[0], amb[1])) if kind == "pluecker" else n + 1
        if len(coords) != want:
            raise FormatError(source, ln, col, f"{len(coords)} coordinates, expected {want}")
    elif "coords" in doc:
        raise FormatError(source, doc["coords"][1], doc["coords"][2], f"coords not allowed for kind {kind}")
    if kind == "complex":
        if "dim" not in doc:
            raise FormatError(source, end, 1, "missing dim")
    else:
        if cells:
            raise FormatError(source, doc["cells"][0][1], 1, f"cells not allowed for kind {kind}")
    d = Document(kind, amb, doc.get("name"), doc.get("dim"), doc["flags"], doc["notes"], vectors,
                 doc["labels"], cells, coords)
    if kind == "complex":
        try:
            d.to_complex()
        except ValueError as e:
            raise FormatError(source, end, 1, str(e)) from None
    return d


def load(path) -> Document:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read(), str(path))


# ---------------------------------------------------------------------------
# serialization


def _fmt(a: Fraction) -> str:
    return str(a)


def _idx(xs) -> str:
    return ",".join(str(i) for i in xs)


def serialize(doc: Document) -> str:
    out = [HEADER]
    if doc.name:
        out.append(f"name {doc.name}")
    out.append(f"kind {doc.kind}")
    out.append("ambient " + " ".join(str(a) for a in doc.ambient))
    if doc.dim is not None:
        out.append(f"dim {doc.dim}")
    out += [f"flag {f}" for f in doc.flags]
    out += [f"note {t}" for t in doc.notes]
    out += ["vector " + " ".join(_fmt(a) for a in v) for v in doc.vectors]
    out += [f"label {i} {doc.labels[i]}" for i in sorted(doc.labels)]
    for c in doc.cells:
        parts = ["cell"]
        if c.vertices:
            parts.append("v=" + _idx(c.vertices))
        parts.append("r=" + _idx(c.rays))
        if c.lineality:
            parts.append("l=" + _idx(c.lineality))
        parts.append("m=" + _fmt(c.mult))
        out.append(" ".join(parts))
    if doc.coords is not None:
        out.append("coords " + " ".join(_fmt(a) for a in doc.coords))
    return "\n".join(out) + "\n"


def document_from(obj, name: str | None = None, notes=(), flags=(), labels=None) -> Document:
    """Wrap a WeightedComplex, PlueckerVector, QuotientVector or list of vectors."""
    if isinstance(obj, WeightedComplex):
        index = {}
        vectors = []

        def ref(v):
            if v not in index:
                index[v] = len(vectors)
                vectors.append(tuple(v.entries))
            return index[v]

        cells = []
        for c, m in obj.cells:
            vs = () if c.is_cone else tuple(ref(v) for v in c.vertices)
            cells.append(CellRecord(vs, tuple(ref(r) for r in c.rays), tuple(ref(l) for l in c.lineality), m))
        doc = Document("complex", (obj.n,), name, obj.dim, list(flags), list(notes), vectors, {}, cells)
    elif isinstance(obj, PlueckerVector):
        doc = Document("pluecker", (obj.k, obj.n), name, None, list(flags), list(notes), coords=tuple(obj.coords))
    elif isinstance(obj, QuotientVector):
        doc = Document("point", (obj.n,), name, None, list(flags), list(notes), coords=tuple(obj.entries))
    else:
        vs = [tuple(QuotientVector(v).entries) for v in obj]
        if not vs:
            raise ValueError("empty vector list")
        doc = Document("vectors", (len(vs[0]) - 1,), name, None, list(flags), list(notes), vs)
    if labels:
        doc.labels = dict(labels)
    return doc


def dumps(obj, **kw) -> str:
    return serialize(obj if isinstance(obj, Document) else document_from(obj, **kw))
