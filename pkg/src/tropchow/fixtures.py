"""Bundled example data with provenance notes and load-time validation.

Every fixture ships as a ``.trop`` file under ``tropchow/fixtures``.  The
files are generated from the transcriptions in this module by
``build_catalog`` (and ``python -m tropchow.fixtures`` rewrites them), so a
test can check that the shipped files and the transcriptions agree byte for
byte.  Loading a fixture re-runs its validation predicate; fixtures carrying
a ``flag`` record are known anomalies and load with a warning.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from pathlib import Path

from . import fileformat
from .complexes import Cell, QuotientVector, WeightedComplex, balancing_check, fan_from_rays, negate_complex
from .troplin import PlueckerVector, is_tropical_pluecker, line_through_two_points, point_in_linear_space

FIXTURE_DIR = "fixtures"


class FixtureError(ValueError):
    pass


class FlaggedFixtureWarning(UserWarning):
    pass


@dataclass(frozen=True)
class Fixture:
    name: str
    kind: str
    ambient: tuple[int, ...]
    payload: object
    provenance: str
    status: str  # "validated" or "flagged"
    flags: tuple[str, ...]
    checks: tuple[tuple[str, bool], ...]
    document: fileformat.Document

    @property
    def flagged(self) -> bool:
        return self.status == "flagged"


# ---------------------------------------------------------------------------
# transcriptions


U = (10, 8, 0, 5, 13)
V = (6, 8, 15, 21, 8)
SHIFT = (3, 0, 3, 0, 3)
LAMBDA1_WITNESS = (6, 8, 6, 11, 8)
LAMBDA2_WITNESS = (9, 8, 9, 11, 11)

# labels name rays e_{i1} + ... + e_{ik}, coordinates numbered 1..5
FINK_LABELS = ("5", "1345", "345", "4", "245", "1245", "123")
FINK_SIGMA1 = (("5", "1345", "4", "245"), ("1245", "345"))  # outer 4-cycle, chord
FINK_SIGMA2 = (("5", "345", "4", "1245"), ("1345", "245"))

CONTRO_RAYS = (
    (1, -1, -1, 1), (1, -1, 1, -1), (-1, -1, 1, 1),
    (-1, 1, 0, 0), (0, 1, -1, 0), (0, 1, 0, -1),
    (0, -1, 0, 0), (1, 1, 0, 0), (0, 1, 1, 1),
)
CONTRO_EXTRA = (0, 1, 0, 0)
CONTRO_MULTS1 = (1,) * 9
CONTRO_MULTS2 = (1, 1, 1, 1, 1, 1, 2, 1, 1, 1)  # the ray (0,-1,0,0) doubled, plus (0,1,0,0)

SEC4 = {
    "sec4_sigma0": (((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)), (4, 4, 4, 4)),
    "sec4_sigma1": (((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, -1, 1), (0, 0, 1, 0)), (2, 2, 2, 4)),
    "sec4_sigma6": (((3, -1, -3, 1), (0, 0, 1, 0), (-1, 3, -3, 1)), (1, 4, 1)),
}


def _label_vector(lab: str) -> tuple[int, ...]:
    return tuple(1 if str(i + 1) in lab else 0 for i in range(5))


def fink_fan(outer, chord) -> tuple[WeightedComplex, dict]:
    """Surface fan in R^5/R: the outer 4-cycle, one chord, and the apex ray 123 joined to every other label."""
    cones = [(outer[i], outer[(i + 1) % 4]) for i in range(4)] + [tuple(chord)]
    cones += [("123", x) for x in sorted(set(outer) | set(chord))]
    cells = tuple((Cell.cone([_label_vector(a), _label_vector(b)], 4), Fraction(1)) for a, b in cones)
    return WeightedComplex(4, 2, cells), {a: _label_vector(a) for a in FINK_LABELS}


def contro_curves(printed: bool = False) -> tuple[WeightedComplex, WeightedComplex]:
    """The two curves whose Chow hypersurfaces share a support.

    The printed coordinates follow the max convention; the default is their
    negation, which is the same pair of curves in the min convention used
    throughout this package.
    """
    rays = [tuple(r) for r in CONTRO_RAYS]
    s1 = fan_from_rays(rays, CONTRO_MULTS1, 3)
    s2 = fan_from_rays(rays + [CONTRO_EXTRA], CONTRO_MULTS2, 3)
    if printed:
        return s1, s2
    return negate_complex(s1), negate_complex(s2)


def p1() -> PlueckerVector:
    return line_through_two_points(U, V)


def p2() -> PlueckerVector:
    from .troplin import translate_line

    return translate_line(p1(), SHIFT)


# ---------------------------------------------------------------------------
# catalog


CERTIFIED = "certified by tests/test_fixtures.py"


def _entries():
    """(name, object, notes, flags, labels, raw ray vectors) in catalog order."""
    from .chow import GAMMA0_13_EDGES, chow_hypersurface, gamma0, gamma0_13_rays

    out = []
    g = gamma0(1, 3).complex
    rays = gamma0_13_rays()
    out.append(("gamma0_13", g, [
        "Lines of TrGr(1,3) through the origin: rays e_ij and -f_i, 15 edges, all weights 1",
        "transcribed from figure; " + CERTIFIED + " (Pluecker and contains-origin oracle)",
        "edges: " + " ".join(f"{a}/{b}" for a, b in GAMMA0_13_EDGES),
    ], [], {v: k for k, v in rays.items()}, list(_gamma0_raw().values())))
    for name, (outer, chord) in (("fink_sigma1", FINK_SIGMA1), ("fink_sigma2", FINK_SIGMA2)):
        fan, labs = fink_fan(outer, chord)
        out.append((name, fan, [
            "Surface in R^5/R with the same Fink skeleton as its partner; label i1..ik is e_i1+...+e_ik",
            "transcribed from figure; " + CERTIFIED + " (p1/p2 membership claims)",
        ], [], {QuotientVector(v): k for k, v in labs.items()}, list(labs.values())))
    s1, s2 = contro_curves()
    s1p, s2p = contro_curves(printed=True)
    conv = "coordinates negated from the printed (max convention) list to the min convention"
    neg = [tuple(-a for a in r) for r in CONTRO_RAYS + (CONTRO_EXTRA,)]
    printed = list(CONTRO_RAYS + (CONTRO_EXTRA,))
    out.append(("contro_sigma1", s1, ["Curve in R^4/R, nine rays of weight 1", conv], [], None, neg))
    out.append(("contro_sigma2", s2, [
        "Curve in R^4/R, ten rays; the printed list repeats one ray label, read as weight 2 on (0,-1,0,0)", conv,
    ], [], None, neg))
    lit = "printed coordinates read literally in the min convention; the Chow supports then differ"
    out.append(("contro_sigma1_printed", s1p, ["Curve in R^4/R as printed", lit], ["printed-max-convention"], None, printed))
    out.append(("contro_sigma2_printed", s2p, ["Curve in R^4/R as printed", lit], ["printed-max-convention"], None, printed))
    out.append(("contro_Z1", chow_hypersurface(s1, 1), ["Z of contro_sigma1 computed by this package"], [], None, None))
    out.append(("contro_Z2", chow_hypersurface(s2, 1), ["Z of contro_sigma2 computed by this package"], [], None, None))
    for name, (rs, ms) in SEC4.items():
        flags = ["unbalanced-as-transcribed"] if name == "sec4_sigma6" else []
        notes = ["Curve in R^4/R from published fan data; vector v with weight m is the primitive ray of v with weight m*content(v)"]
        if flags:
            notes.append("weighted ray sum is the class of (2,2,-2,2), so the fan is not balanced as printed")
        notes.append("printed weights: " + " ".join(map(str, ms)))
        out.append((name, fan_from_rays(rs, ms, 3), notes, flags, None, list(rs)))
    out.append(("p1", p1(), ["Pluecker vector of the line through u and v, (1,4) colex order"], [], None, None))
    out.append(("p2", p2(), ["p1 + phi(3,0,3,0,3)"], [], None, None))
    out.append(("u", QuotientVector(U), ["point on the line of p1"], [], None, None))
    out.append(("v", QuotientVector(V), ["point on the line of p1"], [], None, None))
    out.append(("lambda1_witness", QuotientVector(LAMBDA1_WITNESS), ["common point of the line of p1 and fink_sigma1"], [], None, None))
    out.append(("lambda2_witness", QuotientVector(LAMBDA2_WITNESS), ["common point of the line of p2 and fink_sigma2"], [], None, None))
    return out


def _gamma0_raw() -> dict[str, tuple[int, ...]]:
    from .troplin import subsets

    cols = subsets(1, 3)
    raw = {"e" + "".join(map(str, c)): tuple(1 if d == c else 0 for d in cols) for c in cols}
    for i in range(4):
        raw[f"-f{i}"] = tuple(-1 if i in c else 0 for c in cols)
    return raw


def _primitive_key(v) -> QuotientVector:
    from .ratlin import integerize

    return QuotientVector.from_chart(integerize(QuotientVector(v).chart()))


def _keep_raw(name, obj):
    """Point fixtures keep their printed representative rather than the canonical one."""
    raw = {"u": U, "v": V, "lambda1_witness": LAMBDA1_WITNESS, "lambda2_witness": LAMBDA2_WITNESS}
    return tuple(Fraction(a) for a in raw[name]) if name in raw else None


def build_catalog() -> dict[str, str]:
    """Fixture name -> file text, generated from the transcriptions."""
    out = {}
    for name, obj, notes, flags, labels, raws in _entries():
        doc = fileformat.document_from(obj, name=name, notes=notes, flags=flags)
        if raws and all(c.is_cone for c, _ in obj.cells):
            # show rays as transcribed; the weight already refers to the primitive ray
            by_class = {_primitive_key(r): tuple(Fraction(a) for a in r) for r in raws}
            doc.vectors = [by_class.get(_primitive_key(v), v) for v in doc.vectors]
        raw = _keep_raw(name, obj)
        if raw is not None:
            doc.coords = raw
        if labels and doc.kind == "complex":
            index = {QuotientVector(v): i for i, v in enumerate(doc.vectors)}
            doc.labels = {index[k]: lab for k, lab in labels.items() if k in index}
        out[name] = fileformat.serialize(doc)
    return out


def _fixture_root():
    return resources.files("tropchow") / FIXTURE_DIR


def fixture_path(name: str):
    return _fixture_root() / f"{name}.trop"


def write_catalog(directory=None) -> list[str]:
    directory = Path(directory) if directory else Path(str(_fixture_root()))
    directory.mkdir(parents=True, exist_ok=True)
    names = []
    for name, text in build_catalog().items():
        (directory / f"{name}.trop").write_text(text, encoding="utf-8")
        names.append(name)
    return names


def list_fixtures() -> list[tuple[str, str]]:
    """Sorted (name, provenance) pairs of the bundled fixtures."""
    out = []
    for entry in sorted(_fixture_root().iterdir(), key=lambda p: p.name):
        if entry.name.endswith(".trop"):
            doc = fileformat.parse(entry.read_text(encoding="utf-8"), entry.name)
            out.append((entry.name[:-5], "; ".join(doc.notes)))
    return out


# ---------------------------------------------------------------------------
# validation


def validation_checks(doc: fileformat.Document) -> list[tuple[str, bool]]:
    """Named predicates for a parsed document."""
    obj = doc.payload()
    checks = []
    if doc.kind == "complex":
        checks.append(("balanced", balancing_check(obj).balanced))
        if doc.name == "gamma0_13":
            from .chow import gamma0_contains

            ok = all(gamma0_contains(PlueckerVector.from_quotient(1, 3, r)) for r in obj.rays())
            ok = ok and all(gamma0_contains(PlueckerVector.from_quotient(1, 3, c.interior_point())) for c, _ in obj.cells)
            checks.append(("gamma0 oracle", ok))
    elif doc.kind == "pluecker":
        checks.append(("tropical Pluecker", is_tropical_pluecker(obj).valid))
        if doc.name == "p1":
            checks.append(("contains u and v", point_in_linear_space(U, obj) and point_in_linear_space(V, obj)))
    elif doc.kind == "point":
        checks.append(("integral", obj.is_integral()))
        if doc.name == "lambda1_witness":
            checks.append(("on the line of p1", point_in_linear_space(obj, p1())))
        if doc.name == "lambda2_witness":
            checks.append(("on the line of p2", point_in_linear_space(obj, p2())))
    return checks


def fixture_from_document(doc: fileformat.Document, name: str | None = None) -> Fixture:
    checks = validation_checks(doc)
    flagged = bool(doc.flags)
    name = name or doc.name or "<unnamed>"
    if not flagged and not all(ok for _, ok in checks):
        failed = [c for c, ok in checks if not ok]
        raise FixtureError(f"fixture {name} failed validation: {', '.join(failed)}")
    if flagged:
        warnings.warn(f"fixture {name} is flagged: {', '.join(doc.flags)}", FlaggedFixtureWarning, stacklevel=3)
    return Fixture(name, doc.kind, doc.ambient, doc.payload(), "; ".join(doc.notes),
                   "flagged" if flagged else "validated", tuple(doc.flags), tuple(checks), doc)


def load_fixture(name: str) -> Fixture:
    path = fixture_path(name)
    if not path.is_file():
        raise FixtureError(f"unknown fixture {name!r}")
    doc = fileformat.parse(path.read_text(encoding="utf-8"), f"{name}.trop")
    return fixture_from_document(doc, name)


if __name__ == "__main__":
    for n in write_catalog():
        print(n)
