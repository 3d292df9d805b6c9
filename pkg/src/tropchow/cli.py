"""Command-line front end.

Inputs are resolved in order: an existing path, the path with ``.trop``
appended, a bundled fixture with the same base name (so ``fixtures/p1``
works from anywhere), and finally an inline comma-separated vector.

Exit codes: 0 true/success, 1 false, 2 input error, 3 internal error.
Points are printed by their representative with first entry 0.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
import warnings
from fractions import Fraction
from math import comb
from pathlib import Path

from . import fileformat
from .chow import chow_hypersurface, chow_support_member, meets
from .complexes import WeightedComplex, balancing_check, complex_equal
from .fixtures import FixtureError, fixture_path, list_fixtures, validation_checks
from .minkowski import fink_skeleton, minkowski_sum
from .reconstruct import recover_multiplicities
from .troplin import PlueckerVector

EXIT_TRUE, EXIT_FALSE, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3


class InputError(Exception):
    pass


# ---------------------------------------------------------------------------
# input resolution


def _inline(arg: str) -> fileformat.Document:
    toks = [t.strip() for t in arg.strip("()[]").split(",")]
    try:
        vals = tuple(fileformat._rat(t, InputError) for t in toks)
    except InputError as e:
        raise InputError(f"{arg}: {e}") from None
    return fileformat.Document("point", (len(vals) - 1,), None, coords=vals)


def resolve(arg: str) -> fileformat.Document:
    for cand in (Path(arg), Path(arg + ".trop")):
        if cand.is_file():
            return fileformat.load(cand)
    base = Path(arg).name
    if base.endswith(".trop"):
        base = base[:-5]
    fp = fixture_path(base)
    if fp.is_file():
        return fileformat.parse(fp.read_text(encoding="utf-8"), f"fixtures/{base}.trop")
    if "," in arg:
        return _inline(arg)
    raise InputError(f"{arg}: no such file, fixture or inline vector")


def _complex(arg: str) -> WeightedComplex:
    doc = resolve(arg)
    if doc.kind != "complex":
        raise InputError(f"{arg}: expected a complex, got {doc.kind}")
    return doc.to_complex()


def _pluecker(arg: str, n: int | None = None) -> PlueckerVector:
    doc = resolve(arg)
    if doc.kind == "pluecker":
        return doc.payload()
    if doc.kind == "point":
        # a bare coordinate list: k = 1 and n from the length
        m = len(doc.coords)
        for nn in range(2, 64):
            if comb(nn + 1, 2) == m and (n is None or nn == n):
                return PlueckerVector(1, nn, doc.coords)
        raise InputError(f"{arg}: {m} coordinates are not a (1, n) Pluecker vector")
    raise InputError(f"{arg}: expected a Pluecker vector, got {doc.kind}")


def _vectors(arg: str) -> list:
    doc = resolve(arg)
    if doc.kind == "vectors":
        return doc.payload()
    if doc.kind == "complex":
        return doc.to_complex().rays()
    raise InputError(f"{arg}: expected a vector list or a fan")


# ---------------------------------------------------------------------------
# reporting


def _s(x) -> str:
    return str(Fraction(x))


def _vec(v) -> list[str]:
    return [_s(a) for a in v]


class Report:
    def __init__(self, command: str):
        self.data = {"command": command}
        self.lines: list[str] = []
        self.start = time.perf_counter()

    def set(self, key, value, text: str | None = None):
        self.data[key] = value
        if text is not None:
            self.lines.append(text)

    def say(self, text: str):
        self.lines.append(text)

    def emit(self, as_json: bool, out):
        self.data["timings"] = {"total_seconds": round(time.perf_counter() - self.start, 6)}
        if as_json:
            out.write(json.dumps(self.data, sort_keys=True) + "\n")
        else:
            for line in self.lines:
                out.write(line + "\n")


def _write(obj, dest, name=None):
    text = fileformat.dumps(obj, name=name)
    if dest in (None, "-"):
        return text
    Path(dest).write_text(text, encoding="utf-8")
    return None


# ---------------------------------------------------------------------------
# commands


def cmd_validate(a, rep):
    doc = resolve(a.file)
    checks = validation_checks(doc)
    rep.set("kind", doc.kind, f"kind: {doc.kind}")
    rep.set("checks", {k: v for k, v in checks})
    for k, v in checks:
        rep.say(f"{k}: {'ok' if v else 'FAILED'}")
    rep.set("flags", list(doc.flags))
    ok = all(v for _, v in checks)
    if doc.flags:
        for f in doc.flags:
            rep.say(f"warning: flagged: {f}")
        rep.set("verdict", True, "verdict: true (known anomaly, loads flagged)")
        return EXIT_TRUE
    rep.set("verdict", ok, f"verdict: {str(ok).lower()}")
    return EXIT_TRUE if ok else EXIT_FALSE


def cmd_balance(a, rep):
    r = balancing_check(_complex(a.file))
    fails = [{"wall": [_vec(x.entries) for x in w.rays] or [_vec(x.entries) for x in w.vertices], "residual": _vec(res)}
             for w, res in r.failures]
    rep.set("failures", fails)
    for f in fails:
        rep.say(f"unbalanced at wall {f['wall']}: residual ({', '.join(f['residual'])})")
    rep.set("verdict", r.balanced, f"balanced: {str(r.balanced).lower()}")
    return EXIT_TRUE if r.balanced else EXIT_FALSE


def _emit_complex(a, rep, result: WeightedComplex):
    rep.set("cells", len(result.cells), f"cells: {len(result.cells)}")
    rep.set("dim", result.dim)
    text = _write(result, a.output)
    if text is not None:
        if a.json:
            rep.set("document", text)
        else:
            rep.say(text.rstrip("\n"))
    else:
        rep.set("output", a.output, f"written: {a.output}")
    rep.set("verdict", True)
    return EXIT_TRUE


def cmd_minkowski(a, rep):
    return _emit_complex(a, rep, minkowski_sum(_complex(a.a), _complex(a.b)))


def cmd_chow(a, rep):
    return _emit_complex(a, rep, chow_hypersurface(_complex(a.fan), a.k))


def cmd_fink(a, rep):
    return _emit_complex(a, rep, fink_skeleton(_complex(a.fan)))


def _membership(a, rep, fn):
    sigma = _complex(a.fan)
    q = _pluecker(a.pluecker, sigma.n)
    r = fn(q, sigma)
    rep.set("verdict", r.member, f"member: {str(r.member).lower()}")
    if r.member:
        rep.set("witness", _vec(r.witness.entries), "witness: (" + ", ".join(_vec(r.witness.entries)) + ")")
        rep.set("cell_index", r.cell_index)
    return EXIT_TRUE if r.member else EXIT_FALSE


def cmd_member(a, rep):
    return _membership(a, rep, chow_support_member)


def cmd_meets(a, rep):
    return _membership(a, rep, meets)


def cmd_recover(a, rep):
    rays = _vectors(a.rays)
    r = recover_multiplicities(rays, _complex(a.target))
    rep.set("status", r.status, f"status: {r.status}")
    rep.set("equations", r.equations)
    rep.set("rays", [_vec(v.entries) for v in rays])
    if r.ok:
        rep.set("multiplicities", [_s(m) for m in r.multiplicities],
                "multiplicities: " + " ".join(_s(m) for m in r.multiplicities))
    else:
        rep.set("kernel_dim", r.kernel_dim)
    rep.set("verdict", r.ok)
    return EXIT_TRUE if r.ok else EXIT_FALSE


def cmd_eq(a, rep):
    mode = "support_only" if a.support_only else "weighted"
    c = complex_equal(_complex(a.a), _complex(a.b), mode)
    rep.set("mode", mode)
    rep.set("verdict", c.equal, f"equal ({mode}): {str(c.equal).lower()}")
    if not c.equal:
        rep.set("witness", _vec(c.witness.entries), "witness: (" + ", ".join(_vec(c.witness.entries)) + ")")
        rep.set("weights", [_s(w) for w in c.weights], "weights: " + " vs ".join(_s(w) for w in c.weights))
    return EXIT_TRUE if c.equal else EXIT_FALSE


def cmd_fixture(a, rep):
    if a.action == "list":
        cat = list_fixtures()
        rep.set("fixtures", {n: p for n, p in cat})
        for n, p in cat:
            rep.say(f"{n}\t{p}")
        return EXIT_TRUE
    if not a.name:
        raise InputError("fixture dump needs a NAME")
    fp = fixture_path(a.name)
    if not fp.is_file():
        raise InputError(f"{a.name}: unknown fixture")
    text = fp.read_text(encoding="utf-8")
    rep.set("document", text)
    rep.say(text.rstrip("\n"))
    return EXIT_TRUE


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit a structured JSON report")
    p = argparse.ArgumentParser(prog="tropchow", description="Tropical Chow hypersurfaces of weighted fans.",
                                parents=[common])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, help=help_, parents=[common])
        sp.set_defaults(fn=fn)
        return sp

    add("validate", cmd_validate, "structure and balancing of a file").add_argument("file")
    add("balance", cmd_balance, "balancing check").add_argument("file")
    sp = add("minkowski", cmd_minkowski, "weighted Minkowski sum")
    sp.add_argument("a")
    sp.add_argument("b")
    sp.add_argument("-o", "--output")
    sp = add("chow", cmd_chow, "tropical Chow hypersurface phi(fan) + Gamma_0")
    sp.add_argument("fan")
    sp.add_argument("--k", type=int, default=1)
    sp.add_argument("-o", "--output")
    for name, fn, h in (("member", cmd_member, "is the Pluecker vector in the support of Z_fan"),
                        ("meets", cmd_meets, "does the tropical line meet the fan")):
        sp = add(name, fn, h)
        sp.add_argument("--pluecker", required=True)
        sp.add_argument("fan")
    sp = add("fink", cmd_fink, "fan + (-Lambda_0)")
    sp.add_argument("fan")
    sp.add_argument("-o", "--output")
    sp = add("recover", cmd_recover, "recover curve multiplicities from Z")
    sp.add_argument("--rays", required=True, help="vector list or fan whose rays are the candidates")
    sp.add_argument("--target", required=True)
    sp = add("eq", cmd_eq, "compare two weighted complexes")
    sp.add_argument("a")
    sp.add_argument("b")
    sp.add_argument("--support-only", action="store_true")
    sp = add("fixture", cmd_fixture, "bundled fixtures")
    sp.add_argument("action", choices=["list", "dump"])
    sp.add_argument("name", nargs="?")
    return p


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_TRUE if e.code == 0 else EXIT_INPUT
    a.json = getattr(a, "json", False)
    rep = Report(a.command)
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            code = a.fn(a, rep)
    except (fileformat.FormatError, InputError, FixtureError, FileNotFoundError) as e:
        err.write(f"error: {e}\n")
        return EXIT_INPUT
    except (ValueError, NotImplementedError) as e:
        err.write(f"error: {e}\n")
        return EXIT_INPUT
    except Exception as e:  # noqa: BLE001
        err.write(f"internal error: {type(e).__name__}: {e}\n")
        return EXIT_INTERNAL
    rep.emit(a.json, out)
    return code


def main_exit():
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
