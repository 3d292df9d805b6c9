import io
import json

import pytest

from tropchow.cli import main


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_member_p1_sigma1():
    code, out, _ = run("member", "--pluecker", "fixtures/p1", "fixtures/fink_sigma1")
    assert code == 0
    assert "witness: (0, 2, 0, 5, 2)" in out  # the class of (6,8,6,11,8)


def test_member_false_exit_one():
    code, _, _ = run("member", "--pluecker", "fixtures/p1", "fixtures/fink_sigma2")
    assert code == 1


def test_member_inline_vector():
    code, _, _ = run("member", "--pluecker", "14,6,8,11,13,20,18,16,8,13", "fink_sigma1")
    assert code == 0


def test_meets():
    assert run("meets", "--pluecker", "p2", "fink_sigma2")[0] == 0
    assert run("meets", "--pluecker", "p2", "fink_sigma1")[0] == 1


def test_eq_support_only():
    assert run("eq", "fixtures/contro_Z1", "fixtures/contro_Z2", "--support-only")[0] == 0
    code, out, _ = run("eq", "fixtures/contro_Z1", "fixtures/contro_Z2")
    assert code == 1 and "witness" in out


def test_validate_flagged():
    code, out, _ = run("validate", "fixtures/sec4_sigma6")
    assert code == 0 and "flagged: unbalanced-as-transcribed" in out


def test_balance():
    assert run("balance", "sec4_sigma6")[0] == 1
    assert run("balance", "sec4_sigma0")[0] == 0


def test_json_is_deterministic():
    def report():
        code, out, _ = run("--json", "member", "--pluecker", "p2", "fink_sigma2")
        data = json.loads(out)
        data.pop("timings")
        return code, data

    a, b = report(), report()
    assert a == b
    assert a[1]["witness"] == ["0", "-1", "0", "2", "2"]


def test_json_flag_after_subcommand():
    code, out, _ = run("eq", "--json", "sec4_sigma0", "sec4_sigma0")
    assert code == 0 and json.loads(out)["verdict"] is True


def test_minkowski_and_fink_write_files(tmp_path):
    out_file = tmp_path / "s.trop"
    assert run("fink", "fink_sigma1", "-o", str(out_file))[0] == 0
    other = tmp_path / "t.trop"
    assert run("fink", "fink_sigma2", "-o", str(other))[0] == 0
    assert run("eq", str(out_file), str(other))[0] == 0
    assert run("minkowski", "sec4_sigma0", "sec4_sigma1", "-o", str(tmp_path / "m"))[0] == 0
    assert run("balance", str(tmp_path / "m"))[0] == 0


def test_chow_and_recover(tmp_path):
    z = tmp_path / "z.trop"
    assert run("chow", "contro_sigma2", "--k", "1", "-o", str(z))[0] == 0
    code, out, _ = run("--json", "recover", "--rays", "contro_sigma2", "--target", str(z))
    data = json.loads(out)
    assert code == 0 and data["status"] == "unique"
    # rays of the fan are primitive, so the first three weights carry the lattice content 2
    assert data["multiplicities"] == ["2", "2", "2", "1", "1", "1", "2", "1", "1", "1"]


def test_input_errors(tmp_path):
    bad = tmp_path / "bad.trop"
    bad.write_text("tropchow 1\nkind complex\nambient 3\ndim 1\nvector 1 0 x 0\n")
    code, _, err = run("validate", str(bad))
    assert code == 2 and f"{bad}:5:12:" in err
    assert run("validate", "no_such_thing")[0] == 2
    assert run("frobnicate")[0] == 2
    assert run("chow", "fink_sigma1")[0] == 2  # no explicit Gamma_0 for (1,4)


def test_fixture_commands():
    code, out, _ = run("fixture", "list")
    assert code == 0 and "gamma0_13" in out
    code, out, _ = run("fixture", "dump", "p1")
    assert code == 0 and "coords 14 6 8 11 13 20 18 16 8 13" in out
    assert run("fixture", "dump", "nope")[0] == 2
