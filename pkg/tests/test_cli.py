import io
import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from operad_forge import cli
from operad_forge import envelope as ev
from operad_forge import ground as gd
from operad_forge import operads as op

FIXTURES = Path(__file__).parent / "fixtures"


def run(*argv):
    buf = io.StringIO()
    code = cli.run([str(a) for a in argv], buf)
    return code, buf.getvalue()


def run_json(*argv):
    code, text = run(*argv, "--format", "json")
    return code, json.loads(text)


# presentation files


@pytest.mark.parametrize("make", [lambda: op.ass(3), lambda: op.com(3), lambda: op.trivial(3),
                                  lambda: op.end(gd.based_set(["*", "a"]), 2), lambda: op.ass(3).C])
def test_roundtrip_is_byte_exact(tmp_path, make):
    obj = make()
    a, b = tmp_path / "a.op", tmp_path / "b.op"
    cli.save(obj, a)
    loaded = cli.load(a)
    cli.save(loaded, b)
    assert a.read_bytes() == b.read_bytes()
    if isinstance(obj, op.Operad):
        assert op.operads_equal(loaded, obj).ok


def test_algebra_roundtrip(tmp_path):
    A = cli.make_algebra(op.com(2), "idem")
    a, b = tmp_path / "a.op", tmp_path / "b.op"
    cli.save(A, a, "com")
    cli.save(cli.load(a), b, "com")
    assert a.read_bytes() == b.read_bytes()


def test_category_roundtrip(tmp_path):
    E = ev.envelope(op.ass(2))
    a, b = tmp_path / "a.op", tmp_path / "b.op"
    cli.save(E, a)
    loaded = cli.load(a)
    cli.save(loaded, b)
    assert a.read_bytes() == b.read_bytes()
    assert ev.validate_category(loaded).ok


def test_header_and_key_order(tmp_path):
    p = tmp_path / "t.op"
    cli.save(op.trivial(1), p)
    lines = p.read_text().splitlines()
    assert lines[0] == cli.MAGIC
    assert [ln.split(":")[0] for ln in lines[1:6]] == ["kind", "name", "tag", "N", "level 0"]


def test_malformed_gamma_arity_is_located():
    code, text = run("check", FIXTURES / "malformed_gamma_arity.op")
    assert code == cli.EXIT_PARSE
    assert "line 23" in text and "'gamma 2 1 1'" in text


@pytest.mark.parametrize("text,fragment", [
    ("not a header\n", "line 1"),
    (cli.MAGIC + "\nkind \"operad\"\n", "line 2"),
    (cli.MAGIC + "\nkind: [\n", "line 2"),
    (cli.MAGIC + "\nkind: \"operad\"\nkind: \"operad\"\n", "line 3"),
])
def test_parse_errors_carry_lines(tmp_path, text, fragment):
    p = tmp_path / "bad.op"
    p.write_text(text)
    with pytest.raises(cli.PresentationError, match=fragment):
        cli.load(p)


def test_mismatched_degeneracy_fails_validation():
    code, text = run("check", FIXTURES / "operad_degeneracy.op")
    assert code == cli.EXIT_FAIL
    assert "degeneracy coincidence failed at [k=1, σ_1, c=(a,a)]" in text


# commands


def test_check_builtin():
    assert run("check", "ass.op")[0] == cli.EXIT_OK
    assert run("check", "end:a", "--N", "1", "--oracle")[0] == cli.EXIT_OK
    assert run("check", "ass", "--N", "2", "--oracle")[0] == cli.EXIT_OK


def test_kelly_oracle_sizes():
    code, rep = run_json("kelly", "com.op", "com.op", "--oracle", "--N", "2")
    assert code == 0
    assert rep["data"]["closed"] == rep["data"]["naive"] == [1, 1, 2]


def test_day_of_unit():
    code, rep = run_json("day", "i1.op", "i1.op")
    assert code == 0 and rep["data"]["closed"][2] == 2


@pytest.mark.parametrize("argv", [
    ["day", "com", "ass", "--oracle"],
    ["power", "ass", "--k", "3", "--oracle"],
    ["monad", "com", "--X", "a,b", "--N", "2"],
    ["bar", "ass", "--algebra", "free", "--N", "2", "--form", "mixed"],
    ["compare-bars", "com", "--N", "2"],
    ["chain", "com", "--N", "2", "--Q", "3"],
    ["envelope", "com", "--N", "2"],
    ["operators", "ass", "--N", "2"],
    ["omega", "ass", "--N", "2"],
    ["hw", "--A", "2", "--B", "2", "--N", "2"],
])
def test_commands_pass(argv):
    code, text = run(*argv)
    assert code == cli.EXIT_OK, text


def test_hw_precondition_failure():
    code, text = run("hw", "--A", "2", "--B", "2", "--tensor", "product", "--N", "2")
    assert code == cli.EXIT_FAIL and "B = 2" in text


def test_exit_codes():
    assert run("frobnicate")[0] == cli.EXIT_USAGE
    assert run("day", "com")[0] == cli.EXIT_USAGE
    assert run("check", "ass", "--N", "9")[0] == cli.EXIT_TRUNC
    assert run("check", FIXTURES / "operad_gamma.op")[0] == cli.EXIT_FAIL
    assert run("check", "lie")[0] == cli.EXIT_PARSE


def test_save_and_check_file(tmp_path):
    p = tmp_path / "z2.op"
    assert run("save", "ass", p, "--algebra", "z2", "--N", "2")[0] == 0
    assert run("check", p)[0] == 0
    assert run("bar", "ass", "--algebra", p, "--N", "2")[0] == 0


def test_envelope_save(tmp_path):
    p = tmp_path / "env.op"
    assert run("envelope", "com", "--N", "2", "--save", p)[0] == 0
    assert run("check", p)[0] == 0


def test_output_is_deterministic():
    first = run("compare-bars", "ass", "--N", "2")
    assert all(run("compare-bars", "ass", "--N", "2") == first for _ in range(2))


def test_json_report_shape():
    code, rep = run_json("power", "com", "--k", "2")
    assert rep["command"] == "power" and rep["ok"] is True
    assert rep["data"]["closed"] == [1, 2, 4, 8]


def test_environment_default_and_entry_point():
    env = dict(os.environ, OPERAD_FORGE_N="2")
    proc = subprocess.run([sys.executable, "-m", "operad_forge", "check", "com", "--format", "json"],
                          capture_output=True, text=True, env=env)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["data"]["sizes"] == [1, 1, 1]
