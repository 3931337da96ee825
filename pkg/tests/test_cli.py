import io
import subprocess
import sys

import pytest

from torsionvol.cli import main


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    rc = main(list(argv), out, err)
    return rc, out.getvalue(), err.getvalue()


def value_of(text, key="value"):
    for line in text.splitlines():
        if line.startswith(key + ": "):
            return line.split(": ", 1)[1]
    raise AssertionError(f"no {key} line in {text!r}")


@pytest.fixture(autouse=True)
def in_corpus(corpus, monkeypatch):
    monkeypatch.chdir(corpus)


@pytest.mark.parametrize("ls", ["Lmp", "Lpm", "Lmm"])
def test_torus_torsion(ls):
    rc, out, _ = run("torsion", "torus.complex", f"{ls}.localsys", "--euler", "paper", "--orient", "+")
    assert rc == 0
    assert value_of(out) == "-1/1"
    assert value_of(out, "convention")
    rc, out, _ = run("torsion", "torus.complex", f"{ls}.localsys", "--orient", "-")
    assert value_of(out) == "1/1"


def test_trivial_system_reports_basis():
    rc, out, _ = run("torsion", "torus.complex", "Lpp.localsys")
    assert rc == 0
    assert "homology-basis[0][0]" in out


def test_circle_subdivisions_agree():
    a = value_of(run("torsion", "circle.complex", "circle-t.localsys", "--field", "Q(t)")[1])
    b = value_of(run("torsion", "circle3.complex", "circle-t.localsys", "--field", "Q(t)")[1])
    assert a == b


def test_todd():
    rc, out, _ = run("todd", "--order", "6")
    assert rc == 0
    assert value_of(out, "coefficients") == "[1, -1/2, 1/12, 0, -1/720, 0, 1/30240]"
    assert value_of(out, "check") == "ok"


def test_arf_and_johnson():
    assert value_of(run("arf", "torus.surface", "spin-paper.spin")[1]) == "-1"
    rc, out, _ = run("johnson", "torus.surface", "spin-paper.spin")
    assert rc == 0
    assert "q[++]: 1" in out and "q[--]: -1" in out
    assert value_of(run("johnson", "torus.surface", "spin-paper.spin", "--alpha=-+")[1], "q[-+]") == "-1"
    assert value_of(run("arf", "grid22.surface", "kasteleyn-odd.spin")[1]) == "-1"
    assert value_of(run("arf", "grid22.surface", "kasteleyn-even.spin")[1]) == "1"


def test_adjoint_and_glue():
    rc, out, _ = run("adjoint-torsion", "torus.complex", "torus-sl2.point")
    assert rc == 0 and value_of(out) == "1/1"
    rc, out, _ = run("adjoint-torsion", "wedge2.complex", "wedge2-sl2.point")
    assert rc == 0 and value_of(out, "virtual-dimension") == "3"
    for job in ("glue-torus-mp.glue", "glue-circle-arcs.glue", "glue-two-tori.glue"):
        rc, out, _ = run("glue-check", job)
        assert rc == 0 and value_of(out, "result") == "ok"


def test_check():
    rc, out, _ = run("check", "genus2.complex")
    assert rc == 0 and value_of(out, "result") == "ok"
    assert value_of(out, "euler-characteristic") == "-2"


COMMANDS = [
    ("check", "torus.complex"),
    ("torsion", "torus.complex", "Lmm.localsys"),
    ("torsion", "torus.complex", "Lpp.localsys"),
    ("torsion", "circle.complex", "circle-t.localsys"),
    ("adjoint-torsion", "wedge2.complex", "wedge2-sl2.point"),
    ("johnson", "genus2.surface", "spin-genus2-b2.spin"),
    ("arf", "torus.surface", "spin-loop-a.spin"),
    ("todd", "--order", "12"),
    ("glue-check", "glue-two-tori.glue"),
]


@pytest.mark.parametrize("argv", COMMANDS, ids=lambda a: a[0])
def test_repeated_runs_are_byte_identical(argv):
    first = run(*argv)
    assert first[0] == 0
    assert run(*argv) == first


@pytest.mark.parametrize("argv,code,needle", [
    (("check", "bad/empty.complex"), 2, "offset 0"),
    (("check", "bad/syntax.complex"), 2, "line"),
    (("check", "bad/bad-word.complex"), 2, "parse error"),
    (("check", "missing.complex"), 2, "cannot read"),
    (("torsion", "torus.complex", "bad/wrong-kind.localsys"), 2, "kind"),
    (("torsion", "torus.complex", "bad/bad-entry.localsys"), 2, "monodromy"),
    (("torsion", "torus.complex", "bad/float.localsys"), 2, "floating point"),
    (("torsion", "torus.complex", "Lmm.localsys", "--euler", "q:x"), 2, "parse error"),
    (("torsion", "torus.complex", "Lmm.localsys", "--orient", "sideways"), 2, "parse error"),
    (("johnson", "torus.surface", "spin-paper.spin", "--alpha", "+"), 2, "parse error"),
])
def test_parse_errors(argv, code, needle):
    rc, out, err = run(*argv)
    assert rc == code
    assert out == ""
    assert err.startswith("parse error: ") and needle in err


@pytest.mark.parametrize("argv,needle", [
    (("check", "bad/dd-nonzero.complex"), "result: failed"),
    (("torsion", "torus.complex", "bad/singular.localsys"), "error: RepresentationInvalid"),
    (("torsion", "torus.complex", "bad/noncommuting.localsys"), "error: RepresentationInvalid"),
])
def test_validation_failures(argv, needle):
    rc, out, err = run(*argv)
    assert rc == 1
    assert needle in out and err == ""


def test_argparse_errors_exit_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["todd", "--order", "x"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2


def test_console_entry_point_is_deterministic():
    argv = [sys.executable, "-m", "torsionvol.cli", "torsion", "torus.complex", "Lmp.localsys"]
    a = subprocess.run(argv, capture_output=True, check=True)
    b = subprocess.run(argv, capture_output=True, check=True)
    assert a.stdout == b.stdout and b"value: -1/1" in a.stdout
