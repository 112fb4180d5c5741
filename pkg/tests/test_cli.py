import json

import pytest

from qzv.cli import main
from qzv.series import QSeries
from qzv.qmzv import zq_star


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_compute_qmzv_cyclic(capsys):
    code, out, _ = run(capsys, "compute", "qmzv", "--model", "star", "--a", "2,1", "--order", "10")
    assert code == 0
    s = QSeries.from_json_obj(json.loads(out)["series"])
    assert s.agrees(zq_star((3,), 10).scale(2) - zq_star((2,), 10))


def test_alias_and_plain(capsys):
    code, out, _ = run(capsys, "graph-series", "--graph", "cycle:5", "--order", "6", "--format", "plain")
    assert code == 0 and "q^6  385" in out


def test_char_sch_u(capsys):
    code, out, _ = run(capsys, "compute", "char", "sch-u", "--m", "3", "--order", "8")
    coeffs = json.loads(out)["series"]["coeffs"]
    assert coeffs[:3] == ["1/1", "8/1", "44/1"]


def test_deterministic_json(capsys):
    _, a, _ = run(capsys, "ct", "--factors", "wp,wp", "--order", "12")
    _, b, _ = run(capsys, "--threads", "3", "ct", "--factors", "wp,wp", "--order", "12")
    assert a == b


def test_parse_error_position(capsys):
    code, _, err = run(capsys, "qmzv", "--a", "2,x")
    assert code == 2 and "position 2" in err


def test_precondition_surfaced(capsys):
    code, _, err = run(capsys, "char", "arakawa", "--k", "2")
    assert code == 2 and "k must be >= 3" in err


def test_verify_exit_code(capsys):
    code, out, _ = run(capsys, "verify", "section3", "--order", "12")
    assert code == 0 and json.loads(out)["passed"] is True


def test_probe_never_fails(capsys):
    code, out, _ = run(capsys, "probe", "zeta-g-even", "--rank", "2", "--k", "2", "--order", "60")
    assert code == 0 and json.loads(out)["found"] is True


def test_recognize_builtin(capsys):
    code, out, _ = run(capsys, "recognize", "--target", "builtin:zq:2", "--wmax", "2", "--order", "30")
    assert code == 0 and json.loads(out)["found"] is True


def test_census(capsys):
    code, out, _ = run(capsys, "census", "--nmax", "3", "--order", "12")
    assert json.loads(out)["counts"] == [1, 2, 4]


def test_bad_order(capsys):
    code, _, err = run(capsys, "qmzv", "--a", "2", "--order", "0")
    assert code == 2
