import json

import pytest

from opuc.cli import main


@pytest.fixture
def seqfile(tmp_path):
    def write(doc, name="s.json"):
        p = tmp_path / name
        p.write_text(json.dumps(doc))
        return str(p)
    return write


FINITE = {"kind": "finite", "alphas": [[0.3, 0.1], [0.2, -0.2], [0.0, 0.25]]}
GEOM = {"kind": "geometric", "tail": {"a": 0.5, "lambda": [0.7071067811865476, 0.7071067811865476]}}


def run(capsys, argv):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_coeffs(capsys, seqfile):
    code, out, _ = run(capsys, ["coeffs", "--seq", seqfile(FINITE), "--n", "5"])
    doc = json.loads(out)
    assert code == 0
    assert doc["maxAbsDiff"] < 1e-12
    assert set(doc["rows"][0]) == {"n", "m", "lambdaRec", "lambdaComb", "absDiff"}


def test_wm(capsys, seqfile):
    code, out, _ = run(capsys, ["wm", "--seq", seqfile(FINITE), "--m", "3", "--K", "10"])
    doc = json.loads(out)
    assert code == 0
    assert {"value", "tailBound", "bernstein", "quadrature", "spread", "K", "m", "nodes"} <= set(doc)
    assert doc["spread"] < 1e-10


def test_deterministic_output(capsys, seqfile):
    path = seqfile(FINITE)
    _, a, _ = run(capsys, ["zq", "--seq", path, "--q", "[1, [0, 1]]", "--n-max", "6"])
    _, b, _ = run(capsys, ["zq", "--seq", path, "--q", "[1, [0, 1]]", "--n-max", "6"])
    assert a == b
    doc = json.loads(a)
    assert abs(doc["bernstein"] - doc["quadrature"]) < 1e-8
    assert list(doc) == sorted(doc)


def test_other_subcommands(capsys, seqfile):
    f, g = seqfile(FINITE), seqfile(GEOM, "g.json")
    assert run(capsys, ["dm", "--seq", f, "--m", "2", "--K", "5"])[0] == 0
    code, out, _ = run(capsys, ["step", "--seq", f, "--q", "[1, 1]", "--n", "2"])
    assert code == 0 and json.loads(out)["residual"] < 1e-12
    code, out, _ = run(capsys, ["l4", "--seq", f, "--n-max", "20"])
    assert code == 0 and json.loads(out)["verdict"] == "both bounded"
    code, out, _ = run(capsys, ["mn", "--seq", g, "--ell", "2", "--n-max", "30"])
    assert code == 0 and json.loads(out)["verdict"] == "converged"
    code, out, _ = run(capsys, ["ratio", "--seq", g, "--n", "50", "200"])
    doc = json.loads(out)
    assert code == 0 and doc["limitGap"][1] < 1e-12
    code, out, _ = run(capsys, ["ratio", "--seq", g, "--n", "5", "--format", "csv"])
    assert out.startswith("n,re(z),im(z),re(value),im(value)\n")


def test_out_file(capsys, seqfile, tmp_path):
    target = tmp_path / "o.json"
    assert main(["--out", str(target), "dm", "--seq", seqfile(FINITE), "--m", "1", "--K", "3"]) == 0
    assert "rows" in json.loads(target.read_text())


@pytest.mark.parametrize("doc, path", [
    ({"kind": "finite", "alphas": [[1.2, 0]]}, "$.alphas[0]"),
    ({"kind": "power", "tail": {"c": 1}}, "$.tail.p"),
    ({"kind": "weird"}, "$.kind"),
])
def test_input_errors(capsys, seqfile, doc, path):
    code, _, err = run(capsys, ["dm", "--seq", seqfile(doc), "--m", "1", "--K", "3"])
    assert code == 2
    assert json.loads(err)["path"] == path


def test_bad_q_and_missing_file(capsys, seqfile):
    code, _, err = run(capsys, ["step", "--seq", seqfile(FINITE), "--q", "[1, [1]]", "--n", "2"])
    assert code == 2 and json.loads(err)["path"] == "$.q[1]"
    code, _, _ = run(capsys, ["dm", "--seq", "/nonexistent.json", "--m", "1", "--K", "3"])
    assert code == 2


def test_divergent_kind_is_input_error(capsys, seqfile):
    code, _, err = run(capsys, ["wm", "--seq", seqfile(GEOM), "--m", "1", "--K", "3"])
    assert code == 2 and "DivergenceError" in json.loads(err)["error"]


def test_verify_subset(capsys):
    code, out, err = run(capsys, ["verify", "--suite", "3,4,6"])
    assert code == 0
    assert json.loads(out)["passed"] is True
    assert err.count("PASS") == 3


def test_verify_reports_failure(capsys, monkeypatch):
    from opuc import acceptance

    monkeypatch.setitem(acceptance.CHECKS, 4, lambda: acceptance.CheckResult(4, "forced", False))
    code, out, err = run(capsys, ["verify", "--suite", "3,4"])
    assert code == 1
    assert json.loads(out)["passed"] is False
    assert "FAIL  4 forced" in err


def test_verify_bad_suite(capsys):
    assert run(capsys, ["verify", "--suite", "99"])[0] == 2
