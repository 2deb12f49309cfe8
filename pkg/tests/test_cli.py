import json
import math
import subprocess
import sys

import pytest

QD = [sys.executable, "-m", "qdomains"]


def run(*args, env=None):
    return subprocess.run(QD + list(args), capture_output=True, text=True, env=env)


def write(tmp_path, name, payload):
    path = tmp_path / name
    path.write_text(json.dumps(payload))
    return str(path)


@pytest.fixture
def qpoly_doc(tmp_path):
    return write(tmp_path, "a.json", {
        "kind": "qpoly", "n": 2, "q": {"re": 0.5, "im": 0},
        "terms": [{"k": [1, 1], "c": {"re": 1, "im": 0}}]})


def test_norm_example(qpoly_doc):
    result = run("norm", "--in", qpoly_doc, "--family", "polydisk", "--rho", "1")
    assert result.returncode == 0
    assert json.loads(result.stdout)["norm"] == pytest.approx(0.5)


def test_mul_example(qpoly_doc):
    result = run("mul", "--in", qpoly_doc, "--in", qpoly_doc)
    assert result.returncode == 0
    doc = json.loads(result.stdout)
    assert doc["kind"] == "qpoly"
    # (x1 x2)^2 = q^{-1} x1^2 x2^2
    assert doc["terms"] == [{"k": [2, 2], "c": {"re": 2.0, "im": 0.0}}]


def test_normal_order_uses_document_q(tmp_path):
    doc = write(tmp_path, "f.json", {
        "kind": "free", "n": 2, "q": {"re": 0.5, "im": 0},
        "terms": [{"alpha": [2, 1], "c": {"re": 1, "im": 0}}]})
    result = run("normal-order", "--in", doc)
    assert result.returncode == 0
    parsed = json.loads(result.stdout)
    assert parsed["terms"] == [{"k": [1, 1], "c": {"re": 2.0, "im": 0.0}}]
    override = run("normal-order", "--in", doc, "--q", "2")
    assert json.loads(override.stdout)["terms"][0]["c"]["re"] == pytest.approx(0.5)


def test_normal_order_missing_q_is_usage_error(tmp_path):
    doc = write(tmp_path, "f.json", {
        "kind": "free", "n": 2,
        "terms": [{"alpha": [2, 1], "c": {"re": 1, "im": 0}}]})
    result = run("normal-order", "--in", doc)
    assert result.returncode == 2


def test_radius_example():
    result = run("radius", "--tuple", "coords", "--family", "polydisk", "--rho", "1",
                 "--depth", "6", "--p", "2", "--n", "2",
                 "--q", "0.7071067811865476,0.7071067811865476")
    assert result.returncode == 0
    values = json.loads(result.stdout)["values"]
    assert len(values) == 6
    for value in values:
        assert value == pytest.approx(math.sqrt(2.0), rel=1e-9)


def test_fock_norm(qpoly_doc):
    result = run("fock-norm", "--in", qpoly_doc, "--q", "0.5", "--rho", "1",
                 "--depth", "4")
    assert result.returncode == 0
    payload = json.loads(result.stdout)
    assert payload["vacuum"] == pytest.approx(0.375, rel=1e-10)
    assert payload["lower"] <= payload["upper"] + 1e-12


def test_star(tmp_path):
    f = write(tmp_path, "f.json", {"kind": "hseries", "n": 2, "order": 2,
                                   "terms": [{"p": 0, "k": [0, 1], "c": {"re": 1, "im": 0}}]})
    g = write(tmp_path, "g.json", {"kind": "hseries", "n": 2, "order": 2,
                                   "terms": [{"p": 0, "k": [1, 0], "c": {"re": 1, "im": 0}}]})
    result = run("star", "--in", f, "--in", g, "--order", "2")
    assert result.returncode == 0
    terms = json.loads(result.stdout)["terms"]
    assert {"p": 1, "k": [1, 1], "c": {"re": 0.0, "im": -1.0}} in terms


def test_scan_csv_contract(tmp_path):
    doc = write(tmp_path, "l.json", {
        "kind": "laurent", "n": 2,
        "terms": [{"k": [1, 1], "p": 0, "c": {"re": 1, "im": 0}}]})
    out = tmp_path / "field.csv"
    result = run("scan", "--in", doc, "--path", "circle:0.5", "--samples", "64",
                 "--family", "polydisk", "--rho", "1", "--out", str(out))
    assert result.returncode == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "q_re,q_im,norm"
    assert len(lines) == 65
    for line in lines[1:]:
        qre, qim, value = line.split(",")
        assert float(value) == pytest.approx(0.5, rel=1e-12)
    # 17 significant digits requested from the formatter
    assert any(len(line.split(",")[0].replace("-", "").replace(".", "")) >= 16
               for line in lines[1:])


def test_scan_ray_path(tmp_path):
    doc = write(tmp_path, "l.json", {
        "kind": "laurent", "n": 2,
        "terms": [{"k": [1, 1], "p": 0, "c": {"re": 1, "im": 0}}]})
    result = run("scan", "--in", doc, "--path", "ray:0.3:0.5:2.0", "--samples", "16",
                 "--family", "ball", "--rho", "0.5")
    assert result.returncode == 0
    payload = json.loads(result.stdout)
    assert len(payload["rows"]) == 16


def test_verify_single_suite_and_json():
    result = run("verify", "stirling-3-4", "--json")
    assert result.returncode == 0
    payload = json.loads(result.stdout)
    assert payload["status"] == "pass"
    assert payload["suites"][0]["suite"] == "stirling-3-4"


def test_verify_unknown_suite_exits_two():
    assert run("verify", "no-such").returncode == 2


def test_usage_errors_exit_two(tmp_path, qpoly_doc):
    assert run("norm", "--in", qpoly_doc, "--family", "polydisk",
               "--rho", "-1").returncode == 2
    assert run("mul", "--in", qpoly_doc).returncode == 2
    missing = str(tmp_path / "missing.json")
    assert run("norm", "--in", missing, "--family", "ball", "--rho", "1").returncode == 2
    bad = tmp_path / "bad.json"
    bad.write_text('{"kind":"qpoly","n":2,"terms":[]}')
    assert run("norm", "--in", str(bad), "--family", "ball", "--rho", "1").returncode == 2


def test_verify_fixed_seed_reproducible():
    first = run("verify", "lemma-7-9", "--json")
    second = run("verify", "lemma-7-9", "--json")
    a = json.loads(first.stdout)["suites"][0]
    b = json.loads(second.stdout)["suites"][0]
    assert a["checks"] == b["checks"]
