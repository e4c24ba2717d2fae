import io
import json
import sys

import pytest

from mengerian.cli import main


def run_cli(argv, stdin_text=None):
    out, err = io.StringIO(), io.StringIO()
    old = sys.stdout, sys.stderr, sys.stdin
    sys.stdout, sys.stderr = out, err
    if stdin_text is not None:
        sys.stdin = io.StringIO(stdin_text)
    try:
        code = main(argv)
    finally:
        sys.stdout, sys.stderr, sys.stdin = old
    return code, out.getvalue(), err.getvalue()


def test_decide_cycle8():
    code, out, _ = run_cli(["decide", "--family", "cycle:8"])
    assert code == 0
    d = json.loads(out)
    assert d["trace"] == "POWER_EQUALITY" and d["mengerian"] is True
    assert d["schema"] == 1


def test_check_ideal_assert_refuted():
    code, out, _ = run_cli(["check", "ideal", "--family", "cycle:5", "--assert"])
    assert code == 2
    d = json.loads(out)
    assert d["holds"] is False
    coords = d["ideal"]["fractional_vertex"]["coords"]
    assert all("/" in c or c in ("0", "1") for c in coords)


def test_check_without_assert_returns_zero():
    code, out, _ = run_cli(["check", "ideal", "--family", "cycle:5"])
    assert code == 0


def test_check_konig_text():
    code, out, _ = run_cli(["check", "konig", "--family", "cycle:8", "--format", "text"])
    assert code == 0 and "holds" in out


def test_check_mfmc_probe():
    code, out, _ = run_cli(["check", "mfmc-probe", "--family", "cycle:5",
                            "--cmax", "1", "--assert"])
    assert code == 2
    d = json.loads(out)
    assert d["mfmc_probe"]["refuted"] is True
    assert d["mfmc_probe"]["cost"] == [1, 1, 1, 1, 1]


def test_classify_text():
    code, out, _ = run_cli(["classify", "--family", "star_plus_edge:4"])
    assert code == 0 and "STAR_PLUS_EDGE" in out


def test_check_ideal_dot_figure():
    # refuted ideal check rendered as a DOT figure with vertex values
    code, out, _ = run_cli(["check", "ideal",
                            "--edges", "1 2\\n2 3\\n3 4\\n4 5\\n3 6",
                            "--format", "dot"])
    assert code == 0
    assert out.startswith("graph G {")
    assert 'label="x2 = 1/2"' in out and 'label="x6 = 1/2"' in out
    assert 'label="x1 = 0"' in out


def test_decide_no_certificates():
    code, out, _ = run_cli(["decide", "--family", "cycle:5", "--no-certificates"])
    assert code == 0
    d = json.loads(out)
    assert d["checks"]["ideal"]["value"] is False
    assert "fractional_vertex" not in d["checks"]["ideal"]


def test_hypergraph_text_and_dot():
    code, out, _ = run_cli(["hypergraph", "--family", "cycle:5"])
    assert code == 0 and out.splitlines()[0] == "5 5"
    code, dot, _ = run_cli(["hypergraph", "--family", "cycle:5", "--format", "dot"])
    assert code == 0 and dot.startswith("graph G {")


def test_survey_small():
    code, out, _ = run_cli(["survey", "--max-n", "4"])
    assert code == 0
    d = json.loads(out)
    assert d["counters"]["total"] == 6 and d["mismatches"] == []


def test_survey_csv():
    code, out, _ = run_cli(["survey", "--max-n", "4", "--csv"])
    assert code == 0
    assert out.splitlines()[0].startswith("n,index,graph6")


def test_survey_env_cap(monkeypatch):
    monkeypatch.setenv("MENGERIAN_MAX_N", "4")
    code, out, _ = run_cli(["survey"])
    assert code == 0
    assert json.loads(out)["n_max"] == 4


def test_verify_certificate_round_trip(tmp_path):
    code, out, _ = run_cli(["decide", "--edges", "1 2\\n2 3\\n3 4\\n4 5\\n3 6"])
    assert code == 0
    path = tmp_path / "report.json"
    path.write_text(out)
    code, out2, _ = run_cli(["verify-certificate", str(path)])
    assert code == 0
    assert "fractional_vertex: valid" in out2


def test_verify_certificate_accepts_check_output():
    code, out, _ = run_cli(["check", "ntf", "--family", "cycle:5"])
    assert code == 0
    code2, out2, _ = run_cli(["verify-certificate", "-"], stdin_text=out)
    assert code2 == 0 and "power_violation: valid" in out2
    code3, out3, _ = run_cli(["check", "konig", "--family", "cycle:8"])
    code4, out4, _ = run_cli(["verify-certificate", "-"], stdin_text=out3)
    assert code4 == 0 and "konig_values: valid" in out4


def test_verify_certificate_stdin_tampered():
    code, out, _ = run_cli(["decide", "--family", "cycle:6"])
    d = json.loads(out)
    d["checks"]["ideal"]["fractional_vertex"]["coords"][0] = "2/3"
    code2, out2, _ = run_cli(["verify-certificate", "-"], stdin_text=json.dumps(d))
    assert code2 == 2
    assert "INVALID" in out2


def test_input_source_required():
    with pytest.raises(SystemExit):
        run_cli(["decide"])


def test_bad_family_is_error():
    code, _, err = run_cli(["decide", "--family", "cycle:2"])
    assert code == 1 and "error" in err


def test_parse_error_exit_code():
    code, _, err = run_cli(["decide", "--edges", "1 1"])
    assert code == 1 and "loop" in err


def test_deterministic_output():
    _, out1, _ = run_cli(["decide", "--family", "cycle:8"])
    _, out2, _ = run_cli(["decide", "--family", "cycle:8"])
    assert out1 == out2


def test_cap_exceeded_exit():
    code, _, err = run_cli(["--max-n", "5", "decide", "--family", "cycle:8"])
    assert code == 1 and "cap" in err
