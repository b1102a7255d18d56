import json

import pytest

from lgmirror import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_print_w_text(capsys):
    code, out = run(capsys, "print-w", "--m", "2", "--format", "text")
    assert code == 0
    assert out.strip() == "p[1]/p[] + p[2]^2/(p[1]p[2] - p[]p[2,1]) + q*p[1]/p[2,1]"


def test_print_w_m3_has_four_terms(capsys):
    code, out = run(capsys, "print-w", "--m", "3")
    assert code == 0
    assert out.count("/") == 4


def test_print_w_json(capsys):
    code, out = run(capsys, "print-w", "--m", "2", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["schema"] == "lg-mirror/1"
    assert len(payload["terms"]) == 3


def test_print_w_latex(capsys):
    code, out = run(capsys, "print-w", "--m", "3", "--format", "latex")
    assert code == 0
    assert out.count("\\frac") == 4


@pytest.mark.parametrize(
    "suite,m",
    [("theorem-w", 2), ("theorem-w", 3), ("minors", 3), ("subword", 2), ("em", 3), ("fj", 3)],
)
def test_verify_suites_pass(capsys, suite, m):
    code, out = run(capsys, "verify", suite, "--m", str(m), "--trials", "3", "--seed", "7")
    assert code == 0
    payload = json.loads(out)
    assert payload["ok"] is True
    assert payload["schema"] == "lg-mirror/1"
    assert all(r["ok"] for r in payload["records"])


def test_verify_pi_map(capsys):
    code, out = run(capsys, "verify", "pi-map", "--m", "3")
    assert code == 0
    assert json.loads(out)["ok"] is True


def test_verify_chevalley(capsys):
    code, out = run(capsys, "verify", "chevalley", "--m", "6")
    assert code == 0


def test_verify_rational_q(capsys):
    code, out = run(capsys, "verify", "theorem-w", "--m", "2", "--q", "5/7", "--trials", "2")
    assert code == 0
    assert json.loads(out)["q"] == "5/7"


def test_critical_m3_passes(capsys):
    code, out = run(capsys, "critical", "--m", "3", "--q", "1", "--trials", "250", "--seed", "1")
    assert code == 0
    payload = json.loads(out)
    assert payload["spectrum_match"]["count"] == 8
    assert payload["spectrum_match"]["max_rel_err"] < 1e-6


def test_critical_m2_reports_the_missing_point(capsys):
    code, out = run(capsys, "critical", "--m", "2", "--q", "1", "--trials", "80", "--seed", "1")
    assert code == 1  # count 3 != 4: honest failure exit
    payload = json.loads(out)
    assert payload["spectrum_match"]["count"] == 3


def test_critical_rejects_q_zero(capsys):
    code = cli.main(["critical", "--m", "2", "--q", "0"])
    assert code == 2


def test_m_too_small_is_usage_error():
    assert cli.main(["verify", "theorem-w", "--m", "1"]) == 2


def test_byte_identical_reports(tmp_path):
    f1, f2 = tmp_path / "a.json", tmp_path / "b.json"
    for f in (f1, f2):
        code = cli.main(
            ["critical", "--m", "3", "--q", "1", "--trials", "100", "--seed", "3", "--out", str(f)]
        )
        assert code == 0
    assert f1.read_bytes() == f2.read_bytes()
    v1, v2 = tmp_path / "v1.json", tmp_path / "v2.json"
    for f in (v1, v2):
        assert (
            cli.main(
                ["verify", "minors", "--m", "3", "--trials", "4", "--seed", "11", "--out", str(f)]
            )
            == 0
        )
    assert v1.read_bytes() == v2.read_bytes()


def test_divisor_redraw_counted(capsys):
    code, out = run(capsys, "verify", "theorem-w", "--m", "2", "--trials", "10", "--seed", "2")
    assert code == 0
    payload = json.loads(out)
    assert payload["divisor_redraws"] >= 0
