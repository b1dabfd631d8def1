"""Command-line interface: subcommands, config handling, exit codes."""

import json

from birevnf.cli import EXIT_CONFIG, EXIT_OK, EXIT_RESOURCE, main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_classify_reports_type_b(capsys):
    code, out, _ = run_cli(
        capsys,
        "classify",
        "--case", "res_n1n2_C3",
        "--params", "1,2",
        "--signs", "1,-1,-1,1",
    )
    assert code == EXIT_OK
    assert "Type B" in out
    assert "involution pairs: 8" in out


def test_classify_json_output(capsys):
    code, out, _ = run_cli(
        capsys,
        "classify",
        "--case", "non_resonant",
        "--params", "2",
        "--signs", "1,1,1",
        "--format", "json",
    )
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["pair_count"] == 4
    assert all(r["fix_phi"] == 3 for r in data["pairs"])


def test_generators_deterministic(capsys):
    args = (
        "generators",
        "--case", "non_resonant",
        "--params", "2",
        "--signs", "1,1,1",
        "--format", "json",
    )
    code1, out1, _ = run_cli(capsys, *args)
    code2, out2, _ = run_cli(capsys, *args)
    assert code1 == code2 == EXIT_OK
    assert out1 == out2
    payload = json.loads(out1)
    assert payload["schema"] == "genset-v1"
    assert payload["certified"] is True


def test_normal_form_latex(capsys):
    code, out, _ = run_cli(
        capsys,
        "normal-form",
        "--case", "non_resonant",
        "--params", "1",
        "--signs", "1,1",
        "--degree", "3",
        "--format", "latex",
    )
    assert code == EXIT_OK
    assert "\\begin{align*}" in out


def test_verify_certifies_type_a(capsys):
    code, out, _ = run_cli(
        capsys,
        "verify",
        "--case", "res_n1n2_C3",
        "--params", "1,2",
        "--signs", "1,1,1,1",
        "--verify-degrees", "2..3",
    )
    assert code == EXIT_OK
    assert "certified" in out


def test_config_file_with_flag_override(tmp_path, capsys):
    cfg = tmp_path / "job.json"
    cfg.write_text(
        json.dumps(
            {
                "case": "non_resonant",
                "params": [2],
                "signs": [1, 1, 1],
                "degree_max": 4,
                "format": "text",
            }
        )
    )
    code, out, _ = run_cli(
        capsys, "normal-form", "--config", str(cfg), "--format", "json"
    )
    assert code == EXIT_OK
    assert json.loads(out)["schema"] == "nf-v1"


def test_degree_below_two_is_config_error(capsys):
    code, _, err = run_cli(
        capsys,
        "generators",
        "--case", "non_resonant",
        "--params", "2",
        "--signs", "1,1,1",
        "--degree", "1",
    )
    assert code == EXIT_CONFIG
    assert "config error" in err


def test_unknown_case_is_config_error(capsys):
    code, _, err = run_cli(
        capsys, "generators", "--case", "res_11", "--signs", "1,1"
    )
    assert code == EXIT_CONFIG


def test_bad_signs_are_config_errors(capsys):
    code, _, _ = run_cli(
        capsys,
        "generators",
        "--case", "non_resonant",
        "--params", "2",
        "--signs", "1,2,1",
    )
    assert code == EXIT_CONFIG
    code, _, _ = run_cli(
        capsys,
        "generators",
        "--case", "non_resonant",
        "--params", "2",
        "--signs", "1,1",
    )
    assert code == EXIT_CONFIG


def test_monomial_limit_yields_resource_exit(capsys):
    code, _, err = run_cli(
        capsys,
        "verify",
        "--case", "non_resonant",
        "--params", "1",
        "--signs", "1,1",
        "--verify-degrees", "6",
        "--limit-monomials", "5",
    )
    assert code == EXIT_RESOURCE
    assert "resource limit" in err


def test_repo_job_fixtures(capsys):
    import pathlib

    jobs = pathlib.Path(__file__).resolve().parent.parent / "jobs"
    code, out, _ = run_cli(capsys, "verify", "--config", str(jobs / "c3_type_b_verify.json"))
    assert code == EXIT_OK
    assert "certified" in out
    code, out, _ = run_cli(
        capsys, "normal-form", "--config", str(jobs / "nonres2_normal_form.json")
    )
    assert code == EXIT_OK
    assert "\\begin{align*}" in out


def test_python_dash_m_entry_point():
    import subprocess
    import sys

    result = subprocess.run(
        [sys.executable, "-m", "birevnf", "classify", "--case", "non_resonant",
         "--params", "1", "--signs", "1,1"],
        capture_output=True,
        text=True,
    )
    assert result.returncode == EXIT_OK
    assert "involution pairs: 2" in result.stdout


def test_output_file(tmp_path, capsys):
    target = tmp_path / "out.txt"
    code, out, _ = run_cli(
        capsys,
        "classify",
        "--case", "non_resonant",
        "--params", "1",
        "--signs", "1,1",
        "--out", str(target),
    )
    assert code == EXIT_OK
    assert out == ""
    assert "involution pairs: 2" in target.read_text()
