"""The command-line front end: flags, formats, exit codes, determinism."""

import json

from pie.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_series_divisor_count_rows(capsys):
    code, out, _ = run(capsys, "series", "--name", "K", "--m", "1", "--c", "1", "--order", "5")
    assert code == 0
    assert out == "1,1\n2,2\n3,2\n4,3\n5,2\n"


def test_series_symbolic_dump(capsys):
    code, out, _ = run(capsys, "series", "--name", "K", "--m", "1", "--order", "4")
    assert code == 0
    assert out.splitlines()[0] == "1,c"


def test_series_entry4_and_a_and_dilcher(capsys):
    for extra in (["--name", "entry4"], ["--name", "A"], ["--name", "dilcher", "--m", "2"]):
        code, out, _ = run(capsys, "series", *extra, "--order", "8", "--c", "1")
        assert code == 0
        assert out  # nonempty dump


def test_involution_trace_example(capsys):
    code, out, _ = run(capsys, "involution", "--n", "6", "--N-divisor", "3", "--trace")
    assert code == 0
    assert "input 4+2 N=3 case=case2" in out
    assert "output 3+2+1" in out
    assert "input 3+2+1 N=3 case=case1" in out
    assert "output 4+2" in out
    assert "class_sum=1" in out


def test_involution_summary_and_sweep(capsys):
    code, out, _ = run(capsys, "involution", "--n", "8", "--N-divisor", "3")
    assert code == 0
    assert "class_sum=0" in out
    code, out, _ = run(capsys, "involution", "--n", "10", "--N-divisor", "1", "--sweep")
    assert code == 0
    assert "sweep ok for n=10" in out


def test_verify_single_identity_json(capsys):
    code, out, _ = run(capsys, "verify", "--id", "class_sum", "--n-max", "20")
    assert code == 0
    reports = json.loads(out)
    assert len(reports) == 1
    assert reports[0]["id"] == "class_sum"
    assert reports[0]["status"] == "pass"
    assert reports[0]["elapsed_ms"] is None


def test_verify_all_exact(capsys):
    code, out, _ = run(
        capsys, "verify", "--all", "--n-max", "10", "--q-order", "12", "--m-max", "2"
    )
    assert code == 0
    reports = json.loads(out)
    assert len(reports) == 18
    assert all(r["status"] == "pass" for r in reports)


def test_verify_numeric_mode(capsys):
    code, out, _ = run(
        capsys,
        "verify",
        "--all",
        "--mode",
        "numeric",
        "--n-max",
        "12",
        "--z",
        "1.5,-1,0.5+0.5i",
        "--c",
        "0.4,-0.3",
    )
    assert code == 0
    reports = json.loads(out)
    assert {r["id"] for r in reports} == {"bs_onevar", "thm_2_3", "cor_2_4", "thm_2_6"}
    assert all(r["mode"] == "numeric" for r in reports)


def test_verify_failure_exit_code(capsys):
    code, out, _ = run(
        capsys,
        "verify",
        "--id",
        "thm_2_3",
        "--mode",
        "numeric",
        "--n-max",
        "25",
        "--tol",
        "1e-300",
    )
    assert code == 1
    reports = json.loads(out)
    assert reports[0]["status"] == "fail"
    assert reports[0]["first_failure"] is not None


def test_verify_unknown_tag_usage_error(capsys):
    code, _, err = run(capsys, "verify", "--id", "bogus")
    assert code == 2
    assert "unknown identity tag" in err


def test_bad_flags_exit_two(capsys):
    assert run(capsys, "verify")[0] == 2
    assert run(capsys, "nonsense")[0] == 2
    assert run(capsys, "series", "--name", "WRONG")[0] == 2


def test_n_max_guard(capsys):
    code, _, err = run(capsys, "verify", "--id", "bs_basic", "--n-max", "9999")
    assert code == 2
    assert "n-max" in err


def test_output_file_and_formats(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out, _ = run(
        capsys, "verify", "--id", "bs_basic", "--n-max", "15", "--output", str(target)
    )
    assert code == 0
    assert out == ""
    data = json.loads(target.read_text())
    assert data[0]["status"] == "pass"

    code, out, _ = run(
        capsys, "verify", "--id", "bs_basic", "--n-max", "15", "--format", "text"
    )
    assert code == 0
    assert out.startswith("PASS bs_basic [exact]")

    code, out, _ = run(
        capsys, "verify", "--id", "bs_basic", "--n-max", "15", "--format", "csv"
    )
    assert code == 0
    assert out.splitlines()[0] == "id,mode,status,elapsed_ms,first_failure"


def test_byte_identical_reruns(capsys):
    args = ("verify", "--id", "cor_2_5", "--n-max", "40")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second
    assert first.endswith("\n")


def test_timings_flag_populates_elapsed(capsys):
    code, out, _ = run(
        capsys, "verify", "--id", "bs_basic", "--n-max", "10", "--timings"
    )
    assert code == 0
    assert json.loads(out)[0]["elapsed_ms"] is not None


def test_env_overrides(capsys, monkeypatch):
    monkeypatch.setenv("PIE_N_MAX", "7")
    code, out, _ = run(capsys, "verify", "--id", "bs_basic")
    assert code == 0
    assert json.loads(out)[0]["range"]["n_max"] == 7
    # flag wins over environment
    code, out, _ = run(capsys, "verify", "--id", "bs_basic", "--n-max", "9")
    assert json.loads(out)[0]["range"]["n_max"] == 9


def test_report_all(capsys):
    code, out, _ = run(
        capsys, "report-all", "--n-max", "8", "--q-order", "12", "--format", "text"
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 22  # 18 exact + 4 numeric
    assert all(line.startswith("PASS") for line in lines)
