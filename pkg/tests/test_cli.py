import json

import pytest

from hookpath.cli import EXIT_OK, EXIT_RESOURCE, EXIT_USAGE, RunConfig, UsageError, cmd_verify, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_full_envelope(capsys):
    code, out, _ = run(capsys, "verify", "--p", "3", "--k", "0,1", "--max-floor", "12", "--suite", "all", "--format", "json")
    rows = [json.loads(line) for line in out.splitlines()]
    assert code == EXIT_OK
    assert rows[-1]["suite"] == "summary" and rows[-1]["hard_failures"] == 0
    assert all(r["schema_version"] == 1 for r in rows[:-1])


def test_verify_is_deterministic(capsys):
    argv = ("verify", "--p", "3", "--k", "0,1", "--max-floor", "9")
    assert run(capsys, *argv)[1] == run(capsys, *argv)[1]


def test_parallel_output_matches_serial(capsys):
    argv = ("verify", "--p", "3", "--k", "0,1", "--max-floor", "9")
    assert run(capsys, *argv)[1] == run(capsys, *argv, "--parallelism", "2")[1]


def test_rejects_even_prime(capsys):
    code, _, err = run(capsys, "verify", "--p", "4", "--k", "0", "--max-floor", "6")
    assert code == EXIT_USAGE and "p must be an odd prime" in err


def test_floor_bound_too_small():
    with pytest.raises(UsageError):
        RunConfig(3, (2,), 5).validate()


def test_resource_guard(capsys):
    code, _, err = run(capsys, "verify", "--p", "7", "--k", "3", "--max-floor", "20")
    assert code == EXIT_RESOURCE and "paths" in err


def test_fibonacci_report_contains_example(capsys):
    code, out, _ = run(capsys, "verify", "--p", "5", "--k", "2", "--suite", "fibonacci", "--max-floor", "14")
    assert code == EXIT_OK
    text = out
    for value in ("202", "206", "210", "186", "190", "194", "1526"):
        assert value in text


def test_report_file_and_formats(tmp_path, capsys):
    path = tmp_path / "r.csv"
    code, out, err = run(capsys, "verify", "--p", "3", "--k", "0", "--max-floor", "6", "--format", "csv", "--out", str(path))
    assert code == EXIT_OK and out == "" and "summary:" in err
    assert path.read_text().startswith("schema_version,suite,check")
    cfg = RunConfig(3, (0,), 6, format="text")
    import io

    buf = io.StringIO()
    assert cmd_verify(cfg, out=buf) == EXIT_OK
    assert buf.getvalue().splitlines()[-1].startswith("summary:")


def test_show_commands(capsys):
    assert run(capsys, "show", "poly", "--p", "3", "--floor", "4", "--k", "0")[1].strip() == "q^2 + 3q + 2"
    assert run(capsys, "show", "fib", "--p", "5", "--k", "2", "--s", "3", "--l", "0")[1].strip() == "202"
    out = run(capsys, "show", "genfun", "--p", "3", "--k", "0", "--terms", "5")[1]
    assert out.splitlines()[1].startswith("5, 27, 117")
    out = run(capsys, "show", "paths", "--p", "3", "--floor", "2")[1]
    assert len(out.splitlines()) == 2
    out = run(capsys, "show", "vertex", "--p", "3", "--floor", "2")[1]
    assert json.loads(out.splitlines()[0])["size"] == 3


def test_show_bad_selector(capsys):
    code, _, err = run(capsys, "show", "vertex", "--p", "3", "--floor", "2", "--l", "9")
    assert code == EXIT_USAGE and "error" in err
