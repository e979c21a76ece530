import json
import subprocess
import sys

import pytest

from strongctrl import catalog
from strongctrl.cli import main


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, text in {
        "A": catalog.CHAIN_A,
        "B": catalog.CHAIN_B,
        "ragged": "* o\n* o o\n",
        "bad": "* q\n",
    }.items():
        p = tmp_path / f"{name}.txt"
        p.write_text(text)
        paths[name] = str(p)
    return paths


def analyze(files, *extra, b="B"):
    return ["analyze", "--a", files["A"], "--b", files[b], "--domain", "discrete", *extra]


def test_guaranteed_exit_zero(files, capsys):
    code = main(analyze(files, "--variation", "tv", "--horizon", "6", "--direction", "controllability"))
    out = json.loads(capsys.readouterr().out)
    assert code == 0 and out["answer"] == "guaranteed"


def test_not_guaranteed_exit_two(files, capsys):
    code = main(analyze(files, "--variation", "tv", "--horizon", "3", "--direction", "controllability"))
    out = json.loads(capsys.readouterr().out)
    assert code == 2 and out["answer"] == "not-guaranteed"
    g3 = out["verdicts"][0]
    assert g3["condition"] == "G3" and g3["witness"]


def test_undecided_exit_three(files, capsys):
    code = main(analyze(files, "--variation", "lti", "--horizon", "3", "--direction", "controllability"))
    assert code == 3
    assert json.loads(capsys.readouterr().out)["answer"] == "undecided"


def test_ragged_file(files, capsys):
    code = main(analyze(files, "--variation", "lti", b="ragged"))
    err = capsys.readouterr().err
    assert code == 1
    assert "line 2" in err and files["ragged"] in err


def test_unknown_token(files, capsys):
    assert main(analyze(files, "--variation", "lti", b="bad")) == 1
    assert "'q'" in capsys.readouterr().err


def test_missing_file(files, capsys):
    assert main(["analyze", "--a", "/nonexistent", "--b", files["B"], "--domain", "discrete", "--variation", "lti"]) == 1


def test_usage_errors_exit_one(files, capsys):
    with pytest.raises(SystemExit) as info:
        main(["analyze", "--a", files["A"]])
    assert info.value.code == 1
    assert main(analyze(files, "--variation", "tv")) == 1
    assert "--horizon" in capsys.readouterr().err
    assert main(analyze(files, "--variation", "lti", "--direction", "observability")) == 1


def test_dimension_error(files, tmp_path, capsys):
    small = tmp_path / "small.txt"
    small.write_text("* o\no *\n")
    code = main(["analyze", "--a", str(small), "--b", files["B"], "--domain", "discrete", "--variation", "lti"])
    assert code == 1
    assert "dimension" in capsys.readouterr().err


def test_observability_route(files, tmp_path, capsys):
    c = tmp_path / "C.txt"
    c.write_text("* o o o o o\n")
    code = main(
        ["analyze", "--a", files["A"], "--c", str(c), "--domain", "continuous", "--variation", "lti",
         "--direction", "observability"]
    )
    out = json.loads(capsys.readouterr().out)
    assert out["query"]["direction"] == "observability"
    assert code in (0, 2)


def test_text_output(files, capsys):
    code = main(analyze(files, "--variation", "lti", "--output", "text"))
    out = capsys.readouterr().out
    assert code == 0
    assert "7 -> 1" in out and "step 1" in out and "answer: guaranteed" in out


def test_verbose_json(files, capsys):
    main(analyze(files, "--variation", "lti", "--verbose"))
    out = json.loads(capsys.readouterr().out)
    assert out["verdicts"][0]["trace"][0]["T"] == [1, 2, 4, 5, 6]


def test_json_deterministic(files, capsys):
    args = analyze(files, "--variation", "tv", "--horizon", "3")
    main(args)
    first = capsys.readouterr().out
    main(args)
    assert capsys.readouterr().out == first


def test_module_entry_point(files):
    proc = subprocess.run(
        [sys.executable, "-m", "strongctrl", *analyze(files, "--variation", "tv", "--horizon", "6")],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["answer"] == "guaranteed"


@pytest.mark.parametrize("seed", [None, 7])
def test_selftest(seed, capsys):
    argv = ["selftest"] + ([] if seed is None else ["--seed", str(seed)])
    assert main(argv) == 0
    out = capsys.readouterr().out
    assert out.count("[PASS]") == 10 and "[FAIL]" not in out
