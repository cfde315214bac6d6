import json
import subprocess
import sys

import pytest

from higherweyl import cli, verify, weyl_dims
from higherweyl.cli import run


def out_of(capsys, argv):
    code = run(argv)
    captured = capsys.readouterr()
    return code, captured.out.strip(), captured.err.strip()


@pytest.mark.parametrize("argv, expected", [
    ("dim --xi 2 --rank 2 --level 1 --method det", "5"),
    ("catalan --n 3 --rank 2", "14"),
    ("dim --xi 1,1 --rank 2 --level 1", "1"),
    ("trapezoid --n 1 --p 1 --rank 2 --level 1", "3"),
    ("cpf --xi 3 --level 1", "16"),
    ("demazure --weights 1,1 --rank 3 --level 1", "9"),
    ("eta --xi 2,1 --rank 2", "1,2,4"),
    ("shape --eta 2,4", "2,1"),
    ("pp --shape 2,1 --bound 2", "14"),
])
def test_scalar_commands(capsys, argv, expected):
    code, out, _ = out_of(capsys, argv.split())
    assert code == 0
    assert out == expected


@pytest.mark.parametrize("xi, r, k", [("2", 2, 2), ("3", 3, 2), ("4", 2, 3)])
def test_methods_agree(capsys, xi, r, k):
    values = set()
    for method in ("det", "enum", "product"):
        code, out, _ = out_of(capsys, ["dim", "--xi", xi, "--rank", str(r), "--level", str(k), "--method", method])
        assert code == 0
        values.add(out)
    assert len(values) == 1


def test_det_and_enum_agree_multi_row(capsys):
    _, a, _ = out_of(capsys, "dim --xi 2,1 --rank 3 --level 2 --method det".split())
    _, b, _ = out_of(capsys, "dim --xi 2,1 --rank 3 --level 2 --method enum".split())
    assert a == b


@pytest.mark.parametrize("argv, flag", [
    ("dim --xi 2,1 --rank 2 --level 1 --method product", "--method"),
    ("dim --xi 1,2 --rank 2 --level 1", "--xi"),
    ("dim --xi 2 --rank 0 --level 1", "--rank"),
    ("dim --xi 2 --rank 2 --level 1 --bogus", "--bogus"),
    ("dim --xi 1,1,1 --rank 2 --level 1", "--xi"),
    ("demazure --weights 1 --rank 3 --level 1", "--weights"),
    ("catalan --n x --rank 2", "--n"),
    ("shape --eta 3,2", "--eta"),
])
def test_usage_errors(capsys, argv, flag):
    code, out, err = out_of(capsys, argv.split())
    assert code == 1
    assert out == ""
    assert flag in err
    assert len(err.splitlines()) == 1


def test_missing_subcommand(capsys):
    code, _, err = out_of(capsys, [])
    assert code == 1 and err


def test_json_output_is_decimal_string_and_stable(capsys):
    argv = "dim --xi 4 --rank 4 --level 4 --format json".split()
    _, first, _ = out_of(capsys, argv)
    _, second, _ = out_of(capsys, argv)
    assert first == second
    data = json.loads(first)
    assert data["dimension"] == str(weyl_dims.product_dim_rect(4, 4, 4))


def test_char_outputs(capsys):
    _, plain, _ = out_of(capsys, "char --xi 2 --rank 2 --level 1".split())
    assert plain == "x1^2 + 3*x1*x2 + x2^2"
    _, js, _ = out_of(capsys, "char --xi 2 --rank 2 --level 1 --format json".split())
    assert json.loads(js)["character"] == [
        {"exponents": [2, 0], "coefficient": "1"},
        {"exponents": [1, 1], "coefficient": "3"},
        {"exponents": [0, 2], "coefficient": "1"},
    ]
    _, js, _ = out_of(capsys, "char --xi 2 --rank 2 --level 1 --schur --format json".split())
    assert json.loads(js)["schur"] == [{"partition": [2], "multiplicity": "1"}, {"partition": [1, 1], "multiplicity": "2"}]
    _, graded, _ = out_of(capsys, "char --xi 2 --rank 2 --level 1 --graded --format json".split())
    assert [p["t_degree"] for p in json.loads(graded)["graded_character"]] == [2, 3]
    _, chain_graded, _ = out_of(capsys, "char --xi 2 --rank 2 --level 1 --graded --grading chain".split())
    assert chain_graded.splitlines()[0].startswith("t^3:")
    _, csv_out, _ = out_of(capsys, "char --xi 2 --rank 2 --level 1 --graded --schur --format csv".split())
    assert csv_out.splitlines()[0] == "t_degree,partition,multiplicity"


def test_chains_and_pp_listing(capsys):
    _, js, _ = out_of(capsys, "chains --xi 2 --level 1 --format json".split())
    assert json.loads(js)["chains"] == [[[], [1], [1, 1]], [[], [1, 1], [1, 1]]]
    _, js, _ = out_of(capsys, "pp --shape 2,1 --bound 1 --list --format json".split())
    data = json.loads(js)
    assert data["count"] == "5"
    assert data["plane_partitions"][0] == [[0, 0], [0]]


def test_verify_small_range(capsys):
    small = verify.VerifyConfig(max_size=2, max_rank=2, max_level=1, rect_max_n=2, catalan_max_n=3,
                                trap_max_n=2, trap_max_p=1, bij_max_len=2, bij_max_entry=4, bij_max_level=1,
                                schur_max_size=3, lr_max_size=3, syt_max_size=3, parking_max_n=3)
    results = verify.run_all(small)
    assert all(r.passed for r in results)
    assert len(results) == 10


def test_verify_failure_exit_code(capsys, monkeypatch):
    def failing(cfg):
        rec = verify._Recorder("always fails")
        rec.expect(False, "forced")
        return rec.done()

    monkeypatch.setattr(verify, "CHECKS", [failing])
    code, out, _ = out_of(capsys, ["verify"])
    assert code == 2
    assert "[FAIL] always fails" in out


def test_internal_error_exit_code(capsys, monkeypatch):
    def broken(n, r, k):
        raise weyl_dims.NonIntegralError("forced")

    monkeypatch.setattr(cli.weyl_dims, "product_dim_rect", broken)
    code, _, err = out_of(capsys, "dim --xi 2 --rank 2 --level 1 --method product".split())
    assert code == 3
    assert "forced" in err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "higherweyl", "catalan", "--n", "5", "--rank", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "132"
