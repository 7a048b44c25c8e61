"""The command-line surface: flags, formats, determinism, and exit codes."""

import json

import pytest

import golden_data as gold
from gogmagog.cli import Config, main
from gogmagog.triangles import from_json


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_enumerate_count_only(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "--family", "boolean", "--n", "3", "--count-only")
    assert code == 0 and out.strip() == "7"


def test_enumerate_jsonl_round_trips(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "--family", "magog", "--n", "3", "--jsonl")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 7
    objects = [from_json(line) for line in lines]
    assert sorted(o.rows for o in objects) == sorted(gold.MAGOG_3)


def test_convert_permutation_to_boolean(capsys):
    code, out, _ = run_cli(capsys, "convert", "--from", "permutation", "--to", "boolean", "463512")
    assert code == 0
    assert json.loads(out) == {
        "kind": "boolean_triangle",
        "n": 6,
        "rows": [[1], [0, 0], [1, 1, 0], [0, 0, 0, 0], [1, 0, 0, 0, 0]],
    }


def test_convert_asm_to_monotone_and_back(capsys):
    blob = json.dumps({"kind": "asm", "n": 3, "rows": [list(r) for r in gold.ASMS_3[3]]})
    code, out, _ = run_cli(capsys, "convert", "--from", "asm", "--to", "monotone", blob)
    assert code == 0
    assert from_json(out).rows == gold.MONOTONE_3[3]
    code, out, _ = run_cli(capsys, "convert", "--from", "monotone", "--to", "asm", out)
    assert code == 0
    assert from_json(out).rows == gold.ASMS_3[3]


def test_convert_crossing_sides_needs_permutation(capsys):
    blob = json.dumps({"kind": "asm", "n": 3, "rows": [list(r) for r in gold.ASMS_3[3]]})
    code, out, err = run_cli(capsys, "convert", "--from", "asm", "--to", "magog", blob)
    assert code == 2 and "error" in err


def test_convert_permutation_full_chain(capsys):
    code, out, _ = run_cli(capsys, "convert", "--from", "permutation", "--to", "tsscpp", "463512")
    assert code == 0
    assert from_json(out).rows == gold.GOLDEN["tsscpp"]


def test_stats_permutation(capsys):
    code, out, _ = run_cli(capsys, "stats", "--kind", "permutation", "463512")
    assert code == 0
    payload = json.loads(out)
    assert payload["stats"]["inversions"] == 11
    # the embedded object round-trips through the parsers
    from gogmagog.triangles import from_json_dict

    assert from_json_dict(payload["object"]).one_line() == "463512"


def test_stats_boolean(capsys):
    blob = json.dumps({"kind": "boolean_triangle", "n": 6, "rows": [list(r) for r in gold.GOLDEN["boolean"]]})
    code, out, _ = run_cli(capsys, "stats", blob)
    assert code == 0
    stats = json.loads(out)["stats"]
    assert stats == {
        "zeros": 11,
        "last_row_zeros": 4,
        "lowest_one_last_diagonal": 1,
        "zero_then_one": 0,
        "is_permutation": True,
    }


def test_dist(capsys):
    code, out, _ = run_cli(capsys, "dist", "--family", "asm", "--n", "3", "--statistic", "negative_ones")
    assert code == 0
    assert json.loads(out) == {"statistic": "negative_ones", "n": 3, "counts": {"0": 6, "1": 1}}


def test_poset_json(capsys):
    code, out, _ = run_cli(capsys, "poset", "--name", "tamari", "--n", "3", "--out", "json")
    assert code == 0
    payload = json.loads(out)
    assert len(payload["elements"]) == 5
    assert len(payload["covers"]) == 5


def test_poset_dot(capsys):
    code, out, _ = run_cli(capsys, "poset", "--name", "chains", "--n", "3", "--out", "dot")
    assert code == 0
    assert out.startswith("digraph")
    assert "->" in out


def test_poset_check_pass_and_exit_codes(capsys):
    code, out, _ = run_cli(capsys, "poset-check", "--claim", "thm4.2", "--n", "3")
    assert code == 0 and "PASS" in out
    code, out, _ = run_cli(capsys, "poset-check", "--claim", "lemma4.8", "--n", "4")
    assert code == 0


def test_verify_all(capsys):
    code, out, _ = run_cli(capsys, "verify-all", "--n", "3")
    assert code == 0
    assert "30/30 checks passed" in out
    assert "FAIL" not in out


def test_determinism(capsys):
    first = run_cli(capsys, "enumerate", "--family", "asm", "--n", "4")
    second = run_cli(capsys, "enumerate", "--family", "asm", "--n", "4")
    assert first == second


def test_cap_errors_are_usage_errors(capsys, monkeypatch):
    code, out, err = run_cli(capsys, "enumerate", "--family", "asm", "--n", "9", "--count-only")
    assert code == 2 and "cap" in err
    monkeypatch.setenv("TSSCPP_MAX_N", "3")
    code, out, err = run_cli(capsys, "enumerate", "--family", "asm", "--n", "4", "--count-only")
    assert code == 2
    monkeypatch.setenv("TSSCPP_MAX_N", "4")
    code, out, err = run_cli(capsys, "enumerate", "--family", "asm", "--n", "4", "--count-only")
    assert code == 0 and out.strip() == "42"


def test_bad_input_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "convert", "--from", "boolean", "--to", "magog", '{"kind":"boolean_triangle","n":3,"rows":[[1],[0,1]]}')
    assert code == 2 and "error" in err


def test_config_from_environment(monkeypatch):
    config = Config.from_environment()
    assert config.deterministic
    assert config.cap("asm") == 7
    monkeypatch.setenv("TSSCPP_MAX_N", "5")
    assert Config.from_environment().cap("asm") == 5


def test_module_entry_point():
    import subprocess
    import sys

    result = subprocess.run(
        [sys.executable, "-m", "gogmagog", "enumerate", "--family", "boolean", "--n", "3", "--count-only"],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0 and result.stdout.strip() == "7"
