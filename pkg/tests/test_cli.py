import json
import subprocess
import sys

import pytest

from orthocheck.cli import main

COUNTEREXAMPLE_RELATION = [
    {"frame": [["1", "0"], ["0", "1"]], "point": ["3", "5"], "values": ["3", "5"]},
    {"frame": [["1", "0"], ["1", "1"]], "point": ["3", "5"], "values": ["-2", "5"]},
]


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    report = json.loads(captured.out) if captured.out.strip() else None
    return code, report, captured.err


def test_equivalence_defaults(capsys):
    code, report, _ = run_cli(capsys, "equivalence")
    assert code == 0
    assert report["verdict"] == "pass"
    assert report["payload"] == {"failures": 0, "trials": 32}
    assert report["config"]["seed"] == 0


def test_equivalence_zero_frames(capsys):
    code, report, _ = run_cli(capsys, "equivalence", "--frames", "0")
    assert code == 0
    assert report["payload"] == {"failures": 0, "trials": 0}


def test_payloads_are_byte_identical_across_runs(capsys):
    payloads = []
    for _ in range(2):
        code, report, _ = run_cli(capsys, "factor", "--seed", "9")
        assert code == 0
        payloads.append(json.dumps(report["payload"], sort_keys=True))
    assert payloads[0] == payloads[1]


def test_factor_counterexample_exits_one(capsys, tmp_path):
    path = tmp_path / "rel.json"
    path.write_text(json.dumps(COUNTEREXAMPLE_RELATION), encoding="utf-8")
    code, report, _ = run_cli(capsys, "factor", "--input", str(path))
    assert code == 1
    assert report["verdict"] == "fail"
    assert report["payload"]["counterexample"]["values"] == ["3", "-2"]


def test_factor_empty_relation_file(capsys, tmp_path):
    path = tmp_path / "empty.json"
    path.write_text("[]", encoding="utf-8")
    code, report, _ = run_cli(capsys, "factor", "--input", str(path))
    assert code == 0
    assert report["payload"] == {"tables": []}


def test_factor_missing_file_is_usage_error(capsys, tmp_path):
    code, report, err = run_cli(capsys, "factor", "--input", str(tmp_path / "no.json"))
    assert code == 2
    assert report is None
    assert "no.json" in err


def test_factor_parse_error_carries_location(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('[{"frame": [["1","0"],["2","0"]], "point": ["1","0"], '
                    '"values": ["1","0"]}]', encoding="utf-8")
    code, _, err = run_cli(capsys, "factor", "--input", str(path))
    assert code == 2
    assert "points[0].frame" in err


def test_maximality_bound_one_summary(capsys):
    code, report, _ = run_cli(capsys, "maximality", "--bound", "1")
    assert code == 0
    assert report["payload"]["summary"] == {
        "total": 48,
        "orthogonal_accepted": 16,
        "nonorthogonal_rejected": 32,
    }
    assert len(report["payload"]["rejected"]) == 32


def test_maximality_requires_square_config(capsys):
    code, report, err = run_cli(capsys, "maximality", "--dim", "3")
    assert code == 2
    assert report is None
    assert "dim" in err


def test_chain_defaults(capsys):
    code, report, _ = run_cli(capsys, "chain")
    assert code == 0
    lengths = report["payload"]["chain_lengths"]
    assert lengths == sorted(lengths)
    assert report["payload"]["union_passes"] is True


def test_pair_ip_fixture(capsys):
    code, report, _ = run_cli(capsys, "pair-ip", "--a=1,0", "--b=1,1")
    assert code == 0
    payload = report["payload"]
    assert payload["gram"] == [["1", "-1"], ["-1", "2"]]
    assert payload["pair_inner_product"] == "0"
    assert payload["coordinates_solver"] == payload["coordinates_formula"]


def test_pair_ip_identity_fixture(capsys):
    code, report, _ = run_cli(capsys, "pair-ip", "--a=1,0", "--b=0,1")
    assert code == 0
    assert report["payload"]["gram"] == [["1", "0"], ["0", "1"]]


def test_pair_ip_dependent_pair_is_usage_error(capsys):
    code, report, err = run_cli(capsys, "pair-ip", "--a=1,0", "--b=2,0")
    assert code == 2
    assert "dependent" in err


def test_pair_ip_wrong_dimension(capsys):
    code, _, err = run_cli(capsys, "pair-ip", "--a=1,0,0", "--b=0,1,0")
    assert code == 2
    assert "2-dimensional" in err


def test_bad_gram_file_is_usage_error(capsys, tmp_path):
    path = tmp_path / "gram.json"
    path.write_text('[["1","2"],["2","1"]]', encoding="utf-8")
    code, _, err = run_cli(capsys, "equivalence", "--gram", str(path))
    assert code == 2
    assert "minor" in err


def test_gram_file_feeds_the_run(capsys, tmp_path):
    path = tmp_path / "gram.json"
    path.write_text('[["2","0"],["0","3"]]', encoding="utf-8")
    code, report, _ = run_cli(capsys, "equivalence", "--gram", str(path))
    assert code == 0
    assert report["payload"]["failures"] == 0
    assert report["config"]["gram"] == str(path)


def test_env_seed_override(capsys, monkeypatch):
    monkeypatch.setenv("ORTHO_SEED", "123")
    code, report, _ = run_cli(capsys, "equivalence", "--seed", "7")
    assert code == 0
    assert report["config"]["seed"] == 123
    monkeypatch.setenv("ORTHO_SEED", "xyz")
    code, report, err = run_cli(capsys, "equivalence")
    assert code == 2
    assert "ORTHO_SEED" in err


def test_output_flag_writes_file(capsys, tmp_path):
    out = tmp_path / "report.json"
    code, printed, _ = run_cli(capsys, "equivalence", "--output", str(out))
    assert code == 0
    assert printed is None
    report = json.loads(out.read_text(encoding="utf-8"))
    assert report["command"] == "equivalence"


def test_invalid_config_rejected(capsys):
    code, _, err = run_cli(capsys, "equivalence", "--m", "5", "--dim", "3")
    assert code == 2
    assert "2 <= m <= dim" in err
    code, _, err = run_cli(capsys, "equivalence", "--bound", "0")
    assert code == 2
    code, _, err = run_cli(capsys, "equivalence", "--frames", "-1")
    assert code == 2


def test_unknown_command_is_usage_error(capsys):
    assert main(["nonsense"]) == 2


def test_report_round_trips_exactly(capsys):
    from orthocheck.serialize import canonical_dumps

    code = main(["factor", "--frames", "2", "--points", "2"])
    text = capsys.readouterr().out.strip()
    assert code == 0
    assert canonical_dumps(json.loads(text)) == text


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "orthocheck", "equivalence", "--frames", "1"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    report = json.loads(proc.stdout)
    assert report["payload"]["trials"] == 4
