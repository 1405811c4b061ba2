"""Command line: subcommands, formats, exit codes."""

import csv
import io
import json

import pytest

from topogame.cli import main
from topogame.space import space_from_json
from topogame.spacegen import discrete, sierpinski, space_id


@pytest.fixture()
def sierp_file(tmp_path):
    path = tmp_path / "sierpinski.json"
    path.write_text(
        json.dumps({"version": 1, "points": 2, "preorder": [[1, 1], [0, 1]]})
    )
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gen_named(tmp_path, capsys):
    out = tmp_path / "s.json"
    code, _, _ = run(capsys, "gen", "--named", "sierpinski", "--out", str(out))
    assert code == 0
    doc = json.loads(out.read_text())
    assert space_from_json(doc) == sierpinski()
    assert doc["id"] == space_id(sierpinski())


def test_gen_random_metadata(tmp_path, capsys):
    out = tmp_path / "r.json"
    code, _, _ = run(
        capsys, "gen", "--n", "5", "--density", "0.3", "--seed", "42", "--out", str(out)
    )
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["meta"]["seed"] == 42
    assert doc["meta"]["algorithm"]
    space_from_json(doc)


def test_gen_enumerate(tmp_path, capsys):
    out = tmp_path / "catalog.jsonl"
    code, _, _ = run(capsys, "gen", "--enumerate", "--n", "3", "--out", str(out))
    assert code == 0
    lines = out.read_text().strip().splitlines()
    assert len(lines) == 29
    assert all("id" in json.loads(line) for line in lines)


def test_invariants_subcommand(sierp_file, capsys):
    code, out, _ = run(capsys, "invariants", "--space", sierp_file)
    assert code == 0
    doc = json.loads(out)
    assert doc["wl_degree"] == 1 and doc["pi_weight"] == 1


def test_solve_subcommand(sierp_file, capsys):
    code, out, _ = run(
        capsys, "solve", "--space", sierp_file, "--kind", "sel-o-od",
        "--horizon", "1", "--verify",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["winner"] == "two" and doc["verified"] is True


def test_horizon_subcommand_matches_spec_example(sierp_file, capsys):
    code, out, _ = run(
        capsys, "horizon", "--space", sierp_file, "--kind", "oo",
        "--player", "one", "--max", "4",
    )
    assert code == 0
    assert out.strip() == "1"


def test_horizon_none_at_cap(tmp_path, capsys):
    path = tmp_path / "d3.json"
    from topogame.space import space_to_json

    path.write_text(json.dumps(space_to_json(discrete(3))))
    code, out, _ = run(
        capsys, "horizon", "--space", str(path), "--kind", "sel-o-od",
        "--player", "two", "--max", "2",
    )
    assert code == 0
    assert out.strip() == "none@2"


def test_duality_verify_subcommand(tmp_path, capsys):
    out = tmp_path / "report.json"
    code, _, _ = run(
        capsys, "duality-verify", "--n", "2", "--max-h", "2", "--out", str(out)
    )
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["all_verified"] is True
    assert all(r["verified"] for r in doc["results"])
    names = {r["construction"] for r in doc["results"]}
    assert len(names) == 7


def test_census_csv(tmp_path, capsys):
    out = tmp_path / "census3.csv"
    code, _, err = run(
        capsys, "census", "--n", "3", "--max-h", "3", "--out", str(out)
    )
    assert code == 0, err
    rows = list(csv.DictReader(io.StringIO(out.read_text())))
    assert len(rows) == 29
    assert rows[0]["space_id"]
    for row in rows:
        assert row["wl_degree"] == row["h_two_SelOOD"] == row["h_one_PointOpen"]
        assert row["h_two_SelCOD"] == row["h_two_SelODOD"] == row["h_one_OpenOpen"]
        assert int(row["h_two_SelODOD"]) <= int(row["cellularity"])


def test_census_json_lines(tmp_path, capsys):
    out = tmp_path / "census2.json"
    code, _, _ = run(capsys, "census", "--n", "2", "--max-h", "2", "--out", str(out))
    assert code == 0
    lines = out.read_text().strip().splitlines()
    assert len(lines) == 4
    assert all("space_id" in json.loads(line) for line in lines)


def test_census_parallel_matches_serial(tmp_path, capsys):
    serial = tmp_path / "serial.csv"
    parallel = tmp_path / "parallel.csv"
    run(capsys, "census", "--n", "2", "--max-h", "2", "--out", str(serial))
    run(
        capsys, "census", "--n", "2", "--max-h", "2", "--workers", "2",
        "--out", str(parallel),
    )
    assert serial.read_text() == parallel.read_text()


def test_resource_cap_exit_code(tmp_path, capsys):
    path = tmp_path / "d5.json"
    from topogame.space import space_to_json

    path.write_text(json.dumps(space_to_json(discrete(5))))
    code, _, err = run(
        capsys, "solve", "--space", str(path), "--kind", "sel-od-od",
        "--horizon", "1", "--mode", "full",
    )
    assert code == 3
    assert "resource-cap" in err


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["solve", "--kind", "oo"])
    assert exc.value.code == 2


def test_missing_file_is_usage_error(capsys):
    code, _, err = run(
        capsys, "invariants", "--space", "/nonexistent/space.json"
    )
    assert code == 2


def test_play_scripted_session(sierp_file, capsys, monkeypatch):
    # human plays as two in open-open at horizon 1; only one legal reply
    monkeypatch.setattr("sys.stdin", io.StringIO("0\n"))
    code, out, _ = run(
        capsys, "play", "--space", sierp_file, "--kind", "oo",
        "--horizon", "1", "--human", "two",
    )
    assert code == 0
    assert "game over: player one wins" in out


def test_solve_show_strategy(sierp_file, capsys):
    code, out, _ = run(
        capsys, "solve", "--space", sierp_file, "--kind", "oo",
        "--horizon", "1", "--show-strategy",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["winner"] == "one"
    assert any("move" in entry for entry in doc["strategy_table"])


def test_horizon_max_h_alias(sierp_file, capsys):
    code, out, _ = run(
        capsys, "horizon", "--space", sierp_file, "--kind", "oo",
        "--player", "one", "--max-h", "4",
    )
    assert code == 0
    assert out.strip() == "1"


def test_play_records_transcript(sierp_file, tmp_path, capsys, monkeypatch):
    record = tmp_path / "played.jsonl"
    monkeypatch.setattr("sys.stdin", io.StringIO("0\n"))
    code, _, _ = run(
        capsys, "play", "--space", sierp_file, "--kind", "oo",
        "--horizon", "1", "--human", "two", "--record", str(record),
    )
    assert code == 0
    doc = json.loads(record.read_text().strip())
    assert doc["winner"] == "one" and doc["horizon"] == 1
