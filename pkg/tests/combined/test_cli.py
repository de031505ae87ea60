import json

import pytest
from conftest import write_scenario

from pdsets.cli import cli


def run(argv) -> int:
    with pytest.raises(SystemExit) as e:
        cli(argv)
    return e.value.code


def test_repro_all(capsys):
    assert run(["repro", "all"]) == 0
    assert "matches" in capsys.readouterr().out


def test_repro_unknown_item():
    assert run(["repro", "no-such-item"]) == 1


def test_verify_builtin_scenario_finds_violation():
    assert run(["verify", "dihedral"]) == 2


def test_verify_writes_json(tmp_path):
    path = write_scenario(
        tmp_path,
        """
        structure: Z5
        verify:
          - nonabelian:
              sets: [[0, 1], [0, 2]]
        """,
    )
    out = tmp_path / "out" / "result.json"
    assert run(["verify", str(path), "--json", str(out), "--seed", "4"]) == 0
    data = json.loads(out.read_text(encoding="utf-8"))
    assert data["command"] == "verify"
    assert data["seed"] == 4
    assert data["verdicts"][0]["statement"] == "nonabelian"
    assert data["summary"]["holds"] == 1


def test_jsonl_format(tmp_path, capsys):
    path = write_scenario(tmp_path, "verify:\n  - entropy-4sets\n")
    assert run(["verify", "-F", "jsonl", str(path)]) == 2
    lines = capsys.readouterr().out.strip().splitlines()
    events = [json.loads(line)["type"] for line in lines]
    assert events[0] == "START"
    assert events[-1] == "END"
    assert "VERDICT" in events


def test_search_scenario(tmp_path):
    path = write_scenario(
        tmp_path,
        """
        seed: 2
        search:
          - naive-pairwise:
              max_size: 1
              exhaustive: true
        """,
    )
    assert run(["search", str(path), "--threads", "2"]) == 0


def test_check(tmp_path, capsys):
    assert run(["check", "abelian"]) == 0
    assert "No problems found" in capsys.readouterr().out

    broken = write_scenario(tmp_path, "verify:\n  - no-such-statement\n")
    assert run(["check", str(broken)]) == 1


def test_missing_scenario():
    assert run(["verify", "this-scenario-does-not-exist"]) == 1


def test_invalid_options():
    assert run(["search", "dihedral", "--threads", "0"]) == 1


def test_info(capsys):
    assert run(["info", "dihedral", "4"]) == 0
    out = capsys.readouterr().out
    assert "D4" in out
    assert "8" in out

    assert run(["info", "--table", "ZZ3"]) == 0
    assert "ring 3" in capsys.readouterr().out


def test_info_table_file(tmp_path, capsys):
    table = tmp_path / "klein.txt"
    table.write_text("group 4\n0 1 2 3\n1 0 3 2\n2 3 0 1\n3 2 1 0\n", encoding="utf-8")
    assert run(["info", str(table)]) == 0
    assert "klein" in capsys.readouterr().out


def test_unknown_structure():
    assert run(["info", "Q9"]) == 1


def test_list(capsys):
    assert run(["list"]) == 0
    out = capsys.readouterr().out
    assert "naive-pairwise" in out
    assert "dihedral-triple" in out
