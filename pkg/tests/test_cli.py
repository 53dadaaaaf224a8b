"""CLI subcommands, formats, batch input, witness files, and exit codes."""

from __future__ import annotations

import json
import subprocess
import sys
from pathlib import Path

import pytest

from groupgraphs import cli, graphs, groups, powergraph
from groupgraphs.cli import main, parse_group_spec


def run(capsys, *argv: str) -> tuple[int, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


def test_parse_group_spec_atoms() -> None:
    assert parse_group_spec("Z6").order == 6
    assert parse_group_spec("D4").order == 8
    assert parse_group_spec("S3").order == 6
    assert parse_group_spec("A4").order == 12
    assert parse_group_spec("Q8").order == 8
    assert parse_group_spec("Dic3").order == 12


def test_parse_group_spec_products() -> None:
    group = parse_group_spec("Z2xZ6")
    assert group.order == 12
    assert group.name == "Z2xZ6"
    assert group.is_abelian()
    triple = parse_group_spec("Z2xZ2xZ2")
    assert triple.order == 8
    assert all(triple.element_order(g) <= 2 for g in range(8))


def test_parse_group_spec_rejects_garbage() -> None:
    for bad in ("", "Zx", "xZ2", "Z2x", "Q16", "B5", "Z2yZ3"):
        with pytest.raises(ValueError):
            parse_group_spec(bad)


def test_parse_group_spec_order_limit() -> None:
    with pytest.raises(ValueError):
        parse_group_spec("S8")


def test_power_graph6_output(capsys) -> None:
    code, out = run(capsys, "power", "--group", "Z4")
    assert code == 0
    assert out.strip() == "C~"  # pg(Z4) is K_4


def test_power_directed_output(capsys) -> None:
    code, out = run(capsys, "power", "--group", "Z4", "--directed")
    assert code == 0
    assert out.strip() == "&CAww"
    decoded = graphs.from_digraph6(out.strip())
    assert decoded == powergraph.directed_power_graph(groups.cyclic(4))


def test_power_table_format(capsys) -> None:
    code, out = run(capsys, "power", "--group", "Z2", "--format", "table")
    assert code == 0
    assert out.splitlines() == ["2", "0 1", "1 0"]


def test_power_json_format(capsys) -> None:
    code, out = run(capsys, "power", "--group", "Z6", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["order"] == 6
    assert payload["directed"] is False
    assert [0, 1] in payload["edges"]


def test_power_dot_format(capsys) -> None:
    code, out = run(capsys, "power", "--group", "S3", "--format", "dot")
    assert code == 0
    assert out.startswith("graph {")
    assert 'label="(0 1 2)"' in out


def test_cayley_subcommand(capsys) -> None:
    code, out = run(capsys, "cayley", "--group", "Z4", "--set", "1,3")
    assert code == 0
    cycle = graphs.from_graph6(out.strip())
    assert cycle.degree_sequence() == [2, 2, 2, 2]


def test_cayley_rejects_non_inverse_closed(capsys) -> None:
    code = main(["cayley", "--group", "Z5", "--set", "1"])
    captured = capsys.readouterr()
    assert code == 2
    assert "inverse" in captured.err


def test_cayley_directed_allows_non_inverse_closed(capsys) -> None:
    code, out = run(capsys, "cayley", "--group", "Z5", "--set", "1", "--directed")
    assert code == 0
    assert out.startswith("&")


def test_cayley_empty_set(capsys) -> None:
    code, out = run(capsys, "cayley", "--group", "Z3", "--set", "")
    assert code == 0
    assert graphs.from_graph6(out.strip()).is_edgeless()


def test_aut_from_group(capsys) -> None:
    code, out = run(capsys, "aut", "--group", "S3")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "graph 0: order 6, 12 automorphisms"
    assert len(lines) == 13


def test_aut_json_from_file(capsys, tmp_path: Path) -> None:
    infile = tmp_path / "graphs.g6"
    infile.write_text("C~\nA_\n", encoding="ascii")
    code, out = run(capsys, "aut", "--in", str(infile), "--format", "json")
    assert code == 0
    records = [json.loads(line) for line in out.splitlines()]
    assert [r["count"] for r in records] == [24, 2]


def test_aut_respects_bound(capsys) -> None:
    code = main(["aut", "--group", "Z2xZ15"])  # order 30 exceeds the default 16
    captured = capsys.readouterr()
    assert code == 2
    assert "bound" in captured.err.lower()


def test_is_cayley_batch_mixed_formats(capsys, tmp_path: Path) -> None:
    dpg = powergraph.directed_power_graph(groups.cyclic(4))
    infile = tmp_path / "mixed.txt"
    infile.write_text(
        "C~\n" + graphs.to_digraph6(dpg) + "\n>>graph6<<A_\n", encoding="ascii"
    )
    code, out = run(capsys, "is-cayley", "--in", str(infile))
    assert code == 0
    lines = out.splitlines()
    assert "cayley" in lines[0] and "not" not in lines[0]
    assert "not cayley" in lines[1] and "NotRegularDegree" in lines[1]
    assert "cayley" in lines[2] and "not" not in lines[2]


def test_is_cayley_witness_file(capsys, tmp_path: Path) -> None:
    infile = tmp_path / "in.g6"
    infile.write_text("C~\nEse?\n", encoding="ascii")  # K_4 and pg(S3)
    witness_path = tmp_path / "witness.json"
    code, out = run(
        capsys, "is-cayley", "--in", str(infile), "--witness", str(witness_path)
    )
    assert code == 0
    payload = json.loads(witness_path.read_text(encoding="utf-8"))
    assert len(payload) == 2
    assert payload[0]["cayley"] is True
    assert payload[0]["group_order"] == 4
    assert payload[1] is None


def test_is_cayley_json_format(capsys) -> None:
    code, out = run(capsys, "is-cayley", "--group", "Z6", "--format", "json")
    assert code == 0
    record = json.loads(out)
    assert record["cayley"] is False
    assert record["reason"] == "NotRegularDegree"


def test_is_cayley_requires_exactly_one_source() -> None:
    with pytest.raises(SystemExit):
        main(["is-cayley"])
    with pytest.raises(SystemExit):
        main(["is-cayley", "--group", "Z4", "--in", "nope.g6"])


def test_verify_table_output(capsys) -> None:
    code, out = run(capsys, "verify", "--max-order", "8")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("group")
    assert any(line.startswith("Q8") for line in lines)
    assert "order-1 group is exempt" in out


def test_verify_json_output(capsys, tmp_path: Path) -> None:
    outfile = tmp_path / "rows.jsonl"
    code, _ = run(
        capsys, "verify", "--max-order", "12", "--format", "json",
        "--out", str(outfile),
    )
    assert code == 0
    rows = [json.loads(line) for line in outfile.read_text().splitlines()]
    assert len(rows) == 24
    assert all(row["consistent"] for row in rows)


def test_verify_rejects_bad_max_order(capsys) -> None:
    code = main(["verify", "--max-order", "99"])
    captured = capsys.readouterr()
    assert code == 2
    assert "max_order" in captured.err


def test_missing_input_file_is_reported(capsys) -> None:
    code = main(["aut", "--in", "/nonexistent/path.g6"])
    captured = capsys.readouterr()
    assert code == 2
    assert "error" in captured.err


def test_malformed_input_line_is_reported(capsys, tmp_path: Path) -> None:
    infile = tmp_path / "bad.g6"
    infile.write_text("C\n", encoding="ascii")
    code = main(["aut", "--in", str(infile)])
    captured = capsys.readouterr()
    assert code == 2
    assert "error" in captured.err


def test_out_flag_writes_file(capsys, tmp_path: Path) -> None:
    target = tmp_path / "graph.g6"
    code, out = run(capsys, "power", "--group", "Z4", "--out", str(target))
    assert code == 0
    assert out == ""
    assert target.read_text(encoding="utf-8").strip() == "C~"


def test_module_entry_point_subprocess() -> None:
    result = subprocess.run(
        [sys.executable, "-m", "groupgraphs.cli", "verify", "--max-order", "5"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert result.returncode == 0
    assert "Z2xZ2" in result.stdout
