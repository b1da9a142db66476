import json
import pathlib

import pytest

from galorb.chartab import fixture_table, serialize_table
from galorb.cli import main

ROOT = pathlib.Path(__file__).resolve().parent.parent
DATA = ROOT / "data"
TABLES = ROOT / "src" / "galorb" / "tables"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_analyze_perm_text(capsys):
    code, out, _ = run(capsys, "analyze-perm", str(DATA / "a5.gens"))
    assert code == 0
    assert "central rank     1" in out
    assert "longest family   2" in out
    assert "{5A, 5B}" in out


def test_analyze_perm_json(capsys):
    code, out, _ = run(capsys, "analyze-perm", str(DATA / "c5.gens"),
                       "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj["rank"] == 1 and obj["f"] == 4
    assert obj["family_labels"][-1] == ["5A", "5B", "5C", "5D"]


def test_analyze_table_with_crosscheck(capsys):
    code, out, _ = run(capsys, "analyze-table", str(TABLES / "a5.json"),
                       "--gens", str(DATA / "a5.gens"))
    assert code == 0
    assert "cross-check      PASS" in out


def test_analyze_table_crosscheck_failure_exits_2(capsys, tmp_path):
    t = fixture_table("c5")
    perm = (0, 2, 1, 3, 4)
    obj = json.loads(serialize_table(t))
    obj["irr"] = [[row[p] for p in perm] for row in obj["irr"]]
    obj["class_sizes"] = [obj["class_sizes"][p] for p in perm]
    obj["class_orders"] = [obj["class_orders"][p] for p in perm]
    bad = tmp_path / "bad_c5.json"
    bad.write_text(json.dumps(obj))
    code, out, _ = run(capsys, "analyze-table", str(bad),
                       "--gens", str(DATA / "c5.gens"))
    assert code == 2
    assert "FAIL" in out and "MISMATCH" in out


def test_an_rank_range(capsys):
    code, out, _ = run(capsys, "an-rank", "5..13")
    assert code == 0
    ranks = [int(line.split()[1]) for line in out.splitlines()[1:]]
    assert ranks == [1, 1, 0, 0, 0, 1, 1, 0, 1]


def test_an_rank_single_with_injection(capsys):
    code, out, _ = run(capsys, "an-rank", "26", "--format", "json")
    assert code == 0
    row = json.loads(out)["rows"][0]
    assert row["rank"] == 5
    assert row["injection"]["count"] == 1
    assert (row["injection"]["p"], row["injection"]["k"]) == (17, 2)


def test_an_rank_bad_inputs(capsys):
    code, _, err = run(capsys, "an-rank", "7..5")
    assert code == 2 and "range" in err
    code, _, err = run(capsys, "an-rank", "x")
    assert code == 2
    code, _, err = run(capsys, "an-rank", "500")
    assert code == 4


def test_screen_family(capsys):
    code, out, _ = run(capsys, "screen", "POmegaMinus", "--format", "json")
    assert code == 0
    res = json.loads(out)["results"][0]
    assert res["certified"]
    assert [(e["n"], e["q"]) for e in res["exceptions"]] == [(8, 2), (10, 2), (12, 2)]


def test_screen_uncertified_exits_3(capsys):
    code, out, _ = run(capsys, "screen", "PSL", "--box", "2,8")
    assert code == 3
    assert "NOT certified" in out


def test_screen_unknown_family(capsys):
    code, _, err = run(capsys, "screen", "Foo")
    assert code == 2 and "unknown family" in err


def test_charpoly_singer(capsys):
    code, out, _ = run(capsys, "charpoly", "singer", "4", "2")
    assert code == 0
    assert "element order    15" in out
    assert "charpoly count   2" in out


def test_charpoly_file_found_and_not_found(capsys):
    code, out, _ = run(capsys, "charpoly", "file", str(DATA / "gl2_3.json"),
                       "--target", "8")
    assert code == 0 and "element order    8" in out
    code, _, err = run(capsys, "charpoly", "file", str(DATA / "gl2_3.json"),
                       "--target", "7")
    assert code == 3 and "no element of order 7" in err


def test_charpoly_bound(capsys):
    code, out, _ = run(capsys, "charpoly", "bound", "16", "3", "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj["class_bound"] == 5 and obj["at_least_five"]


def test_missing_file_exits_2(capsys):
    code, _, err = run(capsys, "analyze-perm", str(DATA / "nope.gens"))
    assert code == 2 and "cannot read" in err


def test_resource_guard_exits_4(capsys):
    code, _, err = run(capsys, "analyze-perm", str(DATA / "a5.gens"),
                       "--max-order", "10")
    assert code == 4 and "resource" in err


def test_out_flag_writes_file(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, out, _ = run(capsys, "analyze-table", str(TABLES / "q8.json"),
                       "--format", "json", "--out", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["cut_by_fields"] is True


def test_byte_identical_repeats(capsys):
    outs = set()
    for _ in range(2):
        code, out, _ = run(capsys, "analyze-perm", str(DATA / "a5.gens"),
                           "--format", "json", "--seed", "3")
        assert code == 0
        outs.add(out)
    assert len(outs) == 1
    for _ in range(2):
        code, out, _ = run(capsys, "screen", "PSp", "--format", "json")
        assert code == 0
        outs.add(out)
    assert len(outs) == 2
