import io
import json
import pathlib
import subprocess
import sys

import pytest

from hodgeloci.cli import main, parse_n_list

GOLDEN = pathlib.Path(__file__).parent / "golden"


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), stdout=out)
    return code, out.getvalue()


def run_json(*argv):
    code, text = run(*argv)
    assert code == 0, text
    assert text.endswith("\n")
    doc = json.loads(text)
    assert doc["schema"] == "1"
    return doc


@pytest.mark.parametrize("argv,golden", [
    (["table", "--n", "4..12", "--format", "md"], "table.md"),
    (["table", "--n", "4..12", "--format", "csv"], "table.csv"),
    (["table", "--n", "4", "--format", "json"], "table_n4.json"),
    (["tangent", "-n", "6", "--r", "1", "--rr", "1"], "tangent_n6.json"),
])
def test_golden_outputs(argv, golden):
    code, text = run(*argv)
    assert code == 0
    assert text == (GOLDEN / golden).read_text()


def test_table_json_row():
    doc = run_json("table", "--n", "4", "--format", "json")
    assert (doc["n"], doc["dimT"], doc["L"], doc["M"]) == (4, 20, 1, 1)
    assert doc["provenance"]["CS"] == "stored constant"


def test_table_out_of_range_row_has_null_stored_columns():
    doc = run_json("table", "--n", "14")
    assert doc["CS"] is None and doc["QS"] is None and doc["V"] is None
    assert doc["provenance"]["CS"] == "unavailable"


def test_table_several_rows():
    doc = run_json("table", "--n", "6,8")
    assert [r["n"] for r in doc["rows"]] == [6, 8]


def test_md_header_follows_column_order():
    _, text = run("table", "--n", "6", "--format", "md")
    assert text.splitlines()[0] == (
        "| n | dim(T) | range of codimensions | L | CS | M | QS | V | Hodge numbers |")


def test_parse_n_list():
    assert parse_n_list("4..12") == [4, 6, 8, 10, 12]
    assert parse_n_list("5..9") == [6, 8]
    assert parse_n_list("4, 6") == [4, 6]


def test_hodge_numbers():
    doc = run_json("hodge-numbers", "-n", "6", "-d", "3")
    assert doc["hodge"] == [0, 0, 8, 71, 8, 0, 0]


def test_tangent():
    doc = run_json("tangent", "-n", "6", "--r", "1", "--rr", "1")
    assert (doc["dim_TV_Z_codim"], doc["dim_TV_[Z]_codim"], doc["difference"]) == (8, 7, 1)


def test_fano():
    assert run_json("fano", "-n", "10", "-k", "4")["delta"] == 0
    doc = run_json("fano", "-n", "4", "-k", "1", "-r", "2", "--degrees", "2,2")
    assert doc["delta"] == 4 and doc["d"] == [2, 2]


def test_colon():
    doc = run_json("colon", "--ideal", "x0^2,x1^2,x2^2,x3^2", "--poly", "x0*x1 - x2*x3",
                   "--hilbert", "4", "--degree", "1", "--basis")
    assert doc["hilbert"] == [1, 4, 1, 0, 0] and doc["symmetric"]
    assert doc["dim"] == 0 and doc["basis"] == []


def test_singular_cubic():
    doc = run_json("singular-cubic", "--f", "x0*x1*x2 + x1^3 + x2^3 + x3^3")
    assert doc["classification"] == "birational" and doc["pullback_is_zero"]
    doc = run_json("singular-cubic", "--f", "x1^3 + x2^3 + x3^3", "--nvars", "4")
    assert doc["classification"] == "cone" and "birational_map" not in doc
    doc = run_json("singular-cubic", "--f", "x0*x2^2 + x1*x3^2", "--p", "1,0,0,0", "--q", "0,1,0,0")
    assert doc["line_through_p_q_in_X"] is True


def test_kloosterman_fermat():
    doc = run_json("kloosterman", "-n", "6", "--stacked")
    assert (doc["rank"], doc["stacked_rank"], doc["expected"]) == (7, 8, 7)
    assert doc["provenance"]["rank"] == "computed"
    assert "wall_time_ms" not in doc
    assert "wall_time_ms" in run_json("kloosterman", "-n", "6", "--timing")


def test_kloosterman_output_independent_of_threads():
    outs = {run("kloosterman", "-n", "8", "--a", "2", "--b", "3", "--stacked", "--threads", str(t))
            for t in (1, 2, 3)}
    assert len(outs) == 1 and next(iter(outs))[0] == 0


def test_kloosterman_random_is_deterministic():
    a = run("kloosterman", "-n", "6", "--source", "random", "--seed", "2", "--route", "dual")
    b = run("kloosterman", "-n", "6", "--source", "random", "--seed", "2", "--route", "dual")
    assert a == b and a[0] == 0
    assert json.loads(a[1])["rank"] == 7


def test_exit_codes(capsys):
    # mathematical failure
    assert run("kloosterman", "-n", "6", "--source", "kloosterman")[0] == 1
    assert run("singular-cubic", "--f", "x0^3 + x1^3 + x2^3")[0] == 1
    # usage errors
    assert run("kloosterman", "-n", "10")[0] == 2
    assert run("kloosterman", "-n", "7")[0] == 2
    assert run("tangent")[0] == 2
    assert run("table", "--format", "xml")[0] == 2
    assert run("colon", "--ideal", "x0", "--poly", "x0")[0] == 2
    assert run("colon", "--ideal", "x0 +", "--poly", "x0", "--degree", "1")[0] == 2
    assert run("hodge-numbers", "-n", "5")[0] == 2
    assert run("nonsense")[0] == 2
    capsys.readouterr()


def test_console_entry_point():
    r = subprocess.run([sys.executable, "-m", "hodgeloci", "hodge-numbers", "-n", "4"],
                       capture_output=True, text=True)
    assert r.returncode == 0
    assert json.loads(r.stdout)["hodge"] == [0, 1, 21, 1, 0]
    r = subprocess.run([sys.executable, "-m", "hodgeloci", "kloosterman", "-n", "10"],
                       capture_output=True, text=True)
    assert r.returncode == 2 and "--long-running" in r.stderr
