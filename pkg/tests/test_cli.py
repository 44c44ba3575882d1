import json
from pathlib import Path

import jsonschema
import pytest

from h2origami.cli import main
from h2origami.export import census_rows, census_to_json, rows_from_csv, rows_from_json, rows_to_csv
from h2origami.orbits import classify_census

SCHEMA = json.loads((Path(__file__).parent.parent / "docs" / "census.schema.json").read_text())


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_census_json_n5(capsys):
    code, out, _ = run(capsys, "-q", "census", "--n", "5", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    jsonschema.validate(doc, SCHEMA)
    assert [(r["orbit_label"], r["size"]) for r in doc["rows"]] == [("A", 18), ("B", 9)]


def test_census_csv_n3(capsys):
    code, out, _ = run(capsys, "-q", "census", "--n", "3", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].split(",")[:3] == ["n", "orbit_label", "size"]
    assert len(lines) == 2
    (row,) = rows_from_csv(out)
    assert (row.num_cusps, row.cusp_widths, row.e2, row.genus) == (2, (1, 2), 1, 0)
    assert '"1 2"' in lines[1]


def test_census_below_minimum(capsys):
    code, _, err = run(capsys, "census", "--n", "2")
    assert code == 1
    assert "at least 3" in err


def test_census_out_file(tmp_path, capsys):
    path = tmp_path / "c.json"
    assert main(["-q", "census", "--n", "7", "--out", str(path)]) == 0
    assert capsys.readouterr().out == ""
    jsonschema.validate(json.loads(path.read_text()), SCHEMA)


def test_census_output_deterministic_across_workers(capsys):
    outs = set()
    for w in ("1", "2", "8"):
        code, out, _ = run(capsys, "-q", "census", "--n", "11", "--workers", w)
        assert code == 0
        outs.add(out)
    assert len(outs) == 1


def test_json_and_csv_round_trip():
    for n in (4, 5, 9):
        rows = census_rows(classify_census(n))
        assert rows_from_json(census_to_json(classify_census(n))) == rows
        assert rows_from_csv(rows_to_csv(rows)) == rows


def test_orbit_text(capsys):
    code, out, _ = run(capsys, "orbit", "--n", "5", "--seed", "onecyl:1,1,3:0")
    assert code == 0
    assert "orbit size = 18" in out
    assert "invariant = 1" in out
    assert "cusps = 5" in out


def test_orbit_dot(tmp_path, capsys):
    dot = tmp_path / "g.dot"
    code, _, _ = run(capsys, "orbit", "--n", "3", "--seed", "onecyl:1,1,1:0", "--dot", str(dot))
    assert code == 0
    text = dot.read_text()
    assert text.count("[label=\"onecyl") + text.count("[label=\"twocyl") == 3


def test_orbit_json_validates(capsys):
    code, out, _ = run(capsys, "orbit", "--n", "5", "--seed", "onecyl:1,2,2:0", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    orbit_schema = {"$defs": SCHEMA["$defs"], "$ref": "#/$defs/orbit"}
    jsonschema.validate(doc, orbit_schema)
    assert doc["size"] == 9
    assert doc["invariant"] == 3
    assert len(doc["surfaces"]) == 9


def test_orbit_verbose_lists_one_based_squares(capsys):
    code, out, _ = run(capsys, "orbit", "--n", "3", "--seed", "onecyl:1,1,1:0", "-v")
    assert code == 0
    assert "r=(1 2 3)" in out
    assert "(0" not in out


@pytest.mark.parametrize("seed", ["onecyl:1,1,2:0", "onecyl:1,1", "twocyl:1,1,2,2,0,0", "twocyl:1,1,2,4,0,0:x"])
def test_orbit_bad_seed(capsys, seed):
    code, _, err = run(capsys, "orbit", "--n", "5", "--seed", seed)
    assert code == 1
    assert "error" in err


def test_orbit_non_primitive_seed(capsys):
    code, _, err = run(capsys, "orbit", "--n", "6", "--seed", "twocyl:1,1,2,4,0,0")
    assert code == 1
    assert "primitive" in err


def test_surfaces(capsys):
    code, out, _ = run(capsys, "surfaces", "--n", "6")
    assert code == 0
    assert len(out.strip().splitlines()) == 45
    code, out, _ = run(capsys, "surfaces", "--n", "6", "--primitive-only")
    assert len(out.strip().splitlines()) == 36


def test_verify_prime_filter(capsys):
    code, out, _ = run(capsys, "-q", "verify", "--primes", "4..6")
    assert code == 0
    assert "primes checked: [5]" in out
    assert "n=7" not in out


def test_verify_with_oracles(capsys):
    code, out, _ = run(capsys, "-q", "verify", "--primes", "5..7", "--brute-max", "6",
                       "--involution-max", "8", "--random-count", "20")
    assert code == 0
    assert "0 failures" in out
    assert "FAIL" not in out


@pytest.mark.parametrize("argv", [
    ["verify", "--primes", "x..y"],
    ["verify", "--primes", "9..5"],
    ["verify", "--brute-max", "9"],
    ["census"],
    ["frobnicate"],
])
def test_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) as e:
        code = main(argv)
        raise SystemExit(code)
    assert e.value.code == 1


def test_version(capsys):
    with pytest.raises(SystemExit) as e:
        main(["--version"])
    assert e.value.code == 0
    assert capsys.readouterr().out.strip() == "0.1.0"
