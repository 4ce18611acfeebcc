import csv
import io
import json

import pytest

from probid.cli import main
from probid.identities import FAMILIES


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


def strip_elapsed(report):
    for v in report["verdicts"]:
        v.pop("elapsed_ms")
    return report


def test_pair_convolution_sweep(tmp_path, capsys):
    out = tmp_path / "r.json"
    code, _ = run(["verify", "--family", "pair-convolution", "--n-max", "100", "--json", str(out)], capsys)
    report = json.loads(out.read_text())
    assert code == 0
    assert report["summary"] == {"pass": 101, "fail": 0, "unsupported": 0}
    assert [v["params"]["n"] for v in report["verdicts"]] == [str(n) for n in range(101)]


def test_invalid_range_is_usage_error(capsys):
    assert main(["verify", "--family", "brychkov", "--n-max", "-1"]) == 2


@pytest.mark.parametrize("argv", [
    ["verify", "--family", "no-such-family"],
    ["verify", "--a", "0.5"],
    ["verify", "--precision", "32"],
    ["verify", "--tol", "-1"],
    ["verify", "--m-max", "9"],
    ["mc", "--samples", "10"],
    ["bogus"],
])
def test_usage_errors(argv, capsys):
    assert main(argv) == 2


def test_all_families_json_schema(tmp_path, capsys):
    out = tmp_path / "all.json"
    assert main(["verify", "--all", "--n-max", "12", "--json", str(out)]) == 0
    report = json.loads(out.read_text())
    assert set(report) == {"version", "config", "verdicts", "summary"}
    keys = {"family", "params", "engine", "lhs", "rhs", "status", "abs_err", "rel_err", "elapsed_ms"}
    assert all(keys <= set(v) for v in report["verdicts"])
    assert {v["family"] for v in report["verdicts"]} == set(FAMILIES)
    assert report["summary"]["fail"] == 0


def test_failing_verdict_gives_exit_1(capsys):
    # forcing the quad engine on p = 5 yields unsupported verdicts, which are not passes
    assert main(["verify", "--family", "legendre-filter", "--p-set", "5", "--n-max", "2", "--engine", "quad"]) == 1


def test_default_smoke_grid(capsys):
    code, out = run(["verify"], capsys)
    assert code == 0 and "0 fail" in out


def test_csv_matches_json(tmp_path, capsys):
    j, c = tmp_path / "r.json", tmp_path / "r.csv"
    assert main(["verify", "--family", "gegenbauer-filter,hermite-multinomial", "--n-max", "3",
                 "--json", str(j), "--csv", str(c)]) == 0
    verdicts = json.loads(j.read_text())["verdicts"]
    rows = list(csv.DictReader(io.StringIO(c.read_text())))
    assert len(rows) == len(verdicts)
    for row, v in zip(rows, verdicts):
        for key, value in v.items():
            cell = row[key]
            if value is None:
                assert cell == ""
            elif isinstance(value, str):
                assert cell == value
            else:
                assert json.loads(cell) == value


def test_order_independent_of_jobs(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    argv = ["verify", "--family", "legendre-filter,chu-vandermonde", "--n-max", "6", "--p-set", "1,2,5"]
    assert main(argv + ["--json", str(a)]) == 0
    assert main(argv + ["--jobs", "3", "--json", str(b)]) == 0
    ra, rb = strip_elapsed(json.loads(a.read_text())), strip_elapsed(json.loads(b.read_text()))
    assert ra["verdicts"] == rb["verdicts"]


def test_mc_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["mc", "--seed", "7", "--samples", "20000", "--json", str(a)]) == 0
    assert main(["mc", "--seed", "7", "--samples", "20000", "--json", str(b)]) == 0
    ra, rb = json.loads(a.read_text()), json.loads(b.read_text())
    assert ra["config"]["seed"] == 7
    assert json.dumps(strip_elapsed(ra)) == json.dumps(strip_elapsed(rb))


def test_env_override(tmp_path, capsys, monkeypatch):
    out = tmp_path / "env.json"
    monkeypatch.setenv("PROBID_N_MAX", "5")
    monkeypatch.setenv("PROBID_FAMILY", "brychkov")
    monkeypatch.setenv("PROBID_JSON", str(out))
    assert main(["verify"]) == 0
    report = json.loads(out.read_text())
    assert len(report["verdicts"]) == 6
    # the command line still wins
    assert main(["verify", "--n-max", "2"]) == 0
    assert len(json.loads(out.read_text())["verdicts"]) == 3


def test_list(capsys):
    code, out = run(["list"], capsys)
    assert code == 0 and "brychkov" in out and "entry 4.2.5.74" in out
    code, out = run(["list", "--families", "--json"], capsys)
    rows = json.loads(out)
    assert len(rows) == 12
    assert {"name", "anchor", "statement", "params"} <= set(rows[0])
