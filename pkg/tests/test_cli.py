import csv
import json
from importlib import resources

import jsonschema
import numpy as np
import pytest

from lpmix import cli
from lpmix.cli import RunConfig, ValidationError, ingest_csv, parse_null, run

from conftest import table_pairs

SCHEMA_COMMANDS = ("moments", "comoments", "gof", "copula", "twosample", "screen", "classify", "quantplot")


def write_csv(path, columns):
    names = list(columns)
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(names)
        for row in zip(*columns.values()):
            w.writerow(row)
    return str(path)


@pytest.fixture
def data_csv(tmp_path, rng):
    n = 200
    a = rng.normal(size=n)
    cols = {
        "a": np.round(a, 6),
        "b": np.round(a + rng.normal(size=n), 6),
        "g": (a + rng.normal(size=n) > 0).astype(int),
        "c": rng.integers(0, 4, n),
        "noise": np.round(rng.normal(size=n), 6),
    }
    return write_csv(tmp_path / "d.csv", cols)


@pytest.fixture
def table_csv(tmp_path):
    x, y = table_pairs([[10, 20], [20, 10]])
    return write_csv(tmp_path / "t.csv", {"a": x, "b": y})


def schema(name):
    text = resources.files("lpmix").joinpath("schemas", f"{name}.schema.json").read_text()
    return json.loads(text)


def invoke(capsys, argv):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_ingest_shapes_and_kinds(tmp_path, rng):
    p = write_csv(tmp_path / "x.csv", {"u": rng.normal(size=100), "v": rng.integers(0, 2, 100)})
    ds = ingest_csv(p)
    assert ds.n_rows == 100 and set(ds.columns) == {"u", "v"}
    assert ds.kinds == {"u": "continuous-sample", "v": "discrete-sample"}
    ds = ingest_csv(p, ["u"], {"u": "discrete"})
    assert ds.kinds == {"u": "discrete-sample"}


def test_ingest_missing_rows(tmp_path):
    vals = [str(i) for i in range(100)]
    other = list(vals)
    vals[3] = ""
    vals[10] = "NA"
    other[50] = "nan"
    p = write_csv(tmp_path / "m.csv", {"u": vals, "v": other, "w": ["x"] * 100})
    with pytest.warns(UserWarning, match="3 rows dropped"):
        ds = ingest_csv(p, ["u", "v"])
    assert ds.n_rows == 97 and ds.dropped == 3


def test_ingest_errors(tmp_path):
    p = write_csv(tmp_path / "e.csv", {"u": ["1", "2", "oops"]})
    with pytest.raises(ValidationError, match="row 3"):
        ingest_csv(p)
    with pytest.raises(ValidationError, match="not found"):
        ingest_csv(p, ["zz"])
    with pytest.raises(ValidationError, match="cannot read"):
        ingest_csv(tmp_path / "absent.csv")
    q = write_csv(tmp_path / "f.csv", {"u": ["", "na"]})
    with pytest.raises(ValidationError, match="no rows"):
        ingest_csv(q)


def test_parse_null():
    assert parse_null("normal(0,1)").kind == "continuous"
    assert parse_null("exponential(2)").cdf(0.5) == pytest.approx(1 - np.exp(-1))
    die = parse_null("die:1-6 uniform")
    np.testing.assert_allclose(die.dist.pmf, 1 / 6)
    d = parse_null("0:.3, 1:.7")
    np.testing.assert_allclose(d.dist.support, [0, 1])
    for bad in ("normal(0)", "uniform(1,0)", "1:.5,2:.6", "die:3-1", "exponential(1,2)", "foo"):
        with pytest.raises(ValidationError):
            parse_null(bad)


def test_parse_null_file(tmp_path):
    p = tmp_path / "null.txt"
    p.write_text("1:.25\n2:.75\n")
    np.testing.assert_allclose(parse_null(f"@{p}").dist.pmf, [0.25, 0.75])


def test_moments_command(capsys, data_csv):
    code, out, _ = invoke(capsys, ["moments", "--input", data_csv, "--col", "a"])
    assert code == 0
    doc = json.loads(out)
    assert {"lp_moments", "tail_index", "quartile_summary"} <= set(doc["result"])
    assert doc["config"]["col"] == "a"


def test_comoments_table_value(capsys, table_csv):
    code, out, _ = invoke(capsys, ["comoments", "--input", table_csv, "--x", "a", "--y", "b", "--rule", "all"])
    assert code == 0
    doc = json.loads(out)
    assert round(doc["result"]["n_lpinfor"], 3) == 6.667
    assert doc["result"]["independence_test"]["statistic"] == pytest.approx(60 / 9, abs=1e-9)


def test_gof_jaynes(capsys):
    code, out, _ = invoke(capsys, ["gof", "--null", "die:1-6 uniform", "--mean", "4.5"])
    assert code == 0
    res = json.loads(out)["result"]
    expect = [1 / 42, 17 / 210, 29 / 210, 41 / 210, 53 / 210, 65 / 210]
    np.testing.assert_allclose(res["p_hat"], expect, atol=1e-11)
    assert res["components"]["se"] is None


def test_gof_pmf_and_sample(capsys, tmp_path):
    code, out, _ = invoke(capsys, ["gof", "--null", "0:.5,1:.5", "--pmf", "0:.9,1:.1"])
    assert code == 0
    np.testing.assert_allclose(json.loads(out)["result"]["p_hat"], [0.9, 0.1], atol=1e-11)
    p = write_csv(tmp_path / "s.csv", {"x": [1, 2, 2, 3, 6, 6, 6, 5]})
    code, out, _ = invoke(capsys, ["gof", "--null", "die:1-6", "--input", p, "--col", "x"])
    assert code == 0 and json.loads(out)["result"]["components"]["statistic"] is not None
    code, out, _ = invoke(capsys, ["gof", "--null", "normal(0,1)", "--input", p, "--col", "x", "--rule", "all"])
    assert code == 0 and json.loads(out)["result"]["kind"] == "continuous"


ARGS = {
    "moments": ["--col", "a"],
    "comoments": ["--x", "a", "--y", "c", "--permutations", "19"],
    "gof": ["--null", "normal(0,1)", "--col", "a"],
    "copula": ["--x", "a", "--y", "b", "--grid", "10"],
    "twosample": ["--col", "a", "--group", "g"],
    "screen": ["--y", "g"],
    "classify": ["--x", "a", "--y", "g"],
    "quantplot": ["--col", "c"],
}


@pytest.mark.parametrize("command", SCHEMA_COMMANDS)
def test_schema_validation(capsys, data_csv, command):
    code, out, _ = invoke(capsys, [command, "--input", data_csv, *ARGS[command]])
    assert code == 0
    jsonschema.validate(json.loads(out), schema(command))


def test_gof_discrete_schema(capsys):
    code, out, _ = invoke(capsys, ["gof", "--null", "die:1-6 uniform", "--mean", "4.5"])
    jsonschema.validate(json.loads(out), schema("gof"))


@pytest.mark.parametrize("command", SCHEMA_COMMANDS)
def test_determinism_and_replay(capsys, tmp_path, data_csv, command):
    argv = [command, "--input", data_csv, *ARGS[command]]
    _, first, _ = invoke(capsys, argv)
    _, second, _ = invoke(capsys, argv)
    assert first == second
    doc = tmp_path / "doc.json"
    doc.write_text(first)
    code, replayed, _ = invoke(capsys, ["replay", str(doc)])
    assert code == 0 and replayed == first


def test_threads_do_not_change_output(capsys, data_csv):
    _, one, _ = invoke(capsys, ["screen", "--input", data_csv, "--y", "g", "--threads", "1"])
    _, four, _ = invoke(capsys, ["screen", "--input", data_csv, "--y", "g", "--threads", "4"])
    assert one == four


def test_exit_codes(capsys, data_csv, tmp_path):
    code, _, err = invoke(capsys, ["moments", "--input", data_csv, "--col", "missing"])
    assert code == 2 and "not found" in err
    code, _, _ = invoke(capsys, ["moments", "--input", data_csv, "--col", "a", "--m", "0"])
    assert code == 2
    code, _, _ = invoke(capsys, ["gof", "--null", "die:1-6", "--mean", "4.5", "--m", "2"])
    assert code == 2
    code, _, _ = invoke(capsys, ["twosample", "--input", data_csv, "--col", "a", "--group", "c"])
    assert code == 2
    with pytest.raises(SystemExit):
        cli.main(["nosuch"])
    p = write_csv(tmp_path / "r.csv", {"x": [1, 2, 3, 4], "y": [5, 5, 5, 5]})
    code, _, err = invoke(capsys, ["comoments", "--input", p, "--x", "x", "--y", "y"])
    assert code == 1 and "ValueError" in err


def test_run_rejects_unknown_command():
    code, doc, _ = run(RunConfig(command="nosuch"))
    assert code == 2 and "unknown subcommand" in doc["error"]
    with pytest.raises(ValidationError):
        RunConfig.from_dict({"command": "moments", "bogus": 1})


def test_float_rounding():
    assert cli.clean({"a": 1 / 3, "b": float("nan"), "c": np.array([np.inf])}) == {
        "a": 0.333333333333,
        "b": None,
        "c": [None],
    }


def test_copula_plot_grids(capsys, tmp_path, rng):
    n = 300
    p = write_csv(tmp_path / "i.csv", {"x": rng.permutation(n), "y": rng.permutation(n)})
    surf, sl = tmp_path / "surf.csv", tmp_path / "sl.csv"
    argv = ["copula", "--input", p, "--x", "x", "--y", "y", "--rule", "bic", "--grid", "8",
            "--slices", ".25,.5,.75", "--surface-csv", str(surf), "--slices-csv", str(sl)]
    code, out, _ = invoke(capsys, argv)
    assert code == 0
    doc = json.loads(out)
    rows = list(csv.DictReader(surf.read_text().splitlines()))
    assert list(rows[0]) == ["u", "v", "density"] and len(rows) == 64
    if not any(any(r) for r in doc["result"]["selection"]):
        assert {float(r["density"]) for r in rows} == {1.0}
    srows = list(csv.DictReader(sl.read_text().splitlines()))
    assert list(srows[0]) == ["v", "density", "u_slice"]
    assert {float(r["u_slice"]) for r in srows} == {0.25, 0.5, 0.75}


def test_independence_surface_cells_are_one(tmp_path, capsys):
    # balanced 2x2 design: every comoment is exactly zero
    x = [1, 1, 2, 2]
    y = [1, 2, 1, 2]
    p = write_csv(tmp_path / "z.csv", {"x": x * 10, "y": y * 10})
    code, out, _ = invoke(capsys, ["copula", "--input", p, "--x", "x", "--y", "y", "--grid", "5", "--format", "csv"])
    assert code == 0
    rows = list(csv.DictReader(out.splitlines()))
    assert {float(r["density"]) for r in rows} == {1.0}


def test_quantplot_points(tmp_path, capsys):
    p = write_csv(tmp_path / "q.csv", {"x": [3, 1, 4, 1, 5]})
    code, out, _ = invoke(capsys, ["quantplot", "--input", p, "--col", "x", "--format", "csv"])
    assert code == 0
    rows = list(csv.DictReader(out.splitlines()))
    assert [(float(r["u"]), float(r["x"])) for r in rows] == [(0.2, 1.0), (0.5, 3.0), (0.7, 4.0), (0.9, 5.0)]
    assert "u_normal_quantile" in rows[0]


def test_output_file(tmp_path, data_csv, capsys):
    out = tmp_path / "o.json"
    assert cli.main(["moments", "--input", data_csv, "--col", "a", "--output", str(out)]) == 0
    assert capsys.readouterr().out == ""
    assert json.loads(out.read_text())["command"] == "moments"
