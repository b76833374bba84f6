import json
import math

import pytest

from riscancel.attacker import CsiErrorModel
from riscancel.cli import main
from riscancel.experiments import (
    ScenarioConfig,
    SweepRow,
    sweep_mse,
)
from riscancel.results import CSV_COLUMNS, write_results


def _tiny(**overrides):
    kwargs = dict(ris_elements=6, trials=4)
    kwargs.update(overrides)
    return ScenarioConfig(**kwargs)


def _row(sweep_value, arm, experiment="single"):
    return SweepRow(
        experiment=experiment,
        sweep_param="x",
        sweep_value=sweep_value,
        arm=arm,
        trials=2,
        mean_snr_db=1.5,
        env_low_db=0.25,
        env_high_db=2.75,
        master_seed=7,
    )


def test_header_and_float_formatting(tmp_path):
    path = write_results([_row(3, "attack")], _tiny(), tmp_path)
    lines = path.read_text().splitlines()
    assert lines[0] == ",".join(CSV_COLUMNS)
    assert lines[1] == "single,x,3,attack,2,1.5,0.25,2.75,7"
    assert path.read_text().endswith("\n")


def test_rows_sort_numeric_first_then_lexical(tmp_path):
    rows = [
        _row("continuous", "attack"),
        _row(10, "attack"),
        _row(1.5, "no_ris"),
        _row(1.5, "attack"),
        _row(3, "attack"),
    ]
    path = write_results(rows, _tiny(), tmp_path)
    order = [line.split(",")[2:4] for line in path.read_text().splitlines()[1:]]
    assert order == [
        ["1.5", "attack"],
        ["1.5", "no_ris"],
        ["3", "attack"],
        ["10", "attack"],
        ["continuous", "attack"],
    ]


def test_write_rejects_empty_and_mixed_experiments(tmp_path):
    with pytest.raises(ValueError):
        write_results([], _tiny(), tmp_path)
    rows = [_row(1, "attack", "single"), _row(1, "attack", "sweep_mse")]
    with pytest.raises(ValueError):
        write_results(rows, _tiny(), tmp_path)


def test_scenario_sidecar_round_trips(tmp_path):
    cfg = _tiny(csi_error=CsiErrorModel(direct_db=-20.0, tx_ris_db=None, ris_rx_db=-math.inf))
    path = write_results([_row(1, "attack")], cfg, tmp_path)
    sidecar = path.with_name("single_scenario.json")
    with open(sidecar) as fh:
        assert ScenarioConfig.from_dict(json.load(fh)) == cfg


def test_output_is_byte_identical_across_runs_and_threads(tmp_path):
    cfg = _tiny(trials=8)
    levels = (-40.0, 0.0)
    p1 = write_results(sweep_mse(cfg, levels, threads=1), cfg, tmp_path / "a")
    p2 = write_results(sweep_mse(cfg, levels, threads=3), cfg, tmp_path / "b")
    assert p1.read_bytes() == p2.read_bytes()
    sidecar1 = p1.with_name("sweep_mse_scenario.json")
    sidecar2 = p2.with_name("sweep_mse_scenario.json")
    assert sidecar1.read_bytes() == sidecar2.read_bytes()


# -------------------------------------------------------------------- cli


def _write_config(tmp_path, **overrides):
    data = {"ris_elements": 6, "trials": 3}
    data.update(overrides)
    cfg_path = tmp_path / "scenario.json"
    cfg_path.write_text(json.dumps(data))
    return cfg_path


def test_cli_single_writes_csv(tmp_path, capsys):
    cfg_path = _write_config(tmp_path)
    out = tmp_path / "out"
    rc = main(["single", "--config", str(cfg_path), "--out", str(out)])
    assert rc == 0
    csv_path = out / "single.csv"
    assert csv_path.exists()
    assert (out / "single_scenario.json").exists()
    assert str(csv_path) in capsys.readouterr().out
    lines = csv_path.read_text().splitlines()
    assert lines[0] == ",".join(CSV_COLUMNS)
    assert len(lines) == 4  # three arms


def test_cli_overrides_take_effect(tmp_path):
    cfg_path = _write_config(tmp_path)
    out = tmp_path / "out"
    rc = main(
        [
            "single",
            "--config",
            str(cfg_path),
            "--out",
            str(out),
            "--seed",
            "123",
            "--trials",
            "2",
            "--link-state",
            "nlos",
        ]
    )
    assert rc == 0
    with open(out / "single_scenario.json") as fh:
        snap = json.load(fh)
    assert snap["master_seed"] == 123
    assert snap["trials"] == 2
    assert snap["link_state"] == "nlos"
    rows = (out / "single.csv").read_text().splitlines()[1:]
    assert all(row.split(",")[2] == "nlos" for row in rows)


def test_cli_sweep_mse_runs_with_threads(tmp_path):
    cfg_path = _write_config(tmp_path, trials=2)
    out = tmp_path / "out"
    rc = main(["sweep-mse", "--config", str(cfg_path), "--out", str(out), "--threads", "2"])
    assert rc == 0
    lines = (out / "sweep_mse.csv").read_text().splitlines()
    assert len(lines) == 1 + 5 * 3  # header + five error levels, three arms


def test_cli_reports_config_errors(tmp_path, capsys):
    rc = main(["single", "--config", str(tmp_path / "missing.json"), "--out", str(tmp_path)])
    assert rc == 2
    assert "error:" in capsys.readouterr().err

    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["single", "--config", str(bad), "--out", str(tmp_path)]) == 2

    unknown = tmp_path / "unknown.json"
    unknown.write_text(json.dumps({"no_such_field": 1}))
    rc = main(["single", "--config", str(unknown), "--out", str(tmp_path)])
    assert rc == 2
    assert "no_such_field" in capsys.readouterr().err
