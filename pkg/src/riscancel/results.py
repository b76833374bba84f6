"""CSV/JSON output of sweep results.

Every experiment writes ``<experiment>.csv`` with a fixed column set plus a
``<experiment>_scenario.json`` recording the base scenario, so a result file
is reproducible from its sibling alone.
"""

from __future__ import annotations

import csv
import json
from pathlib import Path

from .experiments import ScenarioConfig, SweepRow

CSV_COLUMNS = (
    "experiment",
    "sweep_param",
    "sweep_value",
    "arm",
    "trials",
    "mean_snr_db",
    "env_low_db",
    "env_high_db",
    "master_seed",
)


def _sort_key(row: SweepRow):
    # Numeric sweep values come first in numeric order, then everything else
    # lexically; rows at one sweep point are ordered by arm name.
    v = row.sweep_value
    if isinstance(v, (int, float)) and not isinstance(v, bool):
        head = (0, float(v), "")
    else:
        head = (1, 0.0, str(v))
    return (*head, row.arm)


def write_results(rows: list[SweepRow], base_cfg: ScenarioConfig, out_dir) -> Path:
    """Write rows (one experiment) and the scenario snapshot to ``out_dir``.

    Returns the CSV path.  Output is byte-stable: fixed sort order, ``\\n``
    line endings and ``str(float)`` number formatting.
    """
    if not rows:
        raise ValueError("no rows to write")
    experiments = {r.experiment for r in rows}
    if len(experiments) != 1:
        raise ValueError(f"rows span multiple experiments: {sorted(experiments)}")
    experiment = rows[0].experiment

    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    csv_path = out_dir / f"{experiment}.csv"
    json_path = out_dir / f"{experiment}_scenario.json"

    with open(csv_path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for row in sorted(rows, key=_sort_key):
            writer.writerow(
                [
                    row.experiment,
                    row.sweep_param,
                    row.sweep_value,
                    row.arm,
                    row.trials,
                    str(float(row.mean_snr_db)),
                    str(float(row.env_low_db)),
                    str(float(row.env_high_db)),
                    row.master_seed,
                ]
            )

    with open(json_path, "w") as fh:
        json.dump(base_cfg.to_dict(), fh, indent=2, sort_keys=True)
        fh.write("\n")

    return csv_path
