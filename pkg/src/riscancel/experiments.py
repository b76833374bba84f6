"""Scenario configuration, Monte-Carlo driver and the standard sweeps.

A scenario bundles everything one trial needs; ``run_monte_carlo`` evaluates
the three arms (surface absent, surface with random phases, optimized
attack) over many independently seeded trials, and the ``sweep_*`` functions
produce the summary tables the command-line tool writes out.
"""

from __future__ import annotations

import dataclasses
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .arrays import ArrayGeometry
from .attacker import (
    CsiErrorModel,
    apply_csi_error,
    cancellation_terms,
    optimize_cancellation,
    random_phase_config,
)
from .channels import sample_channels, victim_precoder
from .geometry import LinkState, PathLossParams, Placement, Point
from .ris import LinkBudget, received_power, reflection_coefficients, snr_db

ARM_NO_RIS = "no_ris"
ARM_RANDOM = "random_phase"
ARM_ATTACK = "attack"
ARMS = (ARM_NO_RIS, ARM_RANDOM, ARM_ATTACK)


@dataclass(frozen=True)
class PathLossConfig:
    """Path-loss parameter sets for the direct link (per state) and the
    two surface links (which share one set)."""

    direct_los: PathLossParams = PathLossParams(-30.0, 3.0)
    direct_nlos: PathLossParams = PathLossParams(-30.0, 3.45)
    ris_link: PathLossParams = PathLossParams(-25.0, 3.8)

    def direct(self, state: LinkState) -> PathLossParams:
        return self.direct_los if state is LinkState.LOS else self.direct_nlos


@dataclass(frozen=True)
class ScenarioConfig:
    """Everything that defines one simulated deployment."""

    placement: Placement = Placement()
    link_state: LinkState = LinkState.LOS
    array: ArrayGeometry = ArrayGeometry()
    ris_elements: int = 450
    budget: LinkBudget = LinkBudget()
    pathloss: PathLossConfig = PathLossConfig()
    csi_error: CsiErrorModel | None = None
    phase_bits: int | None = None
    trials: int = 1000
    master_seed: int = 20260814

    def __post_init__(self):
        if self.ris_elements < 1:
            raise ValueError("surface needs at least one element")
        if self.trials < 1:
            raise ValueError("at least one trial is required")
        if self.master_seed < 0:
            raise ValueError("master seed must be non-negative")
        if self.phase_bits is not None and self.phase_bits < 1:
            raise ValueError("phase resolution must be at least 1 bit")

    def to_dict(self) -> dict:
        def pl(p: PathLossParams) -> dict:
            return {
                "reference_gain_db": p.reference_gain_db,
                "exponent": p.exponent,
                "min_distance_m": p.min_distance_m,
            }

        csi = None
        if self.csi_error is not None:
            csi = {
                "direct_db": self.csi_error.direct_db,
                "tx_ris_db": self.csi_error.tx_ris_db,
                "ris_rx_db": self.csi_error.ris_rx_db,
            }
        return {
            "placement": {
                "tx": [self.placement.tx.x, self.placement.tx.y],
                "rx": [self.placement.rx.x, self.placement.rx.y],
                "ris": [self.placement.ris.x, self.placement.ris.y],
            },
            "link_state": self.link_state.value,
            "array": {
                "rows": self.array.rows,
                "cols": self.array.cols,
                "spacing_wavelengths": self.array.spacing_wavelengths,
            },
            "ris_elements": self.ris_elements,
            "budget": {
                "tx_power_dbm": self.budget.tx_power_dbm,
                "noise_power_dbm": self.budget.noise_power_dbm,
            },
            "pathloss": {
                "direct_los": pl(self.pathloss.direct_los),
                "direct_nlos": pl(self.pathloss.direct_nlos),
                "ris_link": pl(self.pathloss.ris_link),
            },
            "csi_error": csi,
            "phase_bits": self.phase_bits,
            "trials": self.trials,
            "master_seed": self.master_seed,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ScenarioConfig":
        base = cls()
        _check_keys(
            data,
            (
                "placement",
                "link_state",
                "array",
                "ris_elements",
                "budget",
                "pathloss",
                "csi_error",
                "phase_bits",
                "trials",
                "master_seed",
            ),
            "scenario",
        )

        def pl(d: dict, where: str, default: PathLossParams) -> PathLossParams:
            _check_keys(d, ("reference_gain_db", "exponent", "min_distance_m"), where)
            return PathLossParams(
                reference_gain_db=d.get("reference_gain_db", default.reference_gain_db),
                exponent=d.get("exponent", default.exponent),
                min_distance_m=d.get("min_distance_m", default.min_distance_m),
            )

        placement = base.placement
        if "placement" in data:
            d = data["placement"]
            _check_keys(d, ("tx", "rx", "ris"), "placement")
            placement = Placement(
                tx=Point(*d.get("tx", (base.placement.tx.x, base.placement.tx.y))),
                rx=Point(*d.get("rx", (base.placement.rx.x, base.placement.rx.y))),
                ris=Point(*d.get("ris", (base.placement.ris.x, base.placement.ris.y))),
            )

        array = base.array
        if "array" in data:
            d = data["array"]
            _check_keys(d, ("rows", "cols", "spacing_wavelengths"), "array")
            array = ArrayGeometry(
                rows=d.get("rows", base.array.rows),
                cols=d.get("cols", base.array.cols),
                spacing_wavelengths=d.get("spacing_wavelengths", base.array.spacing_wavelengths),
            )

        budget = base.budget
        if "budget" in data:
            d = data["budget"]
            _check_keys(d, ("tx_power_dbm", "noise_power_dbm"), "budget")
            budget = LinkBudget(
                tx_power_dbm=d.get("tx_power_dbm", base.budget.tx_power_dbm),
                noise_power_dbm=d.get("noise_power_dbm", base.budget.noise_power_dbm),
            )

        pathloss = base.pathloss
        if "pathloss" in data:
            d = data["pathloss"]
            _check_keys(d, ("direct_los", "direct_nlos", "ris_link"), "pathloss")
            pathloss = PathLossConfig(
                direct_los=pl(d.get("direct_los", {}), "pathloss.direct_los", base.pathloss.direct_los),
                direct_nlos=pl(d.get("direct_nlos", {}), "pathloss.direct_nlos", base.pathloss.direct_nlos),
                ris_link=pl(d.get("ris_link", {}), "pathloss.ris_link", base.pathloss.ris_link),
            )

        csi_error = None
        if data.get("csi_error") is not None:
            d = data["csi_error"]
            _check_keys(d, ("direct_db", "tx_ris_db", "ris_rx_db"), "csi_error")
            csi_error = CsiErrorModel(
                direct_db=d.get("direct_db"),
                tx_ris_db=d.get("tx_ris_db"),
                ris_rx_db=d.get("ris_rx_db"),
            )

        return cls(
            placement=placement,
            link_state=LinkState(data.get("link_state", base.link_state.value)),
            array=array,
            ris_elements=data.get("ris_elements", base.ris_elements),
            budget=budget,
            pathloss=pathloss,
            csi_error=csi_error,
            phase_bits=data.get("phase_bits", base.phase_bits),
            trials=data.get("trials", base.trials),
            master_seed=data.get("master_seed", base.master_seed),
        )


def _check_keys(d: dict, allowed, where: str):
    unknown = sorted(set(d) - set(allowed))
    if unknown:
        raise ValueError(f"unknown keys in {where}: {unknown}")


_MASK64 = (1 << 64) - 1


def _splitmix64(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & _MASK64
    z = x
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def derive_seed(master_seed: int, *indices: int) -> int:
    """Stable 64-bit sub-seed for a (sweep point, trial) coordinate.

    Mixing each index through a SplitMix64 round keeps seeds for different
    coordinates decorrelated while staying platform independent.
    """
    s = master_seed & _MASK64
    for idx in indices:
        s = _splitmix64(s ^ _splitmix64(idx & _MASK64))
    return s


@dataclass(frozen=True)
class TrialRecord:
    """SNRs of the three arms for one channel realization."""

    trial_index: int
    no_ris_db: float
    random_phase_db: float
    attack_db: float


def run_trial(cfg: ScenarioConfig, trial_index: int, sweep_key: tuple = ()) -> TrialRecord:
    """One Monte-Carlo trial: sample channels, optimize, evaluate all arms.

    The attack is designed against the attacker's (possibly noisy) channel
    estimates but always evaluated on the true channels.  The per-trial
    draw order is channels, the random-phase comparison arm, then the
    estimation noise, so the arms stay paired under any error model.
    """
    rng = np.random.default_rng(derive_seed(cfg.master_seed, *sweep_key, trial_index))
    channels = sample_channels(cfg, rng)
    w = victim_precoder(cfg)
    rand_cfg = random_phase_config(cfg.ris_elements, rng)
    if cfg.csi_error is not None:
        estimates = apply_csi_error(channels, cfg.csi_error, rng)
    else:
        estimates = channels
    solution = optimize_cancellation(estimates, w, cfg.budget, bits=cfg.phase_bits)

    terms = cancellation_terms(channels, w)
    noise_w = cfg.budget.noise_power_w
    p_tx = cfg.budget.tx_power_w

    p_no_ris = received_power(terms.c0, p_tx)
    c_rand = terms.c0 + np.sum(reflection_coefficients(rand_cfg) * terms.a)
    p_rand = received_power(complex(c_rand), p_tx)
    c_att = terms.c0 + np.sum(reflection_coefficients(solution.config) * terms.a)
    p_att = received_power(complex(c_att), p_tx)

    return TrialRecord(
        trial_index=trial_index,
        no_ris_db=snr_db(p_no_ris, noise_w),
        random_phase_db=snr_db(p_rand, noise_w),
        attack_db=snr_db(p_att, noise_w),
    )


def run_monte_carlo(
    cfg: ScenarioConfig, sweep_key: tuple = (), threads: int = 1
) -> list[TrialRecord]:
    """All trials of one sweep point, in trial order.

    Each trial gets its own derived seed, so the result is identical for any
    thread count.
    """
    if threads < 1:
        raise ValueError("thread count must be positive")
    indices = range(cfg.trials)
    if threads == 1:
        return [run_trial(cfg, i, sweep_key) for i in indices]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(lambda i: run_trial(cfg, i, sweep_key), indices))


@dataclass(frozen=True)
class SummaryStats:
    """Mean SNR and the central 95% envelope of one arm."""

    arm: str
    n: int
    mean_snr_db: float
    env_low_db: float
    env_high_db: float


def summarize(values_db, arm: str) -> SummaryStats:
    arr = np.asarray(values_db, dtype=float)
    lo, hi = np.percentile(arr, [2.5, 97.5])
    return SummaryStats(
        arm=arm,
        n=arr.size,
        mean_snr_db=float(np.mean(arr)),
        env_low_db=float(lo),
        env_high_db=float(hi),
    )


@dataclass(frozen=True)
class SweepRow:
    """One CSV row: one arm at one sweep point."""

    experiment: str
    sweep_param: str
    sweep_value: object
    arm: str
    trials: int
    mean_snr_db: float
    env_low_db: float
    env_high_db: float
    master_seed: int


def _summary_rows(
    experiment: str,
    sweep_param: str,
    sweep_value,
    records: list[TrialRecord],
    master_seed: int,
    arm_suffix: str = "",
) -> list[SweepRow]:
    columns = {
        ARM_NO_RIS: [r.no_ris_db for r in records],
        ARM_RANDOM: [r.random_phase_db for r in records],
        ARM_ATTACK: [r.attack_db for r in records],
    }
    rows = []
    for arm, vals in columns.items():
        s = summarize(vals, arm)
        rows.append(
            SweepRow(
                experiment=experiment,
                sweep_param=sweep_param,
                sweep_value=sweep_value,
                arm=arm + arm_suffix,
                trials=s.n,
                mean_snr_db=s.mean_snr_db,
                env_low_db=s.env_low_db,
                env_high_db=s.env_high_db,
                master_seed=master_seed,
            )
        )
    return rows


DEFAULT_ELEMENT_COUNTS = (10, 50, 150, 250, 350, 450)


def sweep_elements(
    cfg: ScenarioConfig,
    element_counts=DEFAULT_ELEMENT_COUNTS,
    threads: int = 1,
) -> list[SweepRow]:
    """Attack strength versus surface size.

    Each element count is a separate experiment with its own sub-seed, so
    points are statistically independent.
    """
    rows = []
    for i, m in enumerate(element_counts):
        point = dataclasses.replace(cfg, ris_elements=int(m))
        records = run_monte_carlo(point, sweep_key=(i,), threads=threads)
        rows += _summary_rows(
            "sweep_elements", "ris_elements", int(m), records, cfg.master_seed
        )
    return rows


DEFAULT_POSITIONS_X = tuple(float(x) for x in range(0, 55, 5))
DEFAULT_POSITION_ARRAYS = ((2, 2), (4, 4), (8, 8))


def sweep_position(
    cfg: ScenarioConfig,
    xs=DEFAULT_POSITIONS_X,
    y: float = 5.0,
    array_shapes=DEFAULT_POSITION_ARRAYS,
    threads: int = 1,
) -> list[SweepRow]:
    """Attack strength versus surface position along the corridor.

    The surface slides along a wall at height ``y`` while transmitter and
    receiver stay fixed; the whole slide is repeated for each transmit-array
    shape, and arms are tagged with the shape (e.g. ``attack:4x4``).
    """
    rows = []
    for a_idx, (ar, ac) in enumerate(array_shapes):
        geom = ArrayGeometry(rows=ar, cols=ac, spacing_wavelengths=cfg.array.spacing_wavelengths)
        for x_idx, x in enumerate(xs):
            placement = Placement(tx=cfg.placement.tx, rx=cfg.placement.rx, ris=Point(float(x), y))
            point = dataclasses.replace(cfg, placement=placement, array=geom)
            records = run_monte_carlo(point, sweep_key=(a_idx, x_idx), threads=threads)
            rows += _summary_rows(
                "sweep_position",
                "ris_x_m",
                float(x),
                records,
                cfg.master_seed,
                arm_suffix=f":{ar}x{ac}",
            )
    return rows


DEFAULT_MSE_LEVELS_DB = (-80.0, -60.0, -40.0, -20.0, 0.0)


def sweep_mse(
    cfg: ScenarioConfig,
    mse_levels_db=DEFAULT_MSE_LEVELS_DB,
    threads: int = 1,
) -> list[SweepRow]:
    """Attack strength versus channel-estimation quality.

    All error levels share the same channel realizations (paired trials), so
    differences between sweep points reflect only the attacker's knowledge.
    """
    rows = []
    for v in mse_levels_db:
        point = dataclasses.replace(cfg, csi_error=CsiErrorModel.uniform(float(v)))
        records = run_monte_carlo(point, sweep_key=(), threads=threads)
        rows += _summary_rows("sweep_mse", "csi_mse_db", float(v), records, cfg.master_seed)
    return rows


DEFAULT_QUANTIZATION_BITS = (1, 2, 3)


def sweep_quantization(
    cfg: ScenarioConfig,
    bits_values=DEFAULT_QUANTIZATION_BITS,
    include_continuous: bool = True,
    threads: int = 1,
) -> list[SweepRow]:
    """Attack strength versus phase-shifter resolution, paired trials.

    The continuous-phase point is tagged with sweep value ``continuous``.
    """
    rows = []
    for b in bits_values:
        point = dataclasses.replace(cfg, phase_bits=int(b))
        records = run_monte_carlo(point, sweep_key=(), threads=threads)
        rows += _summary_rows("sweep_quantization", "phase_bits", int(b), records, cfg.master_seed)
    if include_continuous:
        point = dataclasses.replace(cfg, phase_bits=None)
        records = run_monte_carlo(point, sweep_key=(), threads=threads)
        rows += _summary_rows(
            "sweep_quantization", "phase_bits", "continuous", records, cfg.master_seed
        )
    return rows


CSI_ABLATION_VALUES = ("none", "direct", "tx_ris", "ris_rx")


def sweep_csi_ablation(
    cfg: ScenarioConfig,
    mse_db: float = 0.0,
    threads: int = 1,
) -> list[SweepRow]:
    """Which link hurts most when estimated badly?

    Every sweep value gives the attacker the full-error model except that one
    link (the sweep value) is known perfectly; ``none`` keeps all three
    noisy.  Trials are paired across values.
    """
    rows = []
    for which in CSI_ABLATION_VALUES:
        model = CsiErrorModel.uniform(mse_db)
        if which != "none":
            model = dataclasses.replace(model, **{f"{which}_db": None})
        point = dataclasses.replace(cfg, csi_error=model)
        records = run_monte_carlo(point, sweep_key=(), threads=threads)
        rows += _summary_rows("sweep_csi_ablation", "perfect_link", which, records, cfg.master_seed)
    return rows


def run_single(cfg: ScenarioConfig, threads: int = 1) -> list[SweepRow]:
    """Summaries of one scenario, formatted like a one-point sweep."""
    records = run_monte_carlo(cfg, sweep_key=(), threads=threads)
    return _summary_rows("single", "link_state", cfg.link_state.value, records, cfg.master_seed)
