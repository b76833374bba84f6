"""Monte-Carlo simulator for signal-cancellation attacks launched from a
reconfigurable reflecting surface.

The package models a transmitter beamforming at a receiver while an attacker
who controls a passive reflecting surface tunes its per-element reflection
coefficients to null the received signal.
"""

from .arrays import ArrayGeometry, Direction, precoder_towards, steering_vector
from .attacker import (
    AttackSolution,
    CancellationTerms,
    CsiErrorModel,
    apply_csi_error,
    brute_force_min_power,
    cancellation_terms,
    optimal_magnitudes_colinear,
    optimal_magnitudes_general,
    optimal_phases,
    optimize_cancellation,
    random_phase_config,
)
from .channels import (
    ChannelSet,
    LargeScaleGains,
    complex_normal,
    large_scale_gains,
    sample_channels,
    victim_precoder,
)
from .experiments import (
    ARM_ATTACK,
    ARM_NO_RIS,
    ARM_RANDOM,
    ARMS,
    PathLossConfig,
    ScenarioConfig,
    SummaryStats,
    SweepRow,
    TrialRecord,
    derive_seed,
    run_monte_carlo,
    run_single,
    run_trial,
    summarize,
    sweep_csi_ablation,
    sweep_elements,
    sweep_mse,
    sweep_position,
    sweep_quantization,
)
from .geometry import (
    LinkState,
    PathLossParams,
    Placement,
    Point,
    azimuth,
    distance,
    path_gain,
)
from .results import CSV_COLUMNS, write_results
from .ris import (
    SNR_FLOOR_DB,
    LinkBudget,
    RisConfiguration,
    dbm_to_watts,
    effective_scalar_channel,
    quantize_phases,
    received_power,
    reflection_coefficients,
    snr_db,
)

__version__ = "0.1.0"
