"""Random channel realizations for one Monte-Carlo trial.

The direct link is a single complex-Gaussian fade on top of the receiver
steering vector; the transmitter-surface link is a rank-one planar-wave
channel with per-element fading; the surface-receiver link is rich
scattering (iid Rayleigh).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

from .arrays import Direction, precoder_towards, steering_vector
from .geometry import LinkState, path_gain

if TYPE_CHECKING:  # pragma: no cover
    from .experiments import ScenarioConfig


def complex_normal(rng: np.random.Generator, shape=()) -> np.ndarray:
    """Standard circularly-symmetric complex Gaussian samples (unit variance)."""
    re = rng.standard_normal(shape)
    im = rng.standard_normal(shape)
    return (re + 1j * im) / math.sqrt(2.0)


@dataclass(frozen=True)
class LargeScaleGains:
    """Average power gains of the three links."""

    direct: float
    tx_ris: float
    ris_rx: float

    def __post_init__(self):
        for name, g in (
            ("direct", self.direct),
            ("tx_ris", self.tx_ris),
            ("ris_rx", self.ris_rx),
        ):
            if not (g > 0.0 and math.isfinite(g)):
                raise ValueError(f"{name} gain must be positive and finite")


@dataclass(frozen=True)
class ChannelSet:
    """One realization of all three links.

    ``h_direct`` has shape (n_tx,), ``h_tx_ris`` shape (n_ris, n_tx) and
    ``h_ris_rx`` shape (n_ris,).
    """

    h_direct: np.ndarray
    h_tx_ris: np.ndarray
    h_ris_rx: np.ndarray
    gains: LargeScaleGains

    def __post_init__(self):
        hd = np.asarray(self.h_direct, dtype=complex)
        ht = np.asarray(self.h_tx_ris, dtype=complex)
        hr = np.asarray(self.h_ris_rx, dtype=complex)
        if hd.ndim != 1 or ht.ndim != 2 or hr.ndim != 1:
            raise ValueError("channel arrays have wrong rank")
        if ht.shape != (hr.size, hd.size):
            raise ValueError(
                f"shape mismatch: h_tx_ris {ht.shape} vs "
                f"({hr.size} surface elements, {hd.size} tx antennas)"
            )
        for name, arr in (("h_direct", hd), ("h_tx_ris", ht), ("h_ris_rx", hr)):
            if not np.all(np.isfinite(arr.view(float))):
                raise ValueError(f"{name} contains non-finite entries")
        object.__setattr__(self, "h_direct", hd)
        object.__setattr__(self, "h_tx_ris", ht)
        object.__setattr__(self, "h_ris_rx", hr)

    @property
    def n_tx(self) -> int:
        return self.h_direct.size

    @property
    def n_ris(self) -> int:
        return self.h_ris_rx.size


def large_scale_gains(scenario: "ScenarioConfig") -> LargeScaleGains:
    """Distance-dependent power gains implied by the scenario placement."""
    pl = scenario.pathloss
    plc = scenario.placement
    return LargeScaleGains(
        direct=path_gain(pl.direct(scenario.link_state), plc.d_direct()),
        tx_ris=path_gain(pl.ris_link, plc.d_tx_ris()),
        ris_rx=path_gain(pl.ris_link, plc.d_ris_rx()),
    )


def sample_channels(scenario: "ScenarioConfig", rng: np.random.Generator) -> ChannelSet:
    """Draw one realization of all three links.

    Draw order is fixed (direct fade, then tx-surface fades, then
    surface-receiver fades) so trials are reproducible from the seed.
    """
    gains = large_scale_gains(scenario)
    geom = scenario.array
    plc = scenario.placement

    a_rx = steering_vector(geom, Direction(plc.azimuth_tx_to_rx()))
    a_ris = steering_vector(geom, Direction(plc.azimuth_tx_to_ris()))

    g = complex_normal(rng)
    h_direct = math.sqrt(gains.direct) * g * a_rx

    m = scenario.ris_elements
    g_vec = complex_normal(rng, (m,))
    h_tx_ris = math.sqrt(gains.tx_ris) * np.outer(g_vec, np.conj(a_ris))

    q = complex_normal(rng, (m,))
    h_ris_rx = math.sqrt(gains.ris_rx) * q

    return ChannelSet(h_direct=h_direct, h_tx_ris=h_tx_ris, h_ris_rx=h_ris_rx, gains=gains)


def victim_precoder(scenario: "ScenarioConfig") -> np.ndarray:
    """Transmit weights the legitimate pair uses: a beam at the receiver."""
    return precoder_towards(scenario.array, Direction(scenario.placement.azimuth_tx_to_rx()))


__all__ = [
    "ChannelSet",
    "LargeScaleGains",
    "complex_normal",
    "large_scale_gains",
    "sample_channels",
    "victim_precoder",
    "LinkState",
]
