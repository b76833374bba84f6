"""Reflecting-surface configuration, combining and the link budget.

A passive surface applies a per-element reflection coefficient
r_i = beta_i * exp(j phi_i) with 0 <= beta_i <= 1.  The receiver sees the
superposition of the direct path and the per-element cascaded paths; all SNR
arithmetic lives here too.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

# Received powers at or below this SNR are reported as exactly this floor, so
# perfect cancellation does not propagate -inf through the statistics.
SNR_FLOOR_DB = -200.0


def dbm_to_watts(p_dbm: float) -> float:
    return 10.0 ** ((p_dbm - 30.0) / 10.0)


@dataclass(frozen=True)
class LinkBudget:
    """Transmit power and receiver noise floor."""

    tx_power_dbm: float = 20.0
    noise_power_dbm: float = -90.0

    @property
    def tx_power_w(self) -> float:
        return dbm_to_watts(self.tx_power_dbm)

    @property
    def noise_power_w(self) -> float:
        return dbm_to_watts(self.noise_power_dbm)


@dataclass(frozen=True)
class RisConfiguration:
    """Per-element magnitudes and phases of the reflection coefficients.

    ``bits`` records that the phases are restricted to the uniform grid
    {2 pi k / 2^bits}; None means continuous phases.
    """

    beta: np.ndarray
    phi: np.ndarray
    bits: int | None = None

    def __post_init__(self):
        beta = np.asarray(self.beta, dtype=float)
        phi = np.asarray(self.phi, dtype=float)
        if beta.ndim != 1 or phi.shape != beta.shape:
            raise ValueError("beta and phi must be 1-D arrays of equal length")
        if beta.size == 0:
            raise ValueError("surface must have at least one element")
        if np.any(beta < 0.0) or np.any(beta > 1.0):
            raise ValueError("passive surface requires 0 <= beta <= 1")
        if np.any(phi < 0.0) or np.any(phi >= 2.0 * math.pi):
            raise ValueError("phases must lie in [0, 2 pi)")
        if self.bits is not None:
            if self.bits < 1:
                raise ValueError("phase resolution must be at least 1 bit")
            step = 2.0 * math.pi / (1 << self.bits)
            k = phi / step
            if not np.allclose(k, np.round(k), atol=1e-9):
                raise ValueError("phases are not on the quantization grid")
        object.__setattr__(self, "beta", beta)
        object.__setattr__(self, "phi", phi)

    @property
    def n_elements(self) -> int:
        return self.beta.size


def reflection_coefficients(cfg: RisConfiguration) -> np.ndarray:
    """Complex per-element coefficients beta_i * exp(j phi_i)."""
    return cfg.beta * np.exp(1j * cfg.phi)


def quantize_phases(phi: np.ndarray, bits: int) -> np.ndarray:
    """Snap phases to the nearest point of the 2^bits uniform grid.

    Exact midpoints between two grid points round towards the smaller index.
    Output lies in [0, 2 pi).
    """
    if bits < 1:
        raise ValueError("phase resolution must be at least 1 bit")
    levels = 1 << bits
    step = 2.0 * math.pi / levels
    phi = np.asarray(phi, dtype=float)
    x = np.mod(phi, 2.0 * math.pi) / step
    k0 = np.floor(x)
    frac = x - k0
    # The tiny tolerance keeps midpoints that were already nudged upward by
    # the wrap-and-divide rounding from jumping to the larger neighbour.
    k = np.where(frac < 0.5 + 1e-9, k0, k0 + 1.0)
    return np.mod(k, levels) * step


def effective_scalar_channel(
    h_direct: np.ndarray,
    h_tx_ris: np.ndarray,
    h_ris_rx: np.ndarray,
    w: np.ndarray,
    cfg: RisConfiguration,
) -> complex:
    """Scalar channel seen by the receiver for transmit weights ``w``.

    The direct term is h_direct^T w; each surface element adds
    r_i * h_ris_rx[i] * (h_tx_ris @ w)[i].
    """
    r = reflection_coefficients(cfg)
    incident = h_tx_ris @ w
    return complex(h_direct @ w + np.sum(r * h_ris_rx * incident))


def received_power(c: complex, tx_power_w: float) -> float:
    return (abs(c) ** 2) * tx_power_w


def snr_db(received_w: float, noise_w: float) -> float:
    """SNR in dB, floored at SNR_FLOOR_DB."""
    if received_w < 0.0:
        raise ValueError("received power must be non-negative")
    if received_w == 0.0:
        return SNR_FLOOR_DB
    val = 10.0 * math.log10(received_w / noise_w)
    return max(val, SNR_FLOOR_DB)
