"""Attacker-side machinery: CSI estimates and cancellation optimization.

The attacker controls the surface and wants to minimize the received power
|c0 + sum_i r_i a_i|^2 where c0 is the direct-path term and a_i the cascaded
per-element terms.  The optimizer proceeds in two stages: phases are set in
closed form to make every cascaded term anti-parallel to the direct term,
then magnitudes are fitted (a greedy water-fill in the colinear case, a
box-constrained coordinate descent after phase quantization).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .channels import ChannelSet, complex_normal
from .ris import LinkBudget, RisConfiguration, quantize_phases, received_power


@dataclass(frozen=True)
class CsiErrorModel:
    """Per-link estimation error levels, as MSE relative to the link gain.

    Each level is 10*log10(E|h_est - h|^2 / G_link); ``None`` means the link
    is known perfectly (and consumes no noise draws).  ``-inf`` also means
    exact knowledge but keeps the draw order of a noisy model.
    """

    direct_db: float | None = None
    tx_ris_db: float | None = None
    ris_rx_db: float | None = None

    @classmethod
    def uniform(cls, mse_db: float) -> "CsiErrorModel":
        return cls(direct_db=mse_db, tx_ris_db=mse_db, ris_rx_db=mse_db)


def _perturb(h: np.ndarray, mse_db: float | None, gain: float, rng: np.random.Generator):
    if mse_db is None:
        return h
    eps = 10.0 ** (mse_db / 10.0)
    noise = complex_normal(rng, h.shape)
    return h + math.sqrt(eps * gain) * noise


def apply_csi_error(
    channels: ChannelSet, model: CsiErrorModel, rng: np.random.Generator
) -> ChannelSet:
    """The attacker's noisy view of the channels.

    Error draws happen in a fixed link order (direct, tx-surface,
    surface-receiver) so results are reproducible.
    """
    g = channels.gains
    h_d = _perturb(channels.h_direct, model.direct_db, g.direct, rng)
    h_t = _perturb(channels.h_tx_ris, model.tx_ris_db, g.tx_ris, rng)
    h_r = _perturb(channels.h_ris_rx, model.ris_rx_db, g.ris_rx, rng)
    return ChannelSet(h_direct=h_d, h_tx_ris=h_t, h_ris_rx=h_r, gains=g)


@dataclass(frozen=True)
class CancellationTerms:
    """The scalar direct term c0 and per-element cascaded terms a_i."""

    c0: complex
    a: np.ndarray


def cancellation_terms(channels: ChannelSet, w: np.ndarray) -> CancellationTerms:
    """Reduce the full channel set to the terms the optimizer works with."""
    c0 = complex(channels.h_direct @ w)
    a = channels.h_ris_rx * (channels.h_tx_ris @ w)
    return CancellationTerms(c0=c0, a=np.asarray(a, dtype=complex))


def optimal_phases(terms: CancellationTerms) -> np.ndarray:
    """Phases that rotate every cascaded term to point against c0.

    phi_i = arg(c0) + pi - arg(a_i), wrapped to [0, 2 pi).  Elements with
    a_i = 0 contribute nothing and get phase 0.
    """
    a = terms.a
    phi = np.where(
        a == 0.0,
        0.0,
        np.mod(np.angle(terms.c0) + math.pi - np.angle(a), 2.0 * math.pi),
    )
    return np.asarray(phi, dtype=float)


def optimal_magnitudes_colinear(c0_abs: float, a_abs: np.ndarray) -> np.ndarray:
    """Magnitudes minimizing (c0_abs - sum beta_i a_abs_i)^2 under 0<=beta<=1.

    Elements are filled greedily in order of decreasing |a_i|: saturate at 1
    while the remaining direct magnitude exceeds the element, then one
    fractional element closes the gap exactly, then zeros.  Ties keep the
    original index order.
    """
    a_abs = np.asarray(a_abs, dtype=float)
    beta = np.zeros_like(a_abs)
    order = np.argsort(-a_abs, kind="stable")
    remaining = float(c0_abs)
    for i in order:
        if a_abs[i] == 0.0 or remaining <= 0.0:
            break
        if a_abs[i] <= remaining:
            beta[i] = 1.0
            remaining -= a_abs[i]
        else:
            beta[i] = remaining / a_abs[i]
            remaining = 0.0
    return beta


@dataclass
class MagnitudeDescentResult:
    beta: np.ndarray
    sweeps: int
    objective: list[float] = field(default_factory=list)


def optimal_magnitudes_general(
    c0: complex,
    v: np.ndarray,
    rel_tol: float = 1e-12,
    max_sweeps: int = 200,
) -> MagnitudeDescentResult:
    """Box-constrained cyclic coordinate descent on |c0 + sum beta_i v_i|^2.

    Each coordinate update is the exact box-clipped minimizer
    beta_i = clip(-Re(s_i conj(v_i)) / |v_i|^2, 0, 1) where s_i is the
    residual with element i removed.  Starts from all-ones and stops when a
    full sweep improves the objective by less than ``rel_tol`` relatively.
    """
    v = np.asarray(v, dtype=complex)
    m = v.size
    beta = np.ones(m)
    norms2 = np.abs(v) ** 2
    s = c0 + np.sum(beta * v)
    obj = abs(s) ** 2
    history = [obj]
    sweeps = 0
    for sweeps in range(1, max_sweeps + 1):
        for i in range(m):
            if norms2[i] == 0.0:
                beta[i] = 0.0
                continue
            s_i = s - beta[i] * v[i]
            b_new = -(s_i.real * v[i].real + s_i.imag * v[i].imag) / norms2[i]
            b_new = min(max(b_new, 0.0), 1.0)
            s = s_i + b_new * v[i]
            beta[i] = b_new
        new_obj = abs(s) ** 2
        history.append(new_obj)
        if obj - new_obj <= rel_tol * max(obj, 1e-300):
            obj = new_obj
            break
        obj = new_obj
    return MagnitudeDescentResult(beta=beta, sweeps=sweeps, objective=history)


@dataclass(frozen=True)
class AttackSolution:
    """Optimized surface configuration plus the power the attacker expects."""

    config: RisConfiguration
    predicted_power_w: float
    descent_sweeps: int = 0


def optimize_cancellation(
    channels: ChannelSet,
    w: np.ndarray,
    budget: LinkBudget,
    bits: int | None = None,
    rel_tol: float = 1e-12,
    max_sweeps: int = 200,
) -> AttackSolution:
    """Full two-stage cancellation design against (estimated) channels.

    With continuous phases the magnitude step is the exact greedy colinear
    fill; with quantized phases the rotated terms are no longer colinear and
    a coordinate descent fits the magnitudes.
    """
    terms = cancellation_terms(channels, w)
    phi = optimal_phases(terms)
    descent_sweeps = 0
    if bits is None:
        beta = optimal_magnitudes_colinear(abs(terms.c0), np.abs(terms.a))
    else:
        phi = quantize_phases(phi, bits)
        v = terms.a * np.exp(1j * phi)
        result = optimal_magnitudes_general(
            terms.c0, v, rel_tol=rel_tol, max_sweeps=max_sweeps
        )
        beta = result.beta
        descent_sweeps = result.sweeps
    cfg = RisConfiguration(beta=beta, phi=phi, bits=bits)
    resid = terms.c0 + np.sum(beta * terms.a * np.exp(1j * phi))
    predicted = received_power(complex(resid), budget.tx_power_w)
    return AttackSolution(config=cfg, predicted_power_w=predicted, descent_sweeps=descent_sweeps)


def random_phase_config(n_elements: int, rng: np.random.Generator) -> RisConfiguration:
    """Full-magnitude reflection with phases uniform on [0, 2 pi)."""
    phi = rng.uniform(0.0, 2.0 * math.pi, n_elements)
    # uniform() can in principle return the closed upper endpoint
    phi = np.mod(phi, 2.0 * math.pi)
    return RisConfiguration(beta=np.ones(n_elements), phi=phi)


def brute_force_min_power(
    channels: ChannelSet,
    w: np.ndarray,
    budget: LinkBudget,
    phase_bits: int,
    beta_levels: np.ndarray,
    max_grid: int = 10_000_000,
) -> float:
    """Exhaustive minimum of the received power over a finite configuration grid.

    Every element independently takes any phase of the 2^phase_bits grid and
    any magnitude in ``beta_levels``.  Only feasible for a handful of
    elements; used to sanity-check the optimizer.
    """
    terms = cancellation_terms(channels, w)
    m = terms.a.size
    if m > 8:
        raise ValueError("exhaustive search is limited to 8 elements")
    betas = np.asarray(beta_levels, dtype=float)
    if betas.ndim != 1 or betas.size == 0:
        raise ValueError("beta_levels must be a non-empty 1-D array")
    if np.any(betas < 0.0) or np.any(betas > 1.0):
        raise ValueError("beta levels must lie in [0, 1]")
    levels = 1 << phase_bits
    phases = 2.0 * math.pi * np.arange(levels) / levels
    # options[k * len(betas) + l] = betas[l] * exp(j phases[k])
    options = (betas[None, :] * np.exp(1j * phases)[:, None]).ravel()
    r = options.size
    total = r**m
    if total > max_grid:
        raise ValueError(f"grid of {total} points exceeds limit of {max_grid}")
    idx = np.arange(total)
    resid = np.full(total, terms.c0, dtype=complex)
    for i in range(m):
        d = (idx // r ** (m - 1 - i)) % r
        resid += options[d] * terms.a[i]
    min_power = float(np.min(np.abs(resid) ** 2))
    return min_power * budget.tx_power_w
