import math

import numpy as np
import pytest

from riscancel.ris import (
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


def test_dbm_conversions():
    assert dbm_to_watts(30.0) == pytest.approx(1.0, rel=1e-12)
    assert dbm_to_watts(0.0) == pytest.approx(1e-3, rel=1e-12)
    budget = LinkBudget()
    assert budget.tx_power_w == pytest.approx(0.1, rel=1e-12)
    assert budget.noise_power_w == pytest.approx(1e-12, rel=1e-12)


def test_quantize_on_grid_is_identity():
    for bits in (1, 2, 3, 5):
        levels = 1 << bits
        grid = 2.0 * np.pi * np.arange(levels) / levels
        assert np.array_equal(quantize_phases(grid, bits), grid)


def test_quantize_idempotent():
    rng = np.random.default_rng(3)
    phi = rng.uniform(-10.0, 10.0, 500)
    for bits in (1, 2, 4):
        once = quantize_phases(phi, bits)
        assert np.array_equal(quantize_phases(once, bits), once)


def test_quantize_midpoints_round_down():
    # exact midpoints go to the smaller grid index
    step = 2.0 * np.pi / 4
    out = quantize_phases(np.array([step / 2, step + step / 2]), 2)
    assert out == pytest.approx([0.0, step])
    # 1-bit midpoints: pi/2 -> 0, 3*pi/2 -> pi (down, never up to 2*pi)
    out1 = quantize_phases(np.array([np.pi / 2, 3 * np.pi / 2]), 1)
    assert out1 == pytest.approx([0.0, np.pi])


def test_quantize_moves_at_most_half_a_step():
    rng = np.random.default_rng(11)
    phi = rng.uniform(0.0, 2.0 * np.pi, 1000)
    for bits in (1, 2, 3):
        step = 2.0 * np.pi / (1 << bits)
        q = quantize_phases(phi, bits)
        err = np.abs(np.angle(np.exp(1j * (q - phi))))
        assert np.max(err) <= step / 2 + 1e-9
        assert np.all(q >= 0.0) and np.all(q < 2.0 * np.pi)


def test_quantize_rejects_bad_bits():
    with pytest.raises(ValueError):
        quantize_phases(np.zeros(3), 0)


def test_configuration_validation():
    with pytest.raises(ValueError):
        RisConfiguration(beta=np.array([1.2]), phi=np.array([0.0]))
    with pytest.raises(ValueError):
        RisConfiguration(beta=np.array([-0.1]), phi=np.array([0.0]))
    with pytest.raises(ValueError):
        RisConfiguration(beta=np.array([0.5]), phi=np.array([2.0 * np.pi]))
    with pytest.raises(ValueError):
        RisConfiguration(beta=np.array([]), phi=np.array([]))
    # off-grid phase with a declared resolution
    with pytest.raises(ValueError):
        RisConfiguration(beta=np.array([1.0]), phi=np.array([0.3]), bits=2)
    cfg = RisConfiguration(beta=np.array([1.0, 0.0]), phi=np.array([np.pi, np.pi / 2]), bits=2)
    assert cfg.n_elements == 2


def test_reflection_coefficients_are_passive():
    rng = np.random.default_rng(5)
    cfg = RisConfiguration(beta=rng.uniform(0, 1, 64), phi=rng.uniform(0, 2 * np.pi, 64))
    r = reflection_coefficients(cfg)
    assert np.all(np.abs(r) <= 1.0 + 1e-12)
    assert np.allclose(r, cfg.beta * np.exp(1j * cfg.phi))


def test_effective_channel_matches_manual_sum():
    rng = np.random.default_rng(9)
    n_tx, m = 4, 6
    h_d = rng.standard_normal(n_tx) + 1j * rng.standard_normal(n_tx)
    h_t = rng.standard_normal((m, n_tx)) + 1j * rng.standard_normal((m, n_tx))
    h_r = rng.standard_normal(m) + 1j * rng.standard_normal(m)
    w = rng.standard_normal(n_tx) + 1j * rng.standard_normal(n_tx)
    cfg = RisConfiguration(beta=rng.uniform(0, 1, m), phi=rng.uniform(0, 2 * np.pi, m))
    c = effective_scalar_channel(h_d, h_t, h_r, w, cfg)
    manual = h_d @ w
    for i in range(m):
        manual += cfg.beta[i] * np.exp(1j * cfg.phi[i]) * h_r[i] * (h_t[i] @ w)
    assert c == pytest.approx(manual, rel=1e-12)


def test_zero_magnitude_surface_is_transparent():
    rng = np.random.default_rng(2)
    n_tx, m = 3, 5
    h_d = rng.standard_normal(n_tx) + 1j * rng.standard_normal(n_tx)
    h_t = rng.standard_normal((m, n_tx)) + 1j * rng.standard_normal((m, n_tx))
    h_r = rng.standard_normal(m) + 1j * rng.standard_normal(m)
    w = rng.standard_normal(n_tx) + 1j * rng.standard_normal(n_tx)
    cfg = RisConfiguration(beta=np.zeros(m), phi=np.zeros(m))
    c = effective_scalar_channel(h_d, h_t, h_r, w, cfg)
    assert c == complex(h_d @ w)  # bit-equal


def test_snr_floor_and_scaling():
    assert snr_db(0.0, 1e-12) == SNR_FLOOR_DB
    assert snr_db(1e-35, 1e-12) == SNR_FLOOR_DB
    assert snr_db(1e-12, 1e-12) == pytest.approx(0.0, abs=1e-12)
    assert snr_db(1e-9, 1e-12) == pytest.approx(30.0, abs=1e-12)
    with pytest.raises(ValueError):
        snr_db(-1.0, 1e-12)
    assert received_power(3 + 4j, 0.1) == pytest.approx(2.5, rel=1e-12)
