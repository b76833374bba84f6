import numpy as np
import pytest

from riscancel.arrays import Direction, steering_vector
from riscancel.channels import (
    ChannelSet,
    LargeScaleGains,
    complex_normal,
    large_scale_gains,
    sample_channels,
    victim_precoder,
)
from riscancel.experiments import ScenarioConfig
from riscancel.geometry import LinkState


def test_complex_normal_moments():
    rng = np.random.default_rng(0)
    z = complex_normal(rng, (100_000,))
    assert np.mean(z) == pytest.approx(0.0, abs=0.02)
    assert np.mean(np.abs(z) ** 2) == pytest.approx(1.0, rel=0.02)
    # real and imaginary parts carry equal halves of the power
    assert np.mean(z.real**2) == pytest.approx(0.5, rel=0.03)
    assert np.mean(z.imag**2) == pytest.approx(0.5, rel=0.03)


def test_complex_normal_shapes_and_determinism():
    rng = np.random.default_rng(7)
    z = complex_normal(rng, (3, 4))
    assert z.shape == (3, 4) and z.dtype == np.complex128
    again = complex_normal(np.random.default_rng(7), (3, 4))
    assert np.array_equal(z, again)


def _tiny_scenario(**overrides):
    kwargs = dict(ris_elements=16, trials=4)
    kwargs.update(overrides)
    return ScenarioConfig(**kwargs)


def test_sample_channels_shapes():
    cfg = _tiny_scenario()
    ch = sample_channels(cfg, np.random.default_rng(1))
    n_tx = cfg.array.n_elements
    assert ch.h_direct.shape == (n_tx,)
    assert ch.h_tx_ris.shape == (cfg.ris_elements, n_tx)
    assert ch.h_ris_rx.shape == (cfg.ris_elements,)
    assert ch.n_tx == n_tx and ch.n_ris == cfg.ris_elements


def test_direct_channel_is_rank_one_along_rx_steering():
    cfg = _tiny_scenario()
    ch = sample_channels(cfg, np.random.default_rng(3))
    a_rx = steering_vector(cfg.array, Direction(cfg.placement.azimuth_tx_to_rx()))
    # h_direct = scalar * a_rx, so projecting out a_rx leaves nothing
    coeff = np.vdot(a_rx, ch.h_direct)  # a_rx is unit norm
    assert np.linalg.norm(ch.h_direct - coeff * a_rx) == pytest.approx(0.0, abs=1e-12)


def test_tx_ris_matrix_is_rank_one():
    cfg = _tiny_scenario()
    ch = sample_channels(cfg, np.random.default_rng(4))
    s = np.linalg.svd(ch.h_tx_ris, compute_uv=False)
    assert s[0] > 0
    assert s[1] == pytest.approx(0.0, abs=1e-10 * s[0])


def test_large_scale_norm_invariants():
    cfg = _tiny_scenario(ris_elements=32)
    gains = large_scale_gains(cfg)
    n = 4000
    acc_d = acc_t = acc_r = 0.0
    rng = np.random.default_rng(10)
    for _ in range(n):
        ch = sample_channels(cfg, rng)
        acc_d += np.sum(np.abs(ch.h_direct) ** 2)
        acc_t += np.sum(np.abs(ch.h_tx_ris) ** 2)
        acc_r += np.sum(np.abs(ch.h_ris_rx) ** 2)
    m = cfg.ris_elements
    # E||h_direct||^2 = G_d (unit-norm steering vector), E||H||^2_F = G_tr*M, E||h_ris_rx||^2 = G_rr*M
    assert acc_d / n == pytest.approx(gains.direct, rel=0.06)
    assert acc_t / n == pytest.approx(gains.tx_ris * m, rel=0.06)
    assert acc_r / n == pytest.approx(gains.ris_rx * m, rel=0.06)


def test_cascade_rows_factor_exactly():
    # each row of the tx-ris matrix is g_i * sqrt(G_tr) * conj(a_ris)
    cfg = _tiny_scenario()
    ch = sample_channels(cfg, np.random.default_rng(6))
    a_ris = steering_vector(cfg.array, Direction(cfg.placement.azimuth_tx_to_ris()))
    gains = large_scale_gains(cfg)
    base = np.sqrt(gains.tx_ris) * np.conj(a_ris)
    for i in range(cfg.ris_elements):
        row = ch.h_tx_ris[i]
        # ratio row/base must be a constant scalar across entries
        ratios = row / base
        assert np.allclose(ratios, ratios[0], rtol=1e-10)


def test_sampling_is_seed_deterministic():
    cfg = _tiny_scenario()
    a = sample_channels(cfg, np.random.default_rng(42))
    b = sample_channels(cfg, np.random.default_rng(42))
    assert np.array_equal(a.h_direct, b.h_direct)
    assert np.array_equal(a.h_tx_ris, b.h_tx_ris)
    assert np.array_equal(a.h_ris_rx, b.h_ris_rx)


def test_link_state_changes_direct_gain_only():
    los = large_scale_gains(_tiny_scenario(link_state=LinkState.LOS))
    nlos = large_scale_gains(_tiny_scenario(link_state=LinkState.NLOS))
    assert nlos.direct < los.direct
    assert nlos.tx_ris == los.tx_ris
    assert nlos.ris_rx == los.ris_rx


def test_victim_precoder_is_unit_norm_steering():
    cfg = _tiny_scenario()
    w = victim_precoder(cfg)
    assert np.linalg.norm(w) == pytest.approx(1.0, rel=1e-12)
    a_rx = steering_vector(cfg.array, Direction(cfg.placement.azimuth_tx_to_rx()))
    assert np.array_equal(w, a_rx)


def test_channel_set_validation():
    gains = LargeScaleGains(direct=1.0, tx_ris=1.0, ris_rx=1.0)
    ok = dict(
        h_direct=np.zeros(4, complex),
        h_tx_ris=np.zeros((8, 4), complex),
        h_ris_rx=np.zeros(8, complex),
        gains=gains,
    )
    ChannelSet(**ok)
    bad = dict(ok)
    bad["h_ris_rx"] = np.zeros(7, complex)
    with pytest.raises(ValueError):
        ChannelSet(**bad)
    bad = dict(ok)
    bad["h_direct"] = np.array([np.nan + 0j, 0, 0, 0])
    with pytest.raises(ValueError):
        ChannelSet(**bad)
    with pytest.raises(ValueError):
        LargeScaleGains(direct=0.0, tx_ris=1.0, ris_rx=1.0)
