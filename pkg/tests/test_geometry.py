import math

import numpy as np
import pytest

from riscancel.geometry import (
    LinkState,
    PathLossParams,
    Placement,
    Point,
    azimuth,
    distance,
    path_gain,
)


def test_distance_and_default_placement():
    p = Placement()
    assert p.d_direct() == 50.0
    assert p.d_tx_ris() == pytest.approx(math.hypot(45.0, 5.0))
    assert p.d_ris_rx() == pytest.approx(math.hypot(5.0, 5.0))
    assert distance(Point(0, 0), Point(3, 4)) == 5.0


def test_azimuth_basics_and_wrap():
    o = Point(0.0, 0.0)
    assert azimuth(o, Point(1.0, 0.0)) == 0.0
    assert azimuth(o, Point(0.0, 1.0)) == pytest.approx(math.pi / 2)
    # straight behind wraps to the closed lower end of [-pi, pi)
    assert azimuth(o, Point(-1.0, 0.0)) == pytest.approx(-math.pi)
    assert azimuth(o, Point(1.0, -1.0)) == pytest.approx(-math.pi / 4)


def test_placement_rejects_overlapping_nodes():
    with pytest.raises(ValueError):
        Placement(tx=Point(0, 0), rx=Point(0.5, 0), ris=Point(45, 5))


def test_path_gain_reference_distance():
    params = PathLossParams(reference_gain_db=-30.0, exponent=2.0)
    assert path_gain(params, 1.0) == pytest.approx(1e-3, rel=1e-12)


def test_path_gain_clamps_below_min_distance():
    params = PathLossParams(reference_gain_db=-30.0, exponent=2.0)
    assert path_gain(params, 0.2) == path_gain(params, 1.0)
    assert path_gain(params, 0.0) == path_gain(params, 1.0)


def test_path_gain_monotone_non_increasing():
    params = PathLossParams(reference_gain_db=-20.0, exponent=3.45)
    d = np.linspace(0.0, 80.0, 400)
    g = np.array([path_gain(params, x) for x in d])
    assert np.all(np.diff(g) <= 0.0)


def test_path_loss_params_validation():
    with pytest.raises(ValueError):
        PathLossParams(reference_gain_db=1.0, exponent=2.0)
    with pytest.raises(ValueError):
        PathLossParams(reference_gain_db=-30.0, exponent=0.5)
    with pytest.raises(ValueError):
        PathLossParams(reference_gain_db=-30.0, exponent=2.0, min_distance_m=0.0)
    with pytest.raises(ValueError):
        path_gain(PathLossParams(-30.0, 2.0), -1.0)


def test_link_state_values():
    assert LinkState("los") is LinkState.LOS
    assert LinkState("nlos") is LinkState.NLOS
