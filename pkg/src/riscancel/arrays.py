"""Uniform planar array model: steering vectors and matched precoding."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class ArrayGeometry:
    """A rows x cols planar array with half-wavelength spacing by default."""

    rows: int = 4
    cols: int = 4
    spacing_wavelengths: float = 0.5

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise ValueError("array must have at least one element per axis")
        if self.spacing_wavelengths <= 0.0:
            raise ValueError("element spacing must be positive")

    @property
    def n_elements(self) -> int:
        return self.rows * self.cols


@dataclass(frozen=True)
class Direction:
    """Azimuth/elevation pair in radians.

    Azimuth is wrapped to [-pi, pi); elevation must lie in [-pi/2, pi/2].
    """

    azimuth_rad: float
    elevation_rad: float = 0.0

    def __post_init__(self):
        if not math.isfinite(self.azimuth_rad) or not math.isfinite(self.elevation_rad):
            raise ValueError("angles must be finite")
        if abs(self.elevation_rad) > math.pi / 2:
            raise ValueError("elevation must lie in [-pi/2, pi/2]")
        az = self.azimuth_rad
        az = (az + math.pi) % (2.0 * math.pi) - math.pi
        object.__setattr__(self, "azimuth_rad", az)


def steering_vector(geom: ArrayGeometry, direction: Direction) -> np.ndarray:
    """Unit-norm array response of ``geom`` towards ``direction``.

    Element (m, n) (row-major) contributes

        exp(j 2 pi spacing (m u + n v)) / sqrt(N)

    with u = sin(az) cos(el) and v = sin(el); at broadside the vector is real
    and constant.
    """
    u = math.sin(direction.azimuth_rad) * math.cos(direction.elevation_rad)
    v = math.sin(direction.elevation_rad)
    m = np.arange(geom.rows)[:, None]
    n = np.arange(geom.cols)[None, :]
    phase = 2.0 * math.pi * geom.spacing_wavelengths * (m * u + n * v)
    a = np.exp(1j * phase) / math.sqrt(geom.n_elements)
    return a.reshape(-1)


def precoder_towards(geom: ArrayGeometry, direction: Direction) -> np.ndarray:
    """Unit-power transmit weights that beamform towards ``direction``.

    The matched precoder is simply the steering vector itself.
    """
    return steering_vector(geom, direction)
