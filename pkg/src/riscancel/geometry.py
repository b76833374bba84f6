"""Node placement, link-state and distance-dependent channel gains.

The scene is a flat 2-D corridor: a transmitter, a legitimate receiver and a
reflecting surface sit at fixed coordinates, and every large-scale quantity
(path gain, bearing) is derived from those coordinates.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

# Below this separation the far-field bookkeeping stops making sense, so
# distances are clamped before being raised to a path-loss exponent.
DEFAULT_FAR_FIELD_MIN_M = 1.0


class LinkState(enum.Enum):
    """Propagation state of the direct transmitter-receiver link."""

    LOS = "los"
    NLOS = "nlos"


@dataclass(frozen=True)
class Point:
    """A position in the horizontal plane, in metres."""

    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError("coordinates must be finite")


def distance(a: Point, b: Point) -> float:
    return math.hypot(b.x - a.x, b.y - a.y)


def azimuth(origin: Point, target: Point) -> float:
    """Bearing of ``target`` seen from ``origin``, wrapped to [-pi, pi)."""
    ang = math.atan2(target.y - origin.y, target.x - origin.x)
    if ang >= math.pi:
        ang -= 2.0 * math.pi
    return ang


@dataclass(frozen=True)
class Placement:
    """Positions of the three nodes.

    Defaults put the receiver 50 m down-corridor from the transmitter and the
    surface on a side wall near the receiver.
    """

    tx: Point = Point(0.0, 0.0)
    rx: Point = Point(50.0, 0.0)
    ris: Point = Point(45.0, 5.0)

    def __post_init__(self):
        for name, a, b in (
            ("tx-rx", self.tx, self.rx),
            ("tx-ris", self.tx, self.ris),
            ("ris-rx", self.ris, self.rx),
        ):
            if distance(a, b) < DEFAULT_FAR_FIELD_MIN_M:
                raise ValueError(
                    f"{name} separation {distance(a, b):.3g} m is below the "
                    f"far-field minimum of {DEFAULT_FAR_FIELD_MIN_M} m"
                )

    def d_direct(self) -> float:
        return distance(self.tx, self.rx)

    def d_tx_ris(self) -> float:
        return distance(self.tx, self.ris)

    def d_ris_rx(self) -> float:
        return distance(self.ris, self.rx)

    def azimuth_tx_to_rx(self) -> float:
        return azimuth(self.tx, self.rx)

    def azimuth_tx_to_ris(self) -> float:
        return azimuth(self.tx, self.ris)


@dataclass(frozen=True)
class PathLossParams:
    """Bounded log-distance path-loss model.

    The average power gain at distance d is

        g(d) = 10^(reference_gain_db / 10) * max(d, min_distance_m)^(-exponent)

    i.e. ``reference_gain_db`` is the gain at 1 m and the clamp keeps the
    model bounded when nodes almost touch.
    """

    reference_gain_db: float
    exponent: float
    min_distance_m: float = DEFAULT_FAR_FIELD_MIN_M

    def __post_init__(self):
        if self.reference_gain_db > 0.0:
            raise ValueError("reference gain must not exceed 0 dB")
        if self.exponent < 1.0:
            raise ValueError("path-loss exponent must be >= 1")
        if self.min_distance_m <= 0.0:
            raise ValueError("minimum distance must be positive")

    def gain(self, d: float) -> float:
        if d < 0.0:
            raise ValueError("distance must be non-negative")
        d_eff = max(d, self.min_distance_m)
        return 10.0 ** (self.reference_gain_db / 10.0) * d_eff ** (-self.exponent)


def path_gain(params: PathLossParams, d: float) -> float:
    """Average power gain of a link of length ``d`` metres."""
    return params.gain(d)
