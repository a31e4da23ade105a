"""Lateral tongue shaping on top of a midsagittal contour.

The midsagittal contour gives the tongue height at the midline for every
anterior-posterior position. Three shaping mechanisms turn that 2D curve
into a full height field u_t(x, z):

* posterior lateral edge elevation, driven by the tongue tip height control
  (seals the airway against the gum ridge for apical closures),
* a central groove, a constant-width full-depth lowering of the midline
  strip along the entire tongue (fricative channel),
* lateral lowering, a constant-width full-depth lowering of both tongue
  edges along the entire tongue (the /l/ configuration).

The groove and lateral lowering are mutually exclusive.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable

from .dome import DomeSlice, PalateGeometry, slice_at
from .errors import DomainError

__all__ = [
    "TipManner",
    "DorsumManner",
    "TongueContour",
    "ShapingParams",
    "EDGE_RAMP_LENGTH",
    "midsagittal_height",
    "edge_elevation_delta",
    "groove_delta",
    "lateral_lowering_delta",
    "tongue_height_field",
]

# anterior-posterior distance over which the edge-elevation ramp saturates
EDGE_RAMP_LENGTH = 10.0


class TipManner(str, Enum):
    FULL = "full"
    NEAR = "near"
    LATERAL = "lateral"


class DorsumManner(str, Enum):
    FULL = "full"
    NEAR = "near"


@dataclass(frozen=True)
class TongueContour:
    """Midsagittal tongue heights as (x, u) pairs, x strictly increasing.

    Heights are elevations above the occlusal baseline and may be negative
    (tongue below the tooth row).
    """

    points: tuple[tuple[float, float], ...]

    def __post_init__(self) -> None:
        if len(self.points) < 2:
            raise DomainError("a tongue contour needs at least two points")
        for x, u in self.points:
            if not (math.isfinite(x) and math.isfinite(u)):
                raise DomainError("contour coordinates must be finite")
        xs = [p[0] for p in self.points]
        if any(b <= a for a, b in zip(xs, xs[1:])):
            raise DomainError("contour x positions must be strictly increasing")

    @property
    def x_min(self) -> float:
        return self.points[0][0]

    @property
    def x_max(self) -> float:
        return self.points[-1][0]


@dataclass(frozen=True)
class ShapingParams:
    """Manner settings and coronal shaping magnitudes for one speech sound.

    tth is the normalized tongue tip height control in [0, 1]; it scales the
    posterior edge elevation. Widths and depths are in millimeters.
    """

    tt_manner: TipManner = TipManner.NEAR
    td_manner: DorsumManner = DorsumManner.NEAR
    tth: float = 0.0
    edge_elev_max: float = 8.0
    posterior_onset_x: float = 12.0
    groove_enabled: bool = False
    groove_width: float = 8.0
    groove_depth: float = 23.0
    lateral_lower_enabled: bool = False
    lateral_lower_width: float = 6.4
    lateral_lower_depth: float = 23.0

    def __post_init__(self) -> None:
        if not 0.0 <= self.tth <= 1.0:
            raise DomainError(f"tth must lie in [0, 1], got {self.tth}")
        for name in (
            "edge_elev_max",
            "groove_width",
            "groove_depth",
            "lateral_lower_width",
            "lateral_lower_depth",
        ):
            if getattr(self, name) < 0:
                raise DomainError(f"{name} must be >= 0")
        if self.groove_enabled and self.lateral_lower_enabled:
            raise DomainError("groove and lateral lowering are mutually exclusive")


def midsagittal_height(contour: TongueContour, x: float) -> float:
    """Piecewise-linear tongue height at the midline."""
    pts = contour.points
    if not pts[0][0] <= x <= pts[-1][0]:
        raise DomainError(
            f"x={x} outside tongue contour range [{pts[0][0]}, {pts[-1][0]}]"
        )
    lo, hi = 0, len(pts) - 1
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if pts[mid][0] <= x:
            lo = mid
        else:
            hi = mid
    (x0, u0), (x1, u1) = pts[lo], pts[hi]
    if x == x0:
        return u0
    if x == x1:
        return u1
    t = (x - x0) / (x1 - x0)
    return (1.0 - t) * u0 + t * u1


def edge_elevation_delta(params: ShapingParams, slice_: DomeSlice, x: float, z: float) -> float:
    """Posterior lateral edge elevation at (x, z); zero at the midline.

    Active only in full manner (tip or dorsum). Separable product of the
    tip-height control, a posterior ramp in x, and a quadratic lateral
    weight that saturates at the molar edges.
    """
    if params.tt_manner is not TipManner.FULL and params.td_manner is not DorsumManner.FULL:
        return 0.0
    lateral = (abs(z - slice_.z_center) / slice_.half_width) ** 2
    ramp = (x - params.posterior_onset_x) / EDGE_RAMP_LENGTH
    ramp = min(1.0, max(0.0, ramp))
    return params.tth * params.edge_elev_max * ramp * lateral


def groove_delta(params: ShapingParams, slice_: DomeSlice, z: float) -> float:
    """Central groove: full-depth lowering of the midline strip (or 0)."""
    if not params.groove_enabled:
        return 0.0
    if abs(z - slice_.z_center) <= 0.5 * params.groove_width:
        return -params.groove_depth
    return 0.0


def lateral_lowering_delta(params: ShapingParams, slice_: DomeSlice, z: float) -> float:
    """Lateral lowering: full-depth lowering of both edge strips (or 0)."""
    if not params.lateral_lower_enabled:
        return 0.0
    if z <= slice_.z_min + params.lateral_lower_width:
        return -params.lateral_lower_depth
    if z >= slice_.z_max - params.lateral_lower_width:
        return -params.lateral_lower_depth
    return 0.0


def tongue_height_field(
    contour: TongueContour,
    params: ShapingParams,
    geometry: PalateGeometry,
) -> Callable[[float, float], float]:
    """Compose the midsagittal contour and shaping terms into u_t(x, z).

    With all shaping disabled the field is z-independent and reduces to the
    flat coronal tongue assumption.
    """
    if max(contour.x_min, geometry.x_min) >= min(contour.x_max, geometry.x_max):
        raise DomainError(
            "tongue contour and palate do not overlap along the anterior-posterior axis"
        )

    def field(x: float, z: float) -> float:
        sl = slice_at(geometry, x)
        u = midsagittal_height(contour, x)
        u += edge_elevation_delta(params, sl, x, z)
        u += groove_delta(params, sl, z)
        u += lateral_lowering_delta(params, sl, z)
        return u

    return field
