"""Parametric palatal dome geometry.

The hard palate is modeled as a stack of coronal cross-sections ("slices").
Each slice spans the tooth row laterally from ``z_min`` (left molar edge) to
``z_max`` (right) and arches to a height ``h`` above the occlusal baseline.
Two lateral profiles are supported: a raised-cosine dome and a half-ellipse.

All heights in this package are elevations ``u`` above the tooth-row
baseline: ``u = 0`` on the gum line at the lateral edges, ``u = h`` at the
dome apex. Units are millimeters throughout.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from enum import Enum
from pathlib import Path

from .errors import ConfigError, DomainError

__all__ = [
    "DomeShape",
    "DomeSlice",
    "PalateGeometry",
    "Point3",
    "dome_elevation",
    "slice_at",
    "sample_surface",
    "palate_from_dict",
    "load_palate",
    "default_palate",
    "with_shape",
]

TWO_PI = 2.0 * math.pi


class DomeShape(str, Enum):
    """Lateral profile family used for every slice of a palate."""

    COSINE = "cosine"
    HALF_ELLIPSE = "half_ellipse"


@dataclass(frozen=True)
class DomeSlice:
    """One coronal cross-section of the palatal dome.

    Attributes:
        x: anterior-to-posterior position of the slice.
        z_min: lateral position of the left molar edge (z_min < z_max).
        z_max: lateral position of the right molar edge.
        h: dome height above the occlusal baseline (h > 0).
        shape: lateral profile family.
    """

    x: float
    z_min: float
    z_max: float
    h: float
    shape: DomeShape = DomeShape.COSINE

    def __post_init__(self) -> None:
        for name in ("x", "z_min", "z_max", "h"):
            if not math.isfinite(getattr(self, name)):
                raise DomainError(f"slice field {name} must be finite")
        if not self.z_min < self.z_max:
            raise DomainError(
                f"slice at x={self.x}: z_min ({self.z_min}) must be < z_max ({self.z_max})"
            )
        if not self.h > 0:
            raise DomainError(f"slice at x={self.x}: dome height must be positive, got {self.h}")

    @property
    def z_center(self) -> float:
        return 0.5 * (self.z_min + self.z_max)

    @property
    def span(self) -> float:
        return self.z_max - self.z_min

    @property
    def half_width(self) -> float:
        return 0.5 * (self.z_max - self.z_min)


@dataclass(frozen=True)
class PalateGeometry:
    """Ordered stack of dome slices from the incisors to the velar transition."""

    slices: tuple[DomeSlice, ...]
    shape: DomeShape

    def __post_init__(self) -> None:
        if len(self.slices) < 2:
            raise DomainError("a palate needs at least two slices")
        xs = [s.x for s in self.slices]
        if any(b <= a for a, b in zip(xs, xs[1:])):
            raise DomainError("slice x positions must be strictly increasing")
        if any(s.shape is not self.shape for s in self.slices):
            raise DomainError("all slices must share the geometry's dome shape")

    @property
    def x_min(self) -> float:
        return self.slices[0].x

    @property
    def x_max(self) -> float:
        return self.slices[-1].x


@dataclass(frozen=True)
class Point3:
    """A 3D point: x anterior-posterior, y vertical elevation, z lateral."""

    x: float
    y: float
    z: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y) and math.isfinite(self.z)):
            raise DomainError("point coordinates must be finite")


def dome_elevation(slice_: DomeSlice, z: float) -> float:
    """Height of the dome surface above the baseline at lateral position z.

    Zero exactly at both edges, ``h`` at the midline, mirror-symmetric about
    the midline. Raises DomainError for z outside [z_min, z_max].
    """
    if not slice_.z_min <= z <= slice_.z_max:
        raise DomainError(
            f"z={z} outside lateral span [{slice_.z_min}, {slice_.z_max}] "
            f"of slice at x={slice_.x}"
        )
    if slice_.shape is DomeShape.COSINE:
        # distance-from-midline form of the raised cosine; evaluates to an
        # exact 0.0 at the edges and exact h at the center
        q = abs(z - slice_.z_center) / slice_.span
        return 0.5 * slice_.h * (1.0 + math.cos(TWO_PI * q))
    # half-ellipse, factored so the radicand hits an exact 0.0 at the edges:
    # half_width^2 - (z - z_center)^2 == (z - z_min) * (z_max - z)
    rad = (z - slice_.z_min) * (slice_.z_max - z)
    return slice_.h * math.sqrt(max(rad, 0.0)) / slice_.half_width


def slice_at(geometry: PalateGeometry, x: float) -> DomeSlice:
    """Slice at an arbitrary x, linearly interpolating between stored slices."""
    slices = geometry.slices
    if not slices[0].x <= x <= slices[-1].x:
        raise DomainError(
            f"x={x} outside palate range [{slices[0].x}, {slices[-1].x}]"
        )
    lo, hi = 0, len(slices) - 1
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if slices[mid].x <= x:
            lo = mid
        else:
            hi = mid
    a, b = slices[lo], slices[hi]
    if x == a.x:
        return a
    if x == b.x:
        return b
    t = (x - a.x) / (b.x - a.x)
    s = 1.0 - t
    return DomeSlice(
        x=x,
        z_min=s * a.z_min + t * b.z_min,
        z_max=s * a.z_max + t * b.z_max,
        h=s * a.h + t * b.h,
        shape=geometry.shape,
    )


def sample_surface(geometry: PalateGeometry, nx: int, nz: int) -> list[list[Point3]]:
    """Sample the dome into an (nx+1) x (nz+1) row-major grid of points.

    Row i sits at an x uniformly spanning the palate's range; within a row,
    z spans that slice's [z_min, z_max] so the boundary columns land exactly
    on the dome edges (y = 0).
    """
    if nx < 1 or nz < 1:
        raise DomainError(f"grid needs nx >= 1 and nz >= 1, got nx={nx}, nz={nz}")
    x_lo, x_hi = geometry.x_min, geometry.x_max
    grid: list[list[Point3]] = []
    for i in range(nx + 1):
        g = i / nx
        x = (1.0 - g) * x_lo + g * x_hi
        sl = slice_at(geometry, x)
        row = []
        for j in range(nz + 1):
            f = j / nz
            z = (1.0 - f) * sl.z_min + f * sl.z_max
            row.append(Point3(x=x, y=dome_elevation(sl, z), z=z))
        grid.append(row)
    return grid


def with_shape(geometry: PalateGeometry, shape: DomeShape) -> PalateGeometry:
    """Same slice stack with the lateral profile family replaced."""
    if shape is geometry.shape:
        return geometry
    slices = tuple(
        DomeSlice(x=s.x, z_min=s.z_min, z_max=s.z_max, h=s.h, shape=shape)
        for s in geometry.slices
    )
    return PalateGeometry(slices=slices, shape=shape)


_SLICE_KEYS = {"x", "z_min", "z_max", "h"}


def palate_from_dict(doc: object) -> PalateGeometry:
    """Build a palate from a config mapping; rejects unknown keys."""
    if not isinstance(doc, dict):
        raise ConfigError("palate config must be a JSON object")
    unknown = set(doc) - {"shape", "slices"}
    if unknown:
        raise ConfigError(f"palate config has unknown keys: {sorted(unknown)}")
    try:
        shape = DomeShape(doc.get("shape"))
    except ValueError:
        raise ConfigError(
            f"palate shape must be one of {[s.value for s in DomeShape]}, "
            f"got {doc.get('shape')!r}"
        ) from None
    raw_slices = doc.get("slices")
    if not isinstance(raw_slices, list) or not raw_slices:
        raise ConfigError("palate config needs a non-empty 'slices' list")
    slices = []
    for i, item in enumerate(raw_slices):
        if not isinstance(item, dict):
            raise ConfigError(f"slice #{i} must be a JSON object")
        unknown = set(item) - _SLICE_KEYS
        if unknown:
            raise ConfigError(f"slice #{i} has unknown keys: {sorted(unknown)}")
        missing = _SLICE_KEYS - set(item)
        if missing:
            raise ConfigError(f"slice #{i} is missing keys: {sorted(missing)}")
        values = {}
        for key in _SLICE_KEYS:
            v = item[key]
            if isinstance(v, bool) or not isinstance(v, (int, float)):
                raise ConfigError(f"slice #{i} key {key!r} must be a number, got {v!r}")
            values[key] = float(v)
        try:
            slices.append(DomeSlice(shape=shape, **values))
        except DomainError as exc:
            raise ConfigError(f"slice #{i}: {exc}") from None
    try:
        return PalateGeometry(slices=tuple(slices), shape=shape)
    except DomainError as exc:
        raise ConfigError(str(exc)) from None


def load_palate(path: str | Path) -> PalateGeometry:
    """Load a palate config from a JSON file."""
    text = Path(path).read_text(encoding="utf-8")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"invalid JSON in {path}: {exc}") from None
    return palate_from_dict(doc)


def default_palate(shape: DomeShape | None = None) -> PalateGeometry:
    """The built-in schematic adult palate (incisors at x=0, velum at x=40)."""
    from importlib import resources

    text = resources.files("palatogram").joinpath("presets/palate.json").read_text("utf-8")
    geometry = palate_from_dict(json.loads(text))
    return geometry if shape is None else with_shape(geometry, shape)
