"""Analytic tongue-palate contact per coronal slice.

A flat coronal tongue at elevation ``u`` meets a dome slice in one of three
ways: it stays below the tooth row (no contact), it lies at or above the
apex (full contact across the span), or it crosses the dome profile at two
lateral points that are computed in closed form by inverting the profile.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Union

from .dome import DomeShape, DomeSlice, dome_elevation
from .errors import DomainError

__all__ = [
    "NoContact",
    "Intersection",
    "FullContact",
    "ContactClass",
    "invert_dome",
    "classify_slice",
    "contact_intervals",
    "contact_to_dict",
]

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class NoContact:
    """Tongue below the tooth-row baseline: no intersection exists."""


@dataclass(frozen=True)
class Intersection:
    """Tongue crosses the dome profile at two lateral points."""

    z_left: float
    z_right: float


@dataclass(frozen=True)
class FullContact:
    """Tongue at or above the apex: contact across the whole span."""

    z_apex: float


ContactClass = Union[NoContact, Intersection, FullContact]


def invert_dome(slice_: DomeSlice, u: float) -> tuple[float, float]:
    """Lateral positions where the dome profile sits at elevation u.

    Defined for 0 < u < h only; use classify_slice for the boundary cases.
    Returns (z_left, z_right) with z_left < z_center < z_right.
    """
    if not 0.0 < u < slice_.h:
        raise DomainError(
            f"invert_dome needs 0 < u < h ({slice_.h}), got u={u}; "
            "classify_slice handles the boundary cases"
        )
    if slice_.shape is DomeShape.COSINE:
        arg = 1.0 - 2.0 * u / slice_.h
        arg = min(1.0, max(-1.0, arg))  # absorb 1-ulp excursions
        t = math.acos(arg) / TWO_PI
        return (slice_.z_min + t * slice_.span, slice_.z_max - t * slice_.span)
    r = u / slice_.h
    off = slice_.half_width * math.sqrt(max(1.0 - r * r, 0.0))
    return (slice_.z_center - off, slice_.z_center + off)


def classify_slice(slice_: DomeSlice, u: float) -> ContactClass:
    """Three-way contact classification of a flat tongue at elevation u."""
    if not math.isfinite(u):
        raise DomainError(f"tongue elevation must be finite, got {u}")
    if u <= 0.0:
        return NoContact()
    if u >= slice_.h:
        return FullContact(z_apex=slice_.z_center)
    return Intersection(*invert_dome(slice_, u))


def contact_intervals(
    slice_: DomeSlice,
    tongue_profile: Callable[[float], float],
    n_samples: int,
) -> list[tuple[float, float]]:
    """Maximal z-intervals where a sampled tongue profile reaches the dome.

    The profile is sampled uniformly across the span; each contact boundary
    is then refined by a single bisection step, so interval endpoints are
    accurate to within one sample step. Constant profiles agree with
    classify_slice.
    """
    if n_samples < 16:
        raise DomainError(f"n_samples must be >= 16, got {n_samples}")
    zs = []
    for k in range(n_samples):
        f = k / (n_samples - 1)
        zs.append((1.0 - f) * slice_.z_min + f * slice_.z_max)

    def touching(z: float) -> bool:
        return tongue_profile(z) >= dome_elevation(slice_, z)

    flags = [touching(z) for z in zs]

    def refine(k: int) -> float:
        # one bisection step across the sign change between samples k, k+1
        lo, hi = zs[k], zs[k + 1]
        mid = 0.5 * (lo + hi)
        if touching(mid) == flags[k]:
            lo = mid
        else:
            hi = mid
        return 0.5 * (lo + hi)

    intervals: list[tuple[float, float]] = []
    start: float | None = None
    for k, flag in enumerate(flags):
        if flag and start is None:
            start = zs[k] if k == 0 else refine(k - 1)
        elif not flag and start is not None:
            intervals.append((start, refine(k - 1)))
            start = None
    if start is not None:
        intervals.append((start, zs[-1]))
    return intervals


def contact_to_dict(contact: ContactClass) -> dict:
    """JSON-ready form: {"case": "none" | "intersection" | "full", ...}."""
    if isinstance(contact, NoContact):
        return {"case": "none"}
    if isinstance(contact, Intersection):
        return {"case": "intersection", "z_left": contact.z_left, "z_right": contact.z_right}
    if isinstance(contact, FullContact):
        return {"case": "full", "z_apex": contact.z_apex}
    raise TypeError(f"not a contact classification: {contact!r}")
