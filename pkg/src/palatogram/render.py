"""Deterministic emitters: palatal-view SVG/PPM, coronal-slice SVG, OBJ mesh.

Every builder is a pure function of its inputs. Output bytes are stable
across runs: fixed attribute order, fixed decimal precision, no timestamps.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

from .contact import ContactClass, FullContact, Intersection, NoContact, classify_slice
from .dome import DomeSlice, PalateGeometry, dome_elevation, sample_surface, slice_at
from .epg import EPGFrame
from .errors import ConfigError, DomainError

__all__ = [
    "RenderStyle",
    "render_palatal_svg",
    "render_coronal_svg",
    "render_palatal_ppm",
    "export_obj",
]

_HEX_COLOR = re.compile(r"^#[0-9a-fA-F]{6}$")


@dataclass(frozen=True)
class RenderStyle:
    """Canvas size, marker colors, and numeric precision for documents."""

    width: int = 420
    height: int = 480
    contact_color: str = "#cc2222"
    no_contact_color: str = "#eecc44"
    outline_color: str = "#445566"
    precision: int = 3

    def __post_init__(self) -> None:
        if self.width <= 0 or self.height <= 0:
            raise ConfigError("canvas dimensions must be positive")
        for name in ("contact_color", "no_contact_color", "outline_color"):
            if not _HEX_COLOR.match(getattr(self, name)):
                raise ConfigError(f"{name} must be a 6-digit hex color like #rrggbb")
        if self.precision != 3:
            raise ConfigError("decimal precision is fixed at 3")

    def fmt(self, value: float) -> str:
        text = f"{value:.{self.precision}f}"
        return "0.000" if text == "-0.000" else text


def _svg_open(style: RenderStyle) -> list[str]:
    return [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{style.width}" '
        f'height="{style.height}" viewBox="0 0 {style.width} {style.height}">',
        f'<rect x="0" y="0" width="{style.width}" height="{style.height}" fill="#ffffff"/>',
    ]


def _palatal_layout(frame: EPGFrame, style: RenderStyle):
    """Dot centers and radius for the palatal lattice, anterior at the top."""
    w, h = float(style.width), float(style.height)
    margin = 0.08 * min(w, h)
    arch_top = margin
    arch_bottom = h - margin
    usable_h = arch_bottom - arch_top
    y0 = arch_top + 0.22 * usable_h
    y1 = arch_bottom - 0.08 * usable_h
    radius = min((y1 - y0) / frame.rows, (w - 2 * margin) / frame.cols) * 0.30
    centers = []
    for i in range(frame.rows):
        cy = y0 + (i + 0.5) * (y1 - y0) / frame.rows
        # the palate narrows toward the incisors; shrink anterior rows
        narrow = 0.58 + 0.42 * (i + 0.5) / frame.rows
        row = []
        for f in frame.z_frac_of_col:
            cx = 0.5 * w + (f - 0.5) * (w - 2 * margin - 2 * radius) * narrow
            row.append((cx, cy))
        centers.append(row)
    return centers, radius, margin


def _horseshoe_path(style: RenderStyle, margin: float) -> str:
    w, h = float(style.width), float(style.height)
    rx = 0.5 * w - margin
    ry = 0.42 * (h - 2 * margin)
    shoulder_y = margin + ry
    f = style.fmt
    return (
        f"M {f(margin)} {f(h - margin)} "
        f"L {f(margin)} {f(shoulder_y)} "
        f"A {f(rx)} {f(ry)} 0 0 1 {f(w - margin)} {f(shoulder_y)} "
        f"L {f(w - margin)} {f(h - margin)}"
    )


def render_palatal_svg(frame: EPGFrame, style: RenderStyle = RenderStyle()) -> bytes:
    """Palatal view: one dot per grid cell inside a horseshoe outline."""
    parts = _svg_open(style)
    centers, radius, margin = _palatal_layout(frame, style)
    parts.append(
        f'<path d="{_horseshoe_path(style, margin)}" fill="none" '
        f'stroke="{style.outline_color}" stroke-width="2"/>'
    )
    f = style.fmt
    for i, row in enumerate(frame.cells):
        for j, contacted in enumerate(row):
            cx, cy = centers[i][j]
            fill = style.contact_color if contacted else style.no_contact_color
            parts.append(
                f'<circle cx="{f(cx)}" cy="{f(cy)}" r="{f(radius)}" fill="{fill}"/>'
            )
    parts.append("</svg>")
    return ("\n".join(parts) + "\n").encode("utf-8")


CORONAL_CURVE_SAMPLES = 256


def render_coronal_svg(
    slice_: DomeSlice, u: float, style: RenderStyle = RenderStyle()
) -> bytes:
    """Coronal view: dome profile, flat tongue line at u, contact markers."""
    w, h = float(style.width), float(style.height)
    margin = 0.10 * min(w, h)
    u_lo = min(0.0, u) - 0.15 * slice_.h
    u_hi = slice_.h + 0.15 * slice_.h
    if u > slice_.h:
        u_hi = u + 0.15 * slice_.h

    def sx(z: float) -> float:
        return margin + (z - slice_.z_min) / slice_.span * (w - 2 * margin)

    def sy(elev: float) -> float:
        return h - margin - (elev - u_lo) / (u_hi - u_lo) * (h - 2 * margin)

    f = style.fmt
    parts = _svg_open(style)
    # occlusal baseline
    parts.append(
        f'<line x1="{f(sx(slice_.z_min))}" y1="{f(sy(0.0))}" '
        f'x2="{f(sx(slice_.z_max))}" y2="{f(sy(0.0))}" '
        f'stroke="#999999" stroke-width="1"/>'
    )
    pts = []
    for k in range(CORONAL_CURVE_SAMPLES):
        t = k / (CORONAL_CURVE_SAMPLES - 1)
        z = (1.0 - t) * slice_.z_min + t * slice_.z_max
        pts.append(f"{f(sx(z))},{f(sy(dome_elevation(slice_, z)))}")
    parts.append(
        f'<polyline points="{" ".join(pts)}" fill="none" '
        f'stroke="{style.outline_color}" stroke-width="2"/>'
    )
    # flat coronal tongue line
    parts.append(
        f'<line x1="{f(sx(slice_.z_min))}" y1="{f(sy(u))}" '
        f'x2="{f(sx(slice_.z_max))}" y2="{f(sy(u))}" '
        f'stroke="#227722" stroke-width="2"/>'
    )
    contact = classify_slice(slice_, u)
    marker = min(w, h) * 0.018
    if isinstance(contact, NoContact):
        for z in (slice_.z_min, slice_.z_max):
            parts.append(
                f'<circle cx="{f(sx(z))}" cy="{f(sy(0.0))}" r="{f(marker)}" '
                f'fill="{style.no_contact_color}"/>'
            )
    elif isinstance(contact, Intersection):
        for z in (contact.z_left, contact.z_right):
            cx, cy = sx(z), sy(u)
            for dx0, dy0, dx1, dy1 in (
                (-marker, -marker, marker, marker),
                (-marker, marker, marker, -marker),
            ):
                parts.append(
                    f'<line x1="{f(cx + dx0)}" y1="{f(cy + dy0)}" '
                    f'x2="{f(cx + dx1)}" y2="{f(cy + dy1)}" '
                    f'stroke="{style.contact_color}" stroke-width="2"/>'
                )
    else:
        parts.append(
            f'<circle cx="{f(sx(contact.z_apex))}" cy="{f(sy(slice_.h))}" '
            f'r="{f(marker)}" fill="{style.contact_color}"/>'
        )
    parts.append("</svg>")
    return ("\n".join(parts) + "\n").encode("utf-8")


OBJ_PRECISION = 6

_GROUP_OF_CLASS = {
    NoContact: "no_contact",
    Intersection: "intersection",
    FullContact: "full_contact",
}


def export_obj(
    geometry: PalateGeometry,
    nx: int,
    nz: int,
    contacts: list[ContactClass] | None = None,
) -> bytes:
    """Triangulated dome surface, plus optional per-slice contact markers.

    Markers are emitted as extra vertices inside named groups (no_contact,
    intersection, full_contact); they are not referenced by any face.
    """
    grid = sample_surface(geometry, nx, nz)
    if contacts is not None and len(contacts) != nx + 1:
        raise DomainError(
            f"contacts list must have nx+1 = {nx + 1} entries, got {len(contacts)}"
        )
    p = OBJ_PRECISION
    lines = []
    for row in grid:
        for pt in row:
            lines.append(f"v {pt.x:.{p}f} {pt.y:.{p}f} {pt.z:.{p}f}")
    lines.append("g palate")
    stride = nz + 1
    for i in range(nx):
        for j in range(nz):
            v00 = i * stride + j + 1
            v10 = (i + 1) * stride + j + 1
            v11 = (i + 1) * stride + j + 2
            v01 = i * stride + j + 2
            lines.append(f"f {v00} {v10} {v11}")
            lines.append(f"f {v00} {v11} {v01}")
    if contacts is not None:
        for i, contact in enumerate(contacts):
            sl = slice_at(geometry, grid[i][0].x)
            group = _GROUP_OF_CLASS.get(type(contact))
            if group is None:
                raise DomainError(f"contacts[{i}] is not a contact classification")
            lines.append(f"g {group}")
            if isinstance(contact, NoContact):
                markers = [(sl.z_min, 0.0), (sl.z_max, 0.0)]
            elif isinstance(contact, Intersection):
                markers = [
                    (contact.z_left, dome_elevation(sl, contact.z_left)),
                    (contact.z_right, dome_elevation(sl, contact.z_right)),
                ]
            else:
                markers = [(contact.z_apex, sl.h)]
            for z, y in markers:
                lines.append(f"v {sl.x:.{p}f} {y:.{p}f} {z:.{p}f}")
    return ("\n".join(lines) + "\n").encode("utf-8")


def _hex_rgb(color: str) -> tuple[int, int, int]:
    return (int(color[1:3], 16), int(color[3:5], 16), int(color[5:7], 16))


def render_palatal_ppm(frame: EPGFrame, style: RenderStyle = RenderStyle()) -> bytes:
    """Raster fallback of the palatal view (binary PPM, P6)."""
    w, h = style.width, style.height
    white = (255, 255, 255)
    raster = bytearray()
    pixels = [[white] * w for _ in range(h)]

    def put_disc(cx: float, cy: float, r: float, rgb: tuple[int, int, int]) -> None:
        x0, x1 = max(0, int(cx - r) - 1), min(w - 1, int(cx + r) + 1)
        y0, y1 = max(0, int(cy - r) - 1), min(h - 1, int(cy + r) + 1)
        rr = r * r
        for py in range(y0, y1 + 1):
            for px in range(x0, x1 + 1):
                if (px + 0.5 - cx) ** 2 + (py + 0.5 - cy) ** 2 <= rr:
                    pixels[py][px] = rgb

    centers, radius, margin = _palatal_layout(frame, style)
    outline = _hex_rgb(style.outline_color)
    # trace the horseshoe outline with small discs along its three segments
    rx = 0.5 * w - margin
    ry = 0.42 * (h - 2 * margin)
    shoulder_y = margin + ry
    steps = 160
    for k in range(steps + 1):
        t = k / steps
        put_disc(margin, h - margin + t * (shoulder_y - (h - margin)), 1.2, outline)
        put_disc(w - margin, h - margin + t * (shoulder_y - (h - margin)), 1.2, outline)
        angle = math.pi * (1.0 - t)
        put_disc(0.5 * w + rx * math.cos(angle), shoulder_y - ry * math.sin(angle), 1.2, outline)
    contact_rgb = _hex_rgb(style.contact_color)
    open_rgb = _hex_rgb(style.no_contact_color)
    for i, row in enumerate(frame.cells):
        for j, contacted in enumerate(row):
            cx, cy = centers[i][j]
            put_disc(cx, cy, radius, contact_rgb if contacted else open_rgb)
    raster.extend(f"P6\n{w} {h}\n255\n".encode("ascii"))
    for prow in pixels:
        for rgb in prow:
            raster.extend(rgb)
    return bytes(raster)
