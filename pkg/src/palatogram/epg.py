"""Rasterization of the contact field into an EPG-style boolean grid."""

from __future__ import annotations

from dataclasses import dataclass

from .dome import PalateGeometry, dome_elevation, slice_at
from .errors import DomainError
from .shaping import (
    ShapingParams,
    TongueContour,
    edge_elevation_delta,
    groove_delta,
    lateral_lowering_delta,
    midsagittal_height,
)

__all__ = ["EPGFrame", "compute_epg", "epg_text", "epg_to_dict", "column_fractions"]


@dataclass(frozen=True)
class EPGFrame:
    """Boolean contact grid; rows run anterior to posterior, columns left to right."""

    rows: int
    cols: int
    cells: tuple[tuple[bool, ...], ...]
    x_of_row: tuple[float, ...]
    z_frac_of_col: tuple[float, ...]

    def __post_init__(self) -> None:
        if len(self.cells) != self.rows or any(len(r) != self.cols for r in self.cells):
            raise DomainError("cell matrix does not match rows x cols")
        if len(self.x_of_row) != self.rows:
            raise DomainError("x_of_row length must equal rows")
        if len(self.z_frac_of_col) != self.cols:
            raise DomainError("z_frac_of_col length must equal cols")
        xs = self.x_of_row
        if any(b <= a for a, b in zip(xs, xs[1:])):
            raise DomainError("x_of_row must be strictly increasing")
        fr = self.z_frac_of_col
        if any(b <= a for a, b in zip(fr, fr[1:])):
            raise DomainError("z_frac_of_col must be strictly increasing")
        if any(not 0.0 < f < 1.0 for f in fr):
            raise DomainError("z_frac_of_col values must lie in (0, 1)")
        for j in range(len(fr) // 2 + 1):
            if abs(fr[j] + fr[len(fr) - 1 - j] - 1.0) > 1e-9:
                raise DomainError("z_frac_of_col must be symmetric about 0.5")

    @property
    def contact_count(self) -> int:
        return sum(sum(row) for row in self.cells)


def column_fractions(cols: int) -> tuple[float, ...]:
    """Column-center fractions across the span, exactly mirror-symmetric."""
    fracs = [0.0] * cols
    for j in range(cols // 2):
        d = 0.5 - (j + 0.5) / cols
        fracs[j] = 0.5 - d
        fracs[cols - 1 - j] = 0.5 + d
    if cols % 2 == 1:
        fracs[cols // 2] = 0.5
    return tuple(fracs)


def compute_epg(
    geometry: PalateGeometry,
    contour: TongueContour,
    params: ShapingParams,
    rows: int = 8,
    cols: int = 8,
) -> EPGFrame:
    """Rasterize tongue-palate contact over the contour/palate overlap.

    Cell (i, j) is contacted iff the shaped tongue height at the cell center
    reaches the dome surface there. Rows whose center falls outside the
    tongue contour are all-false.
    """
    if rows < 1:
        raise DomainError(f"rows must be >= 1, got {rows}")
    if cols < 2:
        raise DomainError(f"cols must be >= 2, got {cols}")
    x_lo = max(geometry.x_min, contour.x_min)
    x_hi = min(geometry.x_max, contour.x_max)
    if not x_lo < x_hi:
        raise DomainError(
            "tongue contour and palate do not overlap along the anterior-posterior axis"
        )
    fracs = column_fractions(cols)
    x_of_row = tuple(x_lo + (i + 0.5) * (x_hi - x_lo) / rows for i in range(rows))
    cells = []
    for x in x_of_row:
        sl = slice_at(geometry, x)
        try:
            u_mid = midsagittal_height(contour, x)
        except DomainError:
            cells.append(tuple([False] * cols))
            continue
        row = []
        for f in fracs:
            # offsets mirror exactly, keeping symmetric shapes bit-symmetric
            z = sl.z_center + (f - 0.5) * sl.span
            u = u_mid
            u += edge_elevation_delta(params, sl, x, z)
            u += groove_delta(params, sl, z)
            u += lateral_lowering_delta(params, sl, z)
            row.append(u >= dome_elevation(sl, z))
        cells.append(tuple(row))
    return EPGFrame(
        rows=rows,
        cols=cols,
        cells=tuple(cells),
        x_of_row=x_of_row,
        z_frac_of_col=fracs,
    )


def epg_text(frame: EPGFrame) -> str:
    """Anterior-first text rendering, '#' for contact and '.' otherwise."""
    return "".join(
        "".join("#" if cell else "." for cell in row) + "\n" for row in frame.cells
    )


def epg_to_dict(frame: EPGFrame) -> dict:
    """JSON-ready form of the frame."""
    return {
        "rows": frame.rows,
        "cols": frame.cols,
        "cells": [list(row) for row in frame.cells],
        "x_of_row": list(frame.x_of_row),
        "z_frac_of_col": list(frame.z_frac_of_col),
    }
