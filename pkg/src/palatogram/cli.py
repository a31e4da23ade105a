"""Command-line interface.

Subcommands:
    epg         contact grid for one sound (txt, json, svg, ppm)
    slice       coronal cross-section at a given x (svg or classification json)
    mesh        annotated 3D dome surface (obj)
    animate     frame sequence for a timed target animation
    list-sounds available preset names

Exit codes: 0 success, 1 usage error, 2 validation or domain error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import sounds
from .contact import NoContact, classify_slice, contact_to_dict
from .dome import DomeShape, PalateGeometry, default_palate, load_palate, slice_at, with_shape
from .epg import compute_epg, epg_text, epg_to_dict
from .errors import ConfigError, PalatogramError
from .render import (
    RenderStyle,
    export_obj,
    render_coronal_svg,
    render_palatal_ppm,
    render_palatal_svg,
)
from .shaping import midsagittal_height
from .sounds import SoundTarget, target_from_dict

__all__ = ["main", "run"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # exit 1 instead of argparse's default 2
        raise UsageError(message)


def build_parser() -> _Parser:
    parser = _Parser(prog="palatogram", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add_palate_opts(p: argparse.ArgumentParser) -> None:
        p.add_argument("--palate", metavar="FILE", help="palate config JSON (default: built-in)")
        p.add_argument(
            "--model",
            choices=[s.value for s in DomeShape],
            help="dome model override (takes precedence over the palate file)",
        )

    def add_tongue_opts(p: argparse.ArgumentParser) -> None:
        p.add_argument("--sound", action="append", metavar="NAME", help="preset sound name")
        p.add_argument("--contour", metavar="FILE", help="tongue contour JSON file")

    epg = sub.add_parser("epg", help="EPG-style contact grid")
    add_palate_opts(epg)
    add_tongue_opts(epg)
    epg.add_argument("--rows", type=int, default=8)
    epg.add_argument("--cols", type=int, default=8)
    epg.add_argument("--format", choices=["txt", "json", "svg", "ppm"], default="txt")
    epg.add_argument("--out", default="-", metavar="PATH", help="output path, '-' for stdout")

    slc = sub.add_parser("slice", help="coronal slice view and contact classification")
    add_palate_opts(slc)
    add_tongue_opts(slc)
    slc.add_argument("--x", type=float, required=True, metavar="MM")
    slc.add_argument("--format", choices=["svg", "json"], default="svg")
    slc.add_argument("--out", default="-", metavar="PATH")

    mesh = sub.add_parser("mesh", help="3D dome surface as OBJ")
    add_palate_opts(mesh)
    add_tongue_opts(mesh)
    mesh.add_argument("--nx", type=int, default=40)
    mesh.add_argument("--nz", type=int, default=32)
    mesh.add_argument("--out", default="-", metavar="PATH")

    anim = sub.add_parser("animate", help="render animation frames")
    add_palate_opts(anim)
    anim.add_argument("--spec", required=True, metavar="FILE", help="animation spec JSON")
    anim.add_argument("--rows", type=int, default=8)
    anim.add_argument("--cols", type=int, default=8)
    anim.add_argument("--format", choices=["txt", "json", "svg", "ppm"], default="svg")
    anim.add_argument("--outdir", required=True, metavar="DIR")

    sub.add_parser("list-sounds", help="list preset sound names")
    return parser


def _load_geometry(ns: argparse.Namespace) -> PalateGeometry:
    geometry = load_palate(ns.palate) if ns.palate else default_palate()
    if ns.model:
        geometry = with_shape(geometry, DomeShape(ns.model))
    return geometry


def _load_target(ns: argparse.Namespace) -> SoundTarget:
    sound_args = ns.sound or []
    if len(sound_args) > 1:
        raise UsageError("--sound given more than once")
    if bool(sound_args) == bool(ns.contour):
        raise UsageError("exactly one of --sound or --contour is required")
    if sound_args:
        return sounds.get_target(sound_args[0])
    path = Path(ns.contour)
    try:
        doc = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ConfigError(f"invalid JSON in {path}: {exc}") from None
    if isinstance(doc, list):
        doc = {"name": path.stem, "contour": doc, "params": {}}
    elif isinstance(doc, dict) and "name" not in doc:
        doc = {"name": path.stem, **doc}
    return target_from_dict(doc)


def _write(out: str, data: bytes | str) -> None:
    if isinstance(data, str):
        data = data.encode("utf-8")
    if out == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
    else:
        Path(out).write_bytes(data)


def _render_frame(frame, fmt: str, style: RenderStyle) -> bytes:
    if fmt == "txt":
        return epg_text(frame).encode("utf-8")
    if fmt == "json":
        return (json.dumps(epg_to_dict(frame), indent=2) + "\n").encode("utf-8")
    if fmt == "svg":
        return render_palatal_svg(frame, style)
    return render_palatal_ppm(frame, style)


def _cmd_epg(ns: argparse.Namespace) -> int:
    geometry = _load_geometry(ns)
    target = _load_target(ns)
    frame = compute_epg(geometry, target.contour, target.params, rows=ns.rows, cols=ns.cols)
    _write(ns.out, _render_frame(frame, ns.format, RenderStyle()))
    return 0


def _cmd_slice(ns: argparse.Namespace) -> int:
    geometry = _load_geometry(ns)
    target = _load_target(ns)
    sl = slice_at(geometry, ns.x)
    u = midsagittal_height(target.contour, ns.x)
    if ns.format == "svg":
        _write(ns.out, render_coronal_svg(sl, u, RenderStyle()))
    else:
        doc = contact_to_dict(classify_slice(sl, u))
        _write(ns.out, json.dumps(doc, indent=2) + "\n")
    return 0


def _cmd_mesh(ns: argparse.Namespace) -> int:
    geometry = _load_geometry(ns)
    contacts = None
    if ns.sound or ns.contour:
        target = _load_target(ns)
        contacts = []
        for i in range(ns.nx + 1):
            g = i / ns.nx
            x = (1.0 - g) * geometry.x_min + g * geometry.x_max
            if target.contour.x_min <= x <= target.contour.x_max:
                contact = classify_slice(slice_at(geometry, x), midsagittal_height(target.contour, x))
            else:
                contact = NoContact()  # tongue absent at this slice
            contacts.append(contact)
    _write(ns.out, export_obj(geometry, ns.nx, ns.nz, contacts))
    return 0


def _cmd_animate(ns: argparse.Namespace) -> int:
    geometry = _load_geometry(ns)
    spec = _load_animation_spec(ns.spec)
    outdir = Path(ns.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    style = RenderStyle()
    frames = sounds.animate(spec)
    for k, target in enumerate(frames):
        frame = compute_epg(geometry, target.contour, target.params, rows=ns.rows, cols=ns.cols)
        path = outdir / f"frame_{k:05d}.{ns.format}"
        path.write_bytes(_render_frame(frame, ns.format, style))
    print(f"wrote {len(frames)} frames to {outdir}", file=sys.stderr)
    return 0


def _load_animation_spec(path: str) -> sounds.AnimationSpec:
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ConfigError(f"invalid JSON in {path}: {exc}") from None
    if not isinstance(doc, dict):
        raise ConfigError("animation spec must be a JSON object")
    unknown = set(doc) - {"targets", "hold_ms", "transition_ms", "fps"}
    if unknown:
        raise ConfigError(f"animation spec has unknown keys: {sorted(unknown)}")
    names = doc.get("targets")
    if not isinstance(names, list) or not all(isinstance(n, str) for n in names) or not names:
        raise ConfigError("animation spec needs a non-empty 'targets' list of sound names")
    targets = tuple(sounds.get_target(n) for n in names)

    def durations(key: str, count: int, default: float) -> tuple[float, ...]:
        value = doc.get(key, default)
        if isinstance(value, (int, float)) and not isinstance(value, bool):
            return tuple([float(value)] * count)
        if isinstance(value, list) and len(value) == count and all(
            isinstance(v, (int, float)) and not isinstance(v, bool) for v in value
        ):
            return tuple(float(v) for v in value)
        raise ConfigError(f"animation spec key {key!r} must be a number or list of {count}")

    fps = doc.get("fps", 25)
    if isinstance(fps, bool) or not isinstance(fps, (int, float)):
        raise ConfigError("animation spec 'fps' must be a number")
    return sounds.AnimationSpec(
        targets=targets,
        hold_ms=durations("hold_ms", len(targets), 120.0),
        transition_ms=durations("transition_ms", max(len(targets) - 1, 0), 400.0),
        fps=float(fps),
    )


def _cmd_list_sounds(_: argparse.Namespace) -> int:
    for name in sounds.sound_names():
        print(name)
    return 0


_COMMANDS = {
    "epg": _cmd_epg,
    "slice": _cmd_slice,
    "mesh": _cmd_mesh,
    "animate": _cmd_animate,
    "list-sounds": _cmd_list_sounds,
}


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except UsageError as exc:
        print(f"error: usage: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        return _COMMANDS[ns.command](ns)
    except UsageError as exc:
        print(f"error: usage: {exc}", file=sys.stderr)
        return 1
    except PalatogramError as exc:
        print(f"error: {exc.code}: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: io: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    raise SystemExit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
