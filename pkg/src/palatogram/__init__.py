"""Palatal dome modeling and EPG-style tongue-palate contact patterns."""

from .contact import (
    ContactClass,
    FullContact,
    Intersection,
    NoContact,
    classify_slice,
    contact_intervals,
    contact_to_dict,
    invert_dome,
)
from .dome import (
    DomeShape,
    DomeSlice,
    PalateGeometry,
    Point3,
    default_palate,
    dome_elevation,
    load_palate,
    palate_from_dict,
    sample_surface,
    slice_at,
    with_shape,
)
from .epg import EPGFrame, compute_epg, epg_text, epg_to_dict
from .errors import ConfigError, DomainError, PalatogramError
from .render import (
    RenderStyle,
    export_obj,
    render_coronal_svg,
    render_palatal_ppm,
    render_palatal_svg,
)
from .shaping import (
    DorsumManner,
    ShapingParams,
    TipManner,
    TongueContour,
    edge_elevation_delta,
    groove_delta,
    lateral_lowering_delta,
    midsagittal_height,
    tongue_height_field,
)
from .sounds import (
    AnimationSpec,
    SoundLibrary,
    SoundTarget,
    animate,
    default_library,
    get_target,
    interpolate,
    sound_names,
)

__version__ = "0.1.0"

__all__ = [
    "AnimationSpec",
    "ConfigError",
    "ContactClass",
    "DomainError",
    "DomeShape",
    "DomeSlice",
    "DorsumManner",
    "EPGFrame",
    "FullContact",
    "Intersection",
    "NoContact",
    "PalateGeometry",
    "PalatogramError",
    "Point3",
    "RenderStyle",
    "ShapingParams",
    "SoundLibrary",
    "SoundTarget",
    "TipManner",
    "TongueContour",
    "animate",
    "classify_slice",
    "compute_epg",
    "contact_intervals",
    "contact_to_dict",
    "default_library",
    "default_palate",
    "dome_elevation",
    "epg_text",
    "epg_to_dict",
    "export_obj",
    "get_target",
    "interpolate",
    "invert_dome",
    "load_palate",
    "midsagittal_height",
    "palate_from_dict",
    "render_coronal_svg",
    "render_palatal_ppm",
    "render_palatal_svg",
    "sample_surface",
    "slice_at",
    "sound_names",
    "tongue_height_field",
    "with_shape",
    "edge_elevation_delta",
    "groove_delta",
    "lateral_lowering_delta",
]
