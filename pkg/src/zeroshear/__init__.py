"""Systoles, kissing numbers and curve topology of zero-shear cusped
hyperbolic surfaces, computed exactly from turn-word traces."""

from . import errors
from .enumeration import (
    GeodesicClass,
    SystoleResult,
    enumerate_classes,
    kernel_name,
    kissing_number,
    systole,
    trace_budget_for,
    walk_class_key,
    word_of_walk,
)
from .formulas import (
    BoundReport,
    KissCaps,
    PantsQuantities,
    Signature,
    SysUpperBounds,
    bound_report,
    horoball_tangency_lengths,
    kiss_upper,
    pants_quantities,
    sys_upper,
    genus_bound_case_table,
)
from .halfplane import (
    HGeodesic,
    HPoint,
    Horocycle,
    hdist,
    horocyclic_arc,
    verify_angle_relation,
    verify_self_tangency,
    verify_two_cusp_pants,
)
from .surfaces import (
    IdealTriangulation,
    RibbonGraph,
    SurfaceTopology,
    from_gluing,
    load_surface,
    preset,
    save_surface,
)
from .topology import (
    CutComponent,
    SystoleClassification,
    classify_systoles,
    crossing_number,
    cut_along,
    cut_along_many,
    self_crossings,
)
from .words import TurnWord, canonical, geodesic_length, trace

__version__ = "0.1.0"

__all__ = [
    "errors",
    "GeodesicClass",
    "SystoleResult",
    "enumerate_classes",
    "kernel_name",
    "kissing_number",
    "systole",
    "trace_budget_for",
    "walk_class_key",
    "word_of_walk",
    "BoundReport",
    "KissCaps",
    "PantsQuantities",
    "Signature",
    "SysUpperBounds",
    "bound_report",
    "horoball_tangency_lengths",
    "kiss_upper",
    "pants_quantities",
    "sys_upper",
    "genus_bound_case_table",
    "IdealTriangulation",
    "RibbonGraph",
    "SurfaceTopology",
    "from_gluing",
    "load_surface",
    "preset",
    "save_surface",
    "TurnWord",
    "canonical",
    "geodesic_length",
    "trace",
    "HGeodesic",
    "HPoint",
    "Horocycle",
    "hdist",
    "horocyclic_arc",
    "verify_angle_relation",
    "verify_self_tangency",
    "verify_two_cusp_pants",
    "CutComponent",
    "SystoleClassification",
    "classify_systoles",
    "crossing_number",
    "cut_along",
    "cut_along_many",
    "self_crossings",
    "__version__",
]
