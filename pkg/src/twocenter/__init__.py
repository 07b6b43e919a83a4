"""Two-center problems on planar disks: piercing with two points,
covering the union with two congruent disks, and covering with every
disk assigned wholly to one side.
"""

from ._accel import HAS_NUMBA, accel_mode
from .geom import (
    ArcSegment,
    Disk,
    Instance,
    Point,
    aw_circumcenter,
    circle_circle_intersection,
    disk,
    farthest_point_in_disk_min2,
    normalize_disks,
    tolerance,
)
from .one_center import (
    ConvexArcRegion,
    common_intersection,
    smallest_disk_covering_crescents,
    smallest_enclosing_disk_of_disks,
    smallest_enclosing_disk_of_points,
    smallest_intersecting_disk,
    two_center_points,
)
from .piercing import (
    CandidateDelta,
    CircleArrangement,
    build_arrangement,
    candidate_deltas,
    decide_fast,
    decide_naive,
    face_tour,
    inflate,
)
from .piercing import solve_bipartition as solve_bipartition_pierce
from .piercing import solve_exact as solve_exact_pierce
from .cover_general import (
    RotationInterval,
    coverage_radius,
    decide_cover,
    fptas_general,
    gonzalez_2approx,
    rotation_intervals,
    solve_exact_general,
)
from .cover_restricted import (
    OrientationSample,
    fixed_orientation,
    fptas_restricted,
    fptas_restricted_fast,
    fptas_restricted_scaled,
    orientation_samples,
    shrink,
    sixapprox_restricted,
    solve_bipartition_restricted,
    solve_exact_restricted,
)
from .solution import TwoCenterSolution, coverage_residual, make_solution
from .instance_io import (
    RunReport,
    generate,
    load_instance,
    parse_instance,
    save_instance,
    serialize_instance,
)
from .svg import render_svg, write_svg

__version__ = "0.1.0"

__all__ = [
    "ArcSegment",
    "CandidateDelta",
    "CircleArrangement",
    "ConvexArcRegion",
    "Disk",
    "HAS_NUMBA",
    "Instance",
    "OrientationSample",
    "Point",
    "RotationInterval",
    "RunReport",
    "TwoCenterSolution",
    "accel_mode",
    "aw_circumcenter",
    "build_arrangement",
    "candidate_deltas",
    "circle_circle_intersection",
    "common_intersection",
    "coverage_radius",
    "coverage_residual",
    "decide_cover",
    "decide_fast",
    "decide_naive",
    "disk",
    "face_tour",
    "farthest_point_in_disk_min2",
    "fixed_orientation",
    "fptas_general",
    "fptas_restricted",
    "fptas_restricted_fast",
    "fptas_restricted_scaled",
    "generate",
    "gonzalez_2approx",
    "inflate",
    "load_instance",
    "make_solution",
    "normalize_disks",
    "orientation_samples",
    "parse_instance",
    "render_svg",
    "rotation_intervals",
    "save_instance",
    "serialize_instance",
    "shrink",
    "sixapprox_restricted",
    "smallest_disk_covering_crescents",
    "smallest_enclosing_disk_of_disks",
    "smallest_enclosing_disk_of_points",
    "smallest_intersecting_disk",
    "solve_bipartition_pierce",
    "solve_bipartition_restricted",
    "solve_exact_general",
    "solve_exact_pierce",
    "solve_exact_restricted",
    "tolerance",
    "two_center_points",
    "write_svg",
]
