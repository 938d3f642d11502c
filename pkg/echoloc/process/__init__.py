"""
Computations on pointwise counting functions.

:mod:`.counting` builds and compares counting functions, :mod:`.transforms`
takes their heat and wave traces, :mod:`.inversion` holds the closed-form
echolocation formulas, :mod:`.location` the general matcher and
:mod:`.graphs` the vertex counting of finite graphs.
"""

from .counting import (
    counting_function,
    two_point_counting,
    evaluate,
    timbre,
    compare,
)
from .transforms import (
    heat_trace,
    heat_tail_bound,
    minimal_heat_cutoff,
    curvature_estimate,
    estimate_scalar_curvature,
    estimate_gaussian_curvature,
    smoothed_wave_trace,
    detect_looping_times,
    quantum_energy_cdf,
    recover_counting_from_cdf,
    eigenspace_density,
    weyl_constant,
)
from .inversion import (
    locate_on_interval,
    infer_interval_length,
    locate_on_unknown_interval,
    locate_on_rectangle,
    locate_on_square,
    ellipsoid_gaussian_curvature,
    ellipsoid_z_from_curvature,
    disk_radius_from_looping_time,
)
from .location import generic_locate, locate
from .graphs import (
    vertex_counting_function,
    cospectral_vertex_pairs,
    echolocation_failure,
    find_echolocation_failures,
)

__all__ = (
    "counting_function",
    "two_point_counting",
    "evaluate",
    "timbre",
    "compare",
    "heat_trace",
    "heat_tail_bound",
    "minimal_heat_cutoff",
    "curvature_estimate",
    "estimate_scalar_curvature",
    "estimate_gaussian_curvature",
    "smoothed_wave_trace",
    "detect_looping_times",
    "quantum_energy_cdf",
    "recover_counting_from_cdf",
    "eigenspace_density",
    "weyl_constant",
    "locate_on_interval",
    "infer_interval_length",
    "locate_on_unknown_interval",
    "locate_on_rectangle",
    "locate_on_square",
    "ellipsoid_gaussian_curvature",
    "ellipsoid_z_from_curvature",
    "disk_radius_from_looping_time",
    "generic_locate",
    "locate",
    "vertex_counting_function",
    "cospectral_vertex_pairs",
    "echolocation_failure",
    "find_echolocation_failures",
)
