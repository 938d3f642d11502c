"""
Run configuration defaults.

Every value can be overridden from the environment; the CLI layers a config
file and command-line flags on top of these (see :mod:`echoloc.context`).
"""
import os

APP_VERSION = "0.1.0"
"""The application version."""

ON = "yes"

DEBUG = os.environ.get("DEBUG") == ON
"""enable/disable debug logging"""

LOGFILE = os.environ.get("LOGFILE")
LOGLEVEL = os.environ.get("LOGLEVEL", 30)
"""
Log level for the toolkit.

See `<https://docs.python.org/3/library/logging.html#logging-levels>`_ .
"""

MAX_BLOCKS = int(os.environ.get("MAX_BLOCKS", 250_000))
"""
Capacity budget for eigenspace enumeration.

A request whose estimated number of eigenspace blocks exceeds this budget is
refused with :class:`.CapacityExceeded` instead of exhausting memory.
"""

FREQUENCY_TOL = float(os.environ.get("FREQUENCY_TOL", 1e-9))
"""Absolute tolerance when matching frequencies of two counting functions."""

WEIGHT_TOL = float(os.environ.get("WEIGHT_TOL", 1e-9))
"""Absolute tolerance when matching jump weights of two counting functions."""

CLUSTER_TOL = float(os.environ.get("CLUSTER_TOL", 1e-9))
"""
Relative gap below which two graph eigenvalues are put in one cluster.

The effective gap is ``CLUSTER_TOL * max(1, |lambda|)``. Clusters are
advisory; cospectrality verdicts always come from exact walk moments.
"""

ACCEPTANCE_RESIDUAL = float(os.environ.get("ACCEPTANCE_RESIDUAL", 1e-8))
"""Largest residual accepted from a closed-form inversion."""

GENERIC_ACCEPTANCE_RESIDUAL = float(
    os.environ.get("GENERIC_ACCEPTANCE_RESIDUAL", 1e-6)
)
"""Largest residual accepted from the grid-and-simplex matcher."""

SUPPRESSION_THRESHOLD = float(os.environ.get("SUPPRESSION_THRESHOLD", 1e-14))
"""
Relative size below which a jump is treated as a nodal zero.

A jump is suppressed when ``w < SUPPRESSION_THRESHOLD * max(1, mean)``
where ``mean`` is the running mean of the kept weights.
"""

HEAT_TAIL_RATIO = float(os.environ.get("HEAT_TAIL_RATIO", 1e-12))
"""Heat traces are refused when ``tail_bound > HEAT_TAIL_RATIO * value``."""

WEYL_SAFETY_FACTOR = float(os.environ.get("WEYL_SAFETY_FACTOR", 2.0))
"""Safety factor applied to the Weyl density majorant of the heat tail."""

WAVE_WINDOW_RATIO = float(os.environ.get("WAVE_WINDOW_RATIO", 3.0))
"""Smoothed wave traces require ``sigma <= cutoff / WAVE_WINDOW_RATIO``."""

LOOPING_THRESHOLD = float(os.environ.get("LOOPING_THRESHOLD", 0.25))
"""Peaks below this fraction of ``max|value|`` are not reported."""

GRID_RESOLUTION = int(os.environ.get("GRID_RESOLUTION", 64))
"""Points per axis of the coarse scan in generic echolocation."""

REFINE_STEPS = int(os.environ.get("REFINE_STEPS", 200))
"""Iteration cap of each simplex refinement."""

SEED_RATIO = float(os.environ.get("SEED_RATIO", 10.0))
"""Grid minima up to ``SEED_RATIO`` times the global grid minimum seed a
refinement."""

ORBIT_TOL = float(os.environ.get("ORBIT_TOL", 1e-6))
"""Two candidates belong to one orbit when an isometry image is this close."""

AUTOMORPHISM_MAX_VERTICES = int(
    os.environ.get("AUTOMORPHISM_MAX_VERTICES", 16)
)
"""Largest graph accepted by the exhaustive automorphism search."""

MAX_TREE_ORDER = int(os.environ.get("MAX_TREE_ORDER", 12))
"""Largest tree order accepted by the tree enumerator."""

THREADS = int(os.environ.get("ECHOLOC_THREADS", os.cpu_count() or 1))
"""Worker threads for parallel maps; results never depend on this value."""

SCHEMA_DIR = os.environ.get(
    "SCHEMA_DIR",
    os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))),
                 "schema", "resources"),
)
"""Directory of the JSON schemas for emitted and accepted artifacts."""
