"""Constants."""
import math

# Model geometry normalizations.

TORUS_SIDE = 2 * math.pi
DISK_RADIUS = 1.0
SPHERE_RADIUS = 1.0
RECTANGLE_FIRST_SIDE = 1.0

# Numerical formats.

SIGNIFICANT_DIGITS = 17
"""Floats in every emitted artifact carry this many significant digits."""

FLOAT_FORMAT = f".{SIGNIFICANT_DIGITS}g"

# Output formats.

JSON = "json"
CSV = "csv"
FORMATS = (JSON, CSV)
