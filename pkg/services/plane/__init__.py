# services/plane/__init__.py
# Numerica în planul complex: timp de evadare, raze externe, rădăcini Newton, verificări.

from .base import INTERIOR, ComplexPoint, ImageBuffer, RayPolyline, Resolution, Viewport
from .escape import escape_data
from .mapping import map_parameter_point
from .rays import trace_dynamic_ray, trace_parameter_ray
from .solvers import solve_center, solve_misiurewicz
from .verification import verify_config_numeric

__all__ = [
    "INTERIOR", "ComplexPoint", "ImageBuffer", "RayPolyline", "Resolution", "Viewport",
    "escape_data", "map_parameter_point", "trace_dynamic_ray", "trace_parameter_ray",
    "solve_center", "solve_misiurewicz", "verify_config_numeric",
]
