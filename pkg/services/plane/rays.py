# /services/plane/rays.py
# Trasarea razelor externe prin continuare Newton: la fiecare pas potențialul
# scade cu factorul 2^(-1/S), iar punctul nou rezolvă f^m = țintă cu Newton
# pornind din punctul precedent.

import cmath
import logging
import math
from fractions import Fraction
from typing import Callable, Optional, Tuple

from services.angle_service import Angle, AngleLike, as_angle, double_value
from services.plane.base import RayPolyline
from settings import SolverSettings, settings

TWO_PI_I = 2j * math.pi


def _unit(x: Fraction) -> complex:
    """e^{2πix}, cu x redus exact în (−1/2, 1/2] ca razele conjugate să rămână exact conjugate."""
    if x > Fraction(1, 2):
        x -= 1
    return cmath.exp(TWO_PI_I * float(x))


def _parameter_orbit(c: complex, depth: int) -> Tuple[complex, complex]:
    """z_depth și dz/dc pentru z_0 = 0, z_{n+1} = z_n² + c."""
    z, dz = 0j, 0j
    for _ in range(depth):
        dz = 2 * z * dz + 1
        z = z * z + c
    return z, dz


def _dynamic_orbit(c: complex, w: complex, depth: int) -> Tuple[complex, complex]:
    """f_c^depth(w) și derivata în w."""
    z, dz = w, 1 + 0j
    for _ in range(depth):
        dz = 2 * z * dz
        z = z * z + c
    return z, dz


def _newton(orbit: Callable[[complex], Tuple[complex, complex]], start: complex, target: complex,
            solver: SolverSettings) -> Optional[complex]:
    x = start
    for _ in range(solver.max_newton_steps):
        value, derivative = orbit(x)
        if derivative == 0 or not cmath.isfinite(value):
            return None
        step = (value - target) / derivative
        x -= step
        if abs(step) <= solver.newton_tolerance * max(1.0, abs(x)):
            return x
    return None


def _trace(theta: Angle, solver: SolverSettings, c: Optional[complex],
           final_potential: Optional[float]) -> RayPolyline:
    final_potential = final_potential or solver.ray_final_potential
    start_potential = solver.ray_start_potential
    per_halving = solver.steps_per_halving

    point = math.exp(start_potential) * _unit(theta.value)
    ray = RayPolyline(angle=theta, points=[point], potentials=[start_potential],
                      final_potential=final_potential, c=c)

    total_steps = math.ceil(per_halving * math.log2(start_potential / final_potential))
    for k in range(1, total_steps + 1):
        level, sub = divmod(k - 1, per_halving)
        sub += 1
        # potențialul lui f^level în punctul nou: start · 2^(−sub/S)
        radius = math.exp(start_potential * 2.0 ** (-sub / per_halving))
        target = radius * _unit(double_value(theta.value, level))

        if c is None:
            orbit = lambda x, depth=level + 1: _parameter_orbit(x, depth)
        else:
            orbit = lambda x, depth=level: _dynamic_orbit(c, x, depth)

        found = _newton(orbit, point, target, solver)
        if found is None:
            ray.error = f"Newton nu a convers la pasul {k} (potențial {start_potential * 2.0 ** (-k / per_halving):.3e})."
            logging.warning(f"Raza {theta}: {ray.error}")
            break
        point = found
        ray.points.append(point)
        ray.potentials.append(start_potential * 2.0 ** (-k / per_halving))
    return ray


def trace_parameter_ray(theta: AngleLike, solver: Optional[SolverSettings] = None,
                        final_potential: Optional[float] = None) -> RayPolyline:
    return _trace(as_angle(theta), solver or settings.SOLVER, None, final_potential)


def trace_dynamic_ray(c: complex, theta: AngleLike, solver: Optional[SolverSettings] = None,
                      final_potential: Optional[float] = None) -> RayPolyline:
    return _trace(as_angle(theta), solver or settings.SOLVER, complex(c), final_potential)
