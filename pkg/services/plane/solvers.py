# /services/plane/solvers.py
# Newton pentru puncte Misiurewicz și centre; rădăcina corectă este aleasă
# mereu prin capătul razei de parametru, niciodată prin enumerarea rădăcinilor.

import logging
from typing import Dict, Optional, Tuple

from exceptions import LaminationError, SolverError
from services import lamination_service
from services.angle_service import Angle, AngleLike, as_angle, preperiod_and_period
from services.plane.base import ComplexPoint, RayPolyline
from services.plane.rays import trace_parameter_ray
from settings import SolverSettings, settings


def _critical_orbit(c: complex, length: int):
    """Lista (z_n, dz_n/dc) pentru n = 0..length, cu z_0 = 0."""
    z, dz = 0j, 0j
    orbit = [(z, dz)]
    for _ in range(length):
        dz = 2 * z * dz + 1
        z = z * z + c
        orbit.append((z, dz))
    return orbit


def _newton(residual, seed: complex, solver: SolverSettings, label: str) -> Tuple[complex, float]:
    c = seed
    for step in range(1, solver.max_newton_steps + 1):
        value, derivative = residual(c)
        if derivative == 0:
            break
        delta = value / derivative
        c -= delta
        if abs(delta) <= solver.newton_tolerance:
            return c, abs(residual(c)[0])
    raise SolverError(
        "newton",
        f"{label}: Newton nu a convers în {solver.max_newton_steps} pași.",
        {"seed": str(ComplexPoint.of(seed)), "last": str(ComplexPoint.of(c))},
    )


def _check_seed(c: complex, seed: complex, solver: SolverSettings, label: str, diagnostics: Dict) -> None:
    if abs(c - seed) >= solver.seed_tolerance:
        diagnostics.update({"distance_to_seed": abs(c - seed)})
        logging.error(f"{label}: rădăcina {ComplexPoint.of(c)} este departe de capătul razei.")
        raise SolverError("seed_mismatch", f"{label}: rădăcina nu corespunde razei.", diagnostics)


def solve_misiurewicz(theta: AngleLike, solver: Optional[SolverSettings] = None,
                      ray: Optional[RayPolyline] = None) -> ComplexPoint:
    """Rezolvă f^{l+p}(c) = f^l(c) pornind din capătul razei de parametru θ."""
    solver = solver or settings.SOLVER
    theta = as_angle(theta)
    preperiod, period = preperiod_and_period(theta.value)
    if preperiod == 0:
        raise SolverError("not_preperiodic", f"Unghiul {theta} este periodic; folosiți solve_center.")
    label = f"Misiurewicz({theta})"

    ray = ray or trace_parameter_ray(theta, solver)
    seed = ray.points[-1]
    diagnostics = {"seed": str(ComplexPoint.of(seed)), "preperiod": preperiod, "period": period,
                   "ray_ok": ray.ok}

    def residual(c: complex):
        orbit = _critical_orbit(c, preperiod + period + 1)
        (z_a, dz_a), (z_b, dz_b) = orbit[preperiod + period + 1], orbit[preperiod + 1]
        return z_a - z_b, dz_a - dz_b

    c, size = _newton(residual, seed, solver, label)
    diagnostics["residual"] = size
    _check_seed(c, seed, solver, label, diagnostics)

    # preperioada trebuie să fie exact l; perioada punctului doar divide p
    # (mai multe raze pot ateriza în același punct al ciclului)
    orbit = [z for z, _ in _critical_orbit(c, preperiod + period + 1)]
    if abs(orbit[preperiod] - orbit[preperiod + period]) < solver.center_period_tolerance:
        raise SolverError("wrong_root", f"{label}: preperioada soluției este sub {preperiod}.", diagnostics)

    logging.debug(f"{label} = {ComplexPoint.of(c)} (|P| = {size:.2e}).")
    return ComplexPoint.of(c)


def _center_from_ray(period: int, seed_angle: Angle, solver: SolverSettings,
                     ray: Optional[RayPolyline], label: str) -> Tuple[complex, Dict]:
    """Newton pe f_c^period(0) = 0 din capătul razei, cu verificarea perioadei exacte."""
    ray = ray or trace_parameter_ray(seed_angle, solver)
    end = ray.points[-1]
    before = ray.points[-2] if len(ray.points) > 1 else 0j
    direction = end - before
    seed = end + solver.center_nudge * direction / abs(direction) if abs(direction) > 0 else end
    diagnostics = {"seed": str(ComplexPoint.of(seed)), "ray_end": str(ComplexPoint.of(end)), "ray_ok": ray.ok}

    def residual(c: complex):
        z, dz = _critical_orbit(c, period)[-1]
        return z, dz

    c, size = _newton(residual, seed, solver, label)
    diagnostics["residual"] = size

    orbit = [z for z, _ in _critical_orbit(c, period)]
    for divisor in range(1, period):
        if period % divisor == 0 and abs(orbit[divisor]) < solver.center_period_tolerance:
            raise SolverError("wrong_root", f"{label}: centrul are perioada {divisor}.", diagnostics)
    multiplier = 1 + 0j
    for z in orbit[1:]:
        multiplier *= 2 * z
    diagnostics["multiplier"] = abs(multiplier)
    if abs(multiplier) >= solver.center_period_tolerance:
        raise SolverError("not_superattracting", f"{label}: multiplicatorul {abs(multiplier):.2e} nu este ~0.", diagnostics)
    return c, diagnostics


def _root_partner(seed_angle: Angle, label: str) -> Optional[Angle]:
    """Celălalt unghi al rădăcinii; None pentru cardioidă sau peste plafonul laminării."""
    if seed_angle.value == 0:
        return None
    try:
        return lamination_service.conjugate_periodic_angle(seed_angle)
    except LaminationError as e:
        logging.warning(f"{label}: fără verificarea componentei ({e}).")
        return None


def solve_center(period: int, seed_angle: AngleLike, solver: Optional[SolverSettings] = None,
                 ray: Optional[RayPolyline] = None, check_component: bool = True) -> ComplexPoint:
    """Centrul componentei de perioadă `period` a cărei rădăcină primește raza seed_angle.

    Componenta este confirmată prin raza partenerului Lavaurs: Newton pornit din
    capătul ei trebuie să ajungă în același centru.
    """
    solver = solver or settings.SOLVER
    seed_angle = as_angle(seed_angle)
    preperiod, angle_period = preperiod_and_period(seed_angle.value)
    if preperiod or angle_period != period:
        raise SolverError(
            "not_root_angle",
            f"Unghiul {seed_angle} are tipul ({preperiod}, {angle_period}), nu este periodic de perioadă {period}.",
        )
    label = f"Centru({period}, {seed_angle})"

    c, diagnostics = _center_from_ray(period, seed_angle, solver, ray, label)

    partner = _root_partner(seed_angle, label) if check_component else None
    if partner is not None:
        other, _ = _center_from_ray(period, partner, solver, None, f"Centru({period}, {partner})")
        diagnostics.update({"partner": str(partner), "partner_center": str(ComplexPoint.of(other))})
        if abs(other - c) >= solver.center_match_tolerance:
            logging.error(f"{label}: centrul {ComplexPoint.of(c)} nu este atins și din raza {partner}.")
            raise SolverError("wrong_component", f"{label}: centrul găsit aparține altei componente.", diagnostics)

    logging.debug(f"{label} = {ComplexPoint.of(c)}.")
    return ComplexPoint.of(c)
