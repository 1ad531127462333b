# /services/plane/verification.py
# Verificarea numerică a configurațiilor: cele opt raze dinamice trebuie să aterizeze
# două câte două în patru puncte distincte, pentru parametri din E_M.

import itertools
import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from services import lamination_service
from services.angle_service import Angle, AngleLike, as_angle, preperiod_and_period
from services.plane.base import ComplexPoint
from services.plane.rays import trace_dynamic_ray
from services.plane.solvers import solve_center, solve_misiurewicz
from services.surgery.edge_config import EdgeConfig
from settings import SolverSettings, settings

SAMPLE_MAX_PERIOD = 7


@dataclass
class SampleCheck:
    label: str
    c: ComplexPoint
    pair_distances: List[float]
    landing_points: List[ComplexPoint]
    min_separation: float
    failed_pairs: List[Tuple[str, str]] = field(default_factory=list)
    ray_errors: List[str] = field(default_factory=list)
    separation_threshold: float = 1e-3

    @property
    def status(self) -> str:
        if self.failed_pairs or self.ray_errors:
            return "failed"
        if self.min_separation <= self.separation_threshold:
            return "boundary"
        return "ok"


@dataclass
class NumericReport:
    samples: List[SampleCheck]

    @property
    def ok(self) -> bool:
        return all(sample.status == "ok" for sample in self.samples)

    @property
    def failed(self) -> List[SampleCheck]:
        return [sample for sample in self.samples if sample.status == "failed"]


def check_rays_at(theta: Sequence[Angle], c: complex, label: str,
                  solver: Optional[SolverSettings] = None) -> SampleCheck:
    """Trasează cele opt raze dinamice la c și compară capetele pe perechi (Θ_i^-, Θ_i^+)."""
    solver = solver or settings.SOLVER
    ends = {}
    errors = []
    for angle in theta:
        ray = trace_dynamic_ray(c, angle, solver, final_potential=solver.verify_final_potential)
        if not ray.ok:
            errors.append(f"{angle}: {ray.error}")
        ends[angle] = ray.points[-1]

    distances, points, failed = [], [], []
    for i in range(4):
        low, high = theta[i], theta[7 - i]
        distance = abs(ends[low] - ends[high])
        distances.append(distance)
        points.append(ComplexPoint.of((ends[low] + ends[high]) / 2))
        if distance >= solver.landing_tolerance:
            failed.append((str(low), str(high)))

    separation = min(a.distance(b) for a, b in itertools.combinations(points, 2))
    check = SampleCheck(label=label, c=ComplexPoint.of(c), pair_distances=distances, landing_points=points,
                        min_separation=separation, failed_pairs=failed, ray_errors=errors,
                        separation_threshold=solver.landing_separation)
    if check.status != "ok":
        logging.warning(f"Verificare la {label} ({check.c}): {check.status}, perechi eșuate {failed}.")
    return check


def sample_parameters(cfg: EdgeConfig, solver: Optional[SolverSettings] = None,
                      max_period: int = SAMPLE_MAX_PERIOD) -> List[Tuple[str, complex]]:
    """Centrele componentelor de perioadă mică ale căror unghiuri-rădăcină stau în E-arce."""
    samples = []
    for leaf in lamination_service.build_lamination(max_period).leaves:
        if cfg.in_support(leaf.low) and cfg.in_support(leaf.high):
            center = solve_center(leaf.period, leaf.low, solver)
            samples.append((f"centru perioadă {leaf.period} ({leaf.low}, {leaf.high})", center.z))
    return samples


def verify_config_numeric(cfg: EdgeConfig, solver: Optional[SolverSettings] = None,
                          samples: Optional[List[Tuple[str, complex]]] = None) -> NumericReport:
    solver = solver or settings.SOLVER
    samples = samples if samples is not None else sample_parameters(cfg, solver)
    checks = [check_rays_at(cfg.theta, c, label, solver) for label, c in samples]
    logging.info(f"Verificare numerică: {sum(c.status == 'ok' for c in checks)}/{len(checks)} eșantioane corecte.")
    return NumericReport(samples=checks)


def vertex_parameters(cfg: EdgeConfig, solver: Optional[SolverSettings] = None) -> Tuple[ComplexPoint, ComplexPoint]:
    """Vârfurile a = γ_M(Θ_1^-) și b = γ_M(Θ_4^-)."""
    return solve_misiurewicz(cfg.minus[0], solver), solve_misiurewicz(cfg.minus[3], solver)


def centers_colanding(t1: AngleLike, t2: AngleLike, solver: Optional[SolverSettings] = None,
                      tolerance: float = 1e-9) -> bool:
    """Oracolul pentru unghiuri periodice: cele două raze duc la același centru."""
    t1, t2 = as_angle(t1), as_angle(t2)
    period = lamination_service.component_period(t1)
    if lamination_service.component_period(t2) != period:
        return False
    # doar Newton din cele două raze, fără partenerul din laminare
    first = solve_center(period, t1, solver, check_component=False)
    second = solve_center(period, t2, solver, check_component=False)
    return first.distance(second) < tolerance


def misiurewicz_colanding(t1: AngleLike, t2: AngleLike, solver: Optional[SolverSettings] = None) -> bool:
    """Oracolul pentru unghiuri preperiodice: soluțiile Newton din cele două raze coincid."""
    solver = solver or settings.SOLVER
    return solve_misiurewicz(t1, solver).distance(solve_misiurewicz(t2, solver)) < solver.landing_tolerance


def numeric_colanding(t1: AngleLike, t2: AngleLike, solver: Optional[SolverSettings] = None) -> bool:
    """Oracolul numeric potrivit tipului: centre pentru unghiuri periodice, Misiurewicz altfel."""
    t1, t2 = as_angle(t1), as_angle(t2)
    type1, type2 = preperiod_and_period(t1.value), preperiod_and_period(t2.value)
    if type1 != type2:
        return False
    if type1[0] == 0:
        return centers_colanding(t1, t2, solver)
    return misiurewicz_colanding(t1, t2, solver)
