# /services/plane/mapping.py
# h pe parametri: unghiurile care identifică punctul trec prin map_angle, apoi se rezolvă din nou.

import logging
from dataclasses import dataclass
from typing import Literal, Optional

from exceptions import SolverError
from services.angle_service import Angle, AngleLike, as_angle, preperiod_and_period
from services.plane.base import ComplexPoint
from services.plane.solvers import solve_center, solve_misiurewicz
from services.surgery.base import BaseHomeo
from settings import SolverSettings, settings

ParameterKind = Literal["misiurewicz", "center"]


@dataclass
class ParameterImage:
    kind: ParameterKind
    source_angle: Angle
    source: ComplexPoint
    image_angle: Angle
    image: ComplexPoint
    image_period: int
    n: int

    @property
    def displacement(self) -> float:
        return self.source.distance(self.image)


def solve_parameter(kind: ParameterKind, theta: Angle, solver: SolverSettings) -> ComplexPoint:
    _, period = preperiod_and_period(theta.value)
    if kind == "misiurewicz":
        return solve_misiurewicz(theta, solver)
    if kind == "center":
        return solve_center(period, theta, solver)
    raise SolverError("kind", f"Tip de parametru necunoscut: {kind}.")


def map_parameter_point(homeo: BaseHomeo, kind: ParameterKind, theta: AngleLike, n: int = 1,
                        solver: Optional[SolverSettings] = None, period: Optional[int] = None) -> ParameterImage:
    """h^n(c) pentru c = γ_M(θ) (Misiurewicz) sau centrul componentei cu rădăcina la θ."""
    solver = solver or settings.SOLVER
    theta = as_angle(theta)
    if kind == "center" and period is not None and preperiod_and_period(theta.value) != (0, period):
        raise SolverError("not_root_angle", f"Unghiul {theta} nu are perioada {period}.")

    image_angle = homeo.map_angle(theta, n)
    source = solve_parameter(kind, theta, solver)
    image = source if image_angle == theta else solve_parameter(kind, image_angle, solver)
    result = ParameterImage(
        kind=kind, source_angle=theta, source=source, image_angle=image_angle, image=image,
        image_period=preperiod_and_period(image_angle.value)[1], n=n,
    )
    logging.info(f"h^{n}: {kind} {theta} -> {image_angle}, {source} -> {image}.")
    return result
