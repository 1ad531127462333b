# commands/validate.py

import logging
from argparse import Namespace

from commands.common import command_echo, load_config
from schemas import ErrorEntry, NumericSection, Report
from services.plane.rays import trace_parameter_ray
from services.plane.verification import verify_config_numeric, vertex_parameters
from services.report_service import Timer, build_report, numeric_section, validation_report
from services.surgery import EdgeConfig, effective_angles, validate_config
from settings import Settings, SolverSettings


def add_parser(subparsers) -> None:
    parser = subparsers.add_parser("validate", help="Validează configurația muchiei (combinatoric, opțional numeric)")
    parser.set_defaults(handler=run)


def numeric_validation(cfg: EdgeConfig, solver: SolverSettings) -> NumericSection:
    """Razele dinamice la centrele din E_M, plus capetele razelor de parametru la vârfuri vs. rădăcinile Newton."""
    result = verify_config_numeric(cfg, solver)
    a, b = vertex_parameters(cfg, solver)
    vertices = {"a": str(a), "b": str(b)}
    distances = {}
    for angle, vertex in ((cfg.minus[0], a), (cfg.plus[0], a), (cfg.minus[3], b), (cfg.plus[3], b)):
        ray = trace_parameter_ray(angle, solver)
        distances[str(angle)] = ray.endpoint.distance(vertex)
    section = numeric_section(result, vertices, distances)
    if any(d > solver.landing_tolerance for d in distances.values()):
        section.ok = False
    return section


def run(args: Namespace, app_settings: Settings) -> Report:
    timer = Timer(app_settings.REPORT_TIMINGS)
    data, echo = load_config(args.config)
    with timer.measure("combinatorial"):
        result = validation_report(effective_angles(data), echo)
    errors = list(result.errors)

    if result.valid and args.numeric:
        cfg = validate_config(effective_angles(data))
        with timer.measure("numeric"):
            result.numeric = numeric_validation(cfg, app_settings.SOLVER)
        if not result.numeric.ok:
            logging.warning("Verificarea numerică a eșuat pentru configurația validă combinatoric.")
            errors.append(ErrorEntry(code="numeric", detail="Razele nu aterizează pe perechi la toți parametrii testați."))

    return build_report(app_settings, command_echo(args), echo, result, errors, timer)
