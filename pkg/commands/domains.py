# commands/domains.py

import logging
from argparse import Namespace
from typing import List, Optional

from commands.common import command_echo, load_valid_config
from schemas import DomainEntry, DomainsResult, ErrorEntry, Report
from services.plane.base import ComplexPoint
from services.plane.solvers import solve_misiurewicz
from services.plane.verification import vertex_parameters
from services.report_service import Timer, build_report, fraction_text
from services.surgery import get_surgery_homeo
from services.surgery.homeo import FundamentalDomain, contraction_ratios, fundamental_domains, is_monotone
from settings import Settings, SolverSettings


def add_parser(subparsers) -> None:
    parser = subparsers.add_parser("domains", help="Domeniile fundamentale c_-n ... c_n ale lui h pe muchie")
    parser.add_argument("n_max", type=int)
    parser.set_defaults(handler=run)


def numeric_monotone(domains: List[FundamentalDomain], parameters: List[ComplexPoint],
                     a: ComplexPoint, b: ComplexPoint) -> bool:
    """Distanța până la b scade strict pentru n >= 0, iar cea până la a scade strict pentru n <= 0."""
    by_n = {d.n: p for d, p in zip(domains, parameters)}
    n_max = max(by_n)
    towards_b = [by_n[n].distance(b) for n in range(0, n_max + 1)]
    towards_a = [by_n[-n].distance(a) for n in range(0, n_max + 1)]
    return all(x > y for chain in (towards_b, towards_a) for x, y in zip(chain, chain[1:]))


def run(args: Namespace, app_settings: Settings) -> Report:
    timer = Timer(app_settings.REPORT_TIMINGS)
    cfg, echo = load_valid_config(args.config)
    homeo = get_surgery_homeo(cfg)

    with timer.measure("domains"):
        domains = fundamental_domains(homeo, args.n_max)
    monotone = is_monotone(domains)
    errors = []
    if not monotone:
        errors.append(ErrorEntry(code="monotone", detail="Extremitățile domeniilor nu sunt monotone."))

    parameters: Optional[List[ComplexPoint]] = None
    if args.numeric:
        solver: SolverSettings = app_settings.SOLVER
        with timer.measure("numeric"):
            parameters = [solve_misiurewicz(d.low, solver) for d in domains]
            a, b = vertex_parameters(cfg, solver)
        if not numeric_monotone(domains, parameters, a, b):
            logging.warning("Parametrii c_n nu se apropie monoton de vârfuri.")
            errors.append(ErrorEntry(code="monotone", detail="Parametrii c_n nu se apropie monoton de a și b."))

    result = DomainsResult(
        n_max=args.n_max,
        monotone=monotone,
        domains=[
            DomainEntry(
                n=d.n, low=str(d.low), high=str(d.high),
                distance_low=fraction_text(d.distance_low), distance_high=fraction_text(d.distance_high),
                parameter=str(parameters[index]) if parameters else None,
            )
            for index, d in enumerate(domains)
        ],
        contraction_ratios=[fraction_text(r) for r in contraction_ratios(domains)],
    )
    return build_report(app_settings, command_echo(args), echo, result, errors, timer)
