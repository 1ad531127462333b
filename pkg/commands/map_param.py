# commands/map_param.py

from argparse import Namespace

from commands.common import command_echo, load_valid_config
from exceptions import AngleError
from schemas import ParameterImageResult, Report
from services.plane.mapping import map_parameter_point
from services.report_service import Timer, build_report
from services.surgery import get_surgery_homeo
from settings import Settings


def add_parser(subparsers) -> None:
    parser = subparsers.add_parser("map-param", help="Imaginea numerică h^n(c) a unui parametru")
    kind = parser.add_mutually_exclusive_group(required=True)
    kind.add_argument("--misiurewicz", metavar="THETA", help="c = γ_M(θ), θ preperiodic")
    kind.add_argument("--center", nargs=2, metavar=("P", "THETA"), help="centrul de perioadă p cu rădăcina la θ")
    parser.add_argument("--n", type=int, default=1)
    parser.set_defaults(handler=run)


def run(args: Namespace, app_settings: Settings) -> Report:
    timer = Timer(app_settings.REPORT_TIMINGS)
    if args.misiurewicz:
        kind, theta, period = "misiurewicz", args.misiurewicz, None
    else:
        kind, theta = "center", args.center[1]
        try:
            period = int(args.center[0])
        except ValueError:
            raise AngleError(f"Perioada '{args.center[0]}' nu este un număr întreg.")

    cfg, echo = load_valid_config(args.config)
    with timer.measure("map_param"):
        image = map_parameter_point(get_surgery_homeo(cfg), kind, theta, args.n, app_settings.SOLVER, period)
    result = ParameterImageResult(
        kind=kind, n=args.n,
        source_angle=str(image.source_angle), source=str(image.source),
        image_angle=str(image.image_angle), image_period=image.image_period,
        image=str(image.image), displacement=image.displacement,
    )
    return build_report(app_settings, command_echo(args), echo, result, timer=timer)
