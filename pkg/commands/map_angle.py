# commands/map_angle.py

from argparse import Namespace

from commands.common import command_echo, load_valid_config
from schemas import AngleImageResult, Report
from services.angle_service import Angle, preperiod_and_period, to_expansion
from services.report_service import Timer, build_report
from services.surgery import get_surgery_homeo
from settings import Settings


def add_parser(subparsers) -> None:
    parser = subparsers.add_parser("map-angle", help="Imaginea exactă h^n(θ) a unui unghi")
    parser.add_argument("theta", help="unghiul ca p/q")
    parser.add_argument("n", nargs="?", type=int, default=1, help="exponentul (negativ pentru h^-1)")
    parser.set_defaults(handler=run)


def run(args: Namespace, app_settings: Settings) -> Report:
    timer = Timer(app_settings.REPORT_TIMINGS)
    theta = Angle.parse(args.theta)
    cfg, echo = load_valid_config(args.config)
    homeo = get_surgery_homeo(cfg)

    with timer.measure("map_angle"):
        image = homeo.map_angle(theta, args.n)
    expansion = to_expansion(image)
    preperiod, period = preperiod_and_period(image.value)
    result = AngleImageResult(
        input=str(theta), n=args.n, image=str(image),
        preperiod_word=expansion.preperiod_word, period_word=expansion.period_word,
        preperiod=preperiod, period=period, in_support=cfg.in_support(theta),
    )
    return build_report(app_settings, command_echo(args), echo, result, timer=timer)
