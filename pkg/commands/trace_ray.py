# commands/trace_ray.py

from argparse import Namespace
from pathlib import Path

from commands.common import command_echo, parse_complex
from schemas import RayResult, Report
from services import export_service
from services.angle_service import Angle
from services.plane.base import Viewport
from services.plane.rays import trace_dynamic_ray, trace_parameter_ray
from services.report_service import Timer, build_report
from settings import Settings

OVERLAY_PIXELS = 600


def add_parser(subparsers) -> None:
    parser = subparsers.add_parser("trace-ray", help="Trasează o rază externă (de parametru sau dinamică)")
    parser.add_argument("theta", help="unghiul ca p/q")
    parser.add_argument("--c", help="re,im: rază dinamică pentru K_c în loc de raza de parametru")
    parser.set_defaults(handler=run)


def run(args: Namespace, app_settings: Settings) -> Report:
    timer = Timer(app_settings.REPORT_TIMINGS)
    theta = Angle.parse(args.theta)
    c = parse_complex(args.c) if args.c else None

    with timer.measure("trace"):
        if c is None:
            ray = trace_parameter_ray(theta, app_settings.SOLVER)
        else:
            ray = trace_dynamic_ray(c, theta, app_settings.SOLVER)

    plane = "dynamic" if ray.is_dynamic else "parameter"
    stem = f"ray_{plane}_{theta.numerator}_{theta.denominator}"
    out_dir = Path(args.out)
    text_file = export_service.write_ray_text(ray, out_dir / f"{stem}.txt")
    # fereastra: discul de rază 2 unde se termină raza
    viewport = Viewport(center_re=0.0, center_im=0.0, width=4.0)
    svg_file = export_service.write_svg_overlay(
        [ray], viewport, OVERLAY_PIXELS, OVERLAY_PIXELS, out_dir / f"{stem}.svg", f"Raza {theta}",
    )

    result = RayResult(
        angle=str(theta), plane=plane, c=args.c, points=len(ray.points),
        endpoint=str(ray.endpoint), final_potential=ray.final_potential, error=ray.error,
        files=[text_file.name, svg_file.name],
    )
    return build_report(app_settings, command_echo(args), results=result, timer=timer)
