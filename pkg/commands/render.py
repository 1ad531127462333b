# commands/render.py
# Imaginea planului parametrilor sau a planului dinamic, cu suprapunerea SVG a celor opt raze.

import logging
from argparse import Namespace
from pathlib import Path
from typing import Optional

from commands.common import command_echo, load_valid_config, parse_complex
from exceptions import SurgeryError
from schemas import RenderResult, Report
from services import export_service
from services.plane.base import Resolution, Viewport
from services.plane.escape import escape_data
from services.plane.rays import trace_dynamic_ray, trace_parameter_ray
from services.plane.verification import vertex_parameters
from services.report_service import Timer, build_report
from services.surgery import EdgeConfig
from settings import Settings

# Fereastra implicită în planul parametrilor: de atâtea ori distanța dintre vârfuri
EDGE_MARGIN = 3.0


def add_parser(subparsers) -> None:
    parser = subparsers.add_parser("render", help="Randează M sau K_c cu razele configurației")
    parser.add_argument("--plane", choices=("parameter", "dynamic"), default="parameter")
    parser.add_argument("--c", help="parametrul c ca re,im (obligatoriu pentru planul dinamic)")
    parser.add_argument("--center", help="centrul ferestrei ca re,im")
    parser.add_argument("--width", type=float, help="lățimea ferestrei în planul complex")
    parser.add_argument("--pixels", type=int, nargs=2, default=(800, 600), metavar=("W", "H"))
    parser.add_argument("--png", action="store_true", help="scrie și un PNG (matplotlib)")
    parser.set_defaults(handler=run)


def default_viewport(cfg: EdgeConfig, plane: str, app_settings: Settings) -> Viewport:
    if plane == "dynamic":
        return Viewport(center_re=0.0, center_im=0.0, width=4.0)
    a, b = vertex_parameters(cfg, app_settings.SOLVER)
    middle = (a.z + b.z) / 2
    return Viewport(center_re=middle.real, center_im=middle.imag, width=EDGE_MARGIN * a.distance(b))


def resolve_viewport(args: Namespace, cfg: EdgeConfig, app_settings: Settings) -> Viewport:
    base = default_viewport(cfg, args.plane, app_settings) if args.center is None or args.width is None else None
    center = parse_complex(args.center) if args.center else complex(base.center_re, base.center_im)
    width = args.width if args.width is not None else base.width
    return Viewport(center_re=center.real, center_im=center.imag, width=width)


def run(args: Namespace, app_settings: Settings) -> Report:
    timer = Timer(app_settings.REPORT_TIMINGS)
    cfg, echo = load_valid_config(args.config)
    solver = app_settings.SOLVER

    julia_c: Optional[complex] = None
    if args.plane == "dynamic":
        if not args.c:
            raise SurgeryError("format", "Planul dinamic cere --c re,im.")
        julia_c = parse_complex(args.c)

    viewport = resolve_viewport(args, cfg, app_settings)
    resolution = Resolution(width=args.pixels[0], height=args.pixels[1])
    with timer.measure("escape"):
        buffer = escape_data(viewport, resolution, julia_c, solver=solver, workers=app_settings.RENDER_WORKERS)

    with timer.measure("rays"):
        if julia_c is None:
            rays = [trace_parameter_ray(t, solver) for t in cfg.theta]
        else:
            rays = [trace_dynamic_ray(julia_c, t, solver) for t in cfg.theta]

    out_dir = Path(args.out)
    stem = f"render_{args.plane}"
    files = [export_service.write_ppm(buffer, out_dir / f"{stem}.ppm")]
    image_href = None
    if args.png:
        png = export_service.write_png(buffer, out_dir / f"{stem}.png")
        files.append(png)
        image_href = png.name
    title = "Planul parametrilor" if julia_c is None else f"K_c pentru c = {julia_c.real:.12f}{julia_c.imag:+.12f}i"
    files.append(export_service.write_svg_overlay(
        rays, viewport, resolution.width, resolution.height, out_dir / f"{stem}.svg", title, image_href,
    ))
    logging.info(f"Randare {args.plane} terminată: {len(files)} fișiere.")

    result = RenderResult(
        plane=args.plane,
        width=resolution.width,
        height=resolution.height,
        viewport=viewport.model_dump(),
        files=[f.name for f in files],
        interior_fraction=buffer.interior_fraction,
        rays={str(ray.angle): str(ray.endpoint) for ray in rays},
    )
    return build_report(app_settings, command_echo(args), echo, result, timer=timer)
