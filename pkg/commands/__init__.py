# commands/__init__.py
# Controlerele subcomenzilor; fiecare modul expune add_parser(subparsers) și run(args, app_settings) -> Report.

from . import domains, map_angle, map_param, render, trace_ray, tune, validate

# Ordinea în care apar subcomenzile în --help
COMMANDS = {
    "validate": validate,
    "map-angle": map_angle,
    "map-param": map_param,
    "domains": domains,
    "tune": tune,
    "render": render,
    "trace-ray": trace_ray,
}
