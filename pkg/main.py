# main.py
# Punctul de intrare în linia de comandă: python main.py [--config ...] <subcomandă> ...

import argparse
import logging
import sys
from pathlib import Path
from typing import Dict, List, Optional

from pydantic import ValidationError

from commands import COMMANDS
from commands.common import command_echo
from exceptions import SurgeryError
from services.report_service import (
    EXIT_IO, build_report, error_entry, exit_code_for, exit_code_for_report, serialize, write_report,
)
from settings import Settings, apply_overrides, settings, use_settings


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="surgery",
        description="Chirurgie combinatorie pe muchiile mulțimii Mandelbrot: validare, h pe unghiuri și parametri, imagini.",
    )
    parser.add_argument("--config", default="fig2", help="fișier .json sau numele unei configurații din config/")
    parser.add_argument("--out", help="directorul pentru rapoarte și imagini (implicit OUTPUT_DIR)")
    parser.add_argument("--numeric", action="store_true", help="adaugă verificările numerice")
    parser.add_argument("--set", action="append", default=[], metavar="KEY=VALUE",
                        help="suprascrie o setare (ex: newton_tolerance=1e-14)")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for module in COMMANDS.values():
        module.add_parser(subparsers)
    return parser


def parse_overrides(pairs: List[str]) -> Dict[str, str]:
    overrides = {}
    for pair in pairs:
        key, sep, value = pair.partition("=")
        if not sep or not key.strip():
            raise SurgeryError("format", f"'{pair}' nu are forma key=value.")
        overrides[key.strip()] = value.strip()
    return overrides


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)

    try:
        app_settings: Settings = use_settings(apply_overrides(settings, parse_overrides(args.set)))
    except (SurgeryError, ValidationError, KeyError) as e:
        logging.basicConfig(level=settings.LOG_LEVEL, format="%(asctime)s - %(levelname)s - %(message)s")
        logging.error(f"Setări respinse: {e}")
        sys.stdout.write(serialize(build_report(settings, command_echo(args), errors=[error_entry(e)])))
        return EXIT_IO

    logging.basicConfig(level=app_settings.LOG_LEVEL, format="%(asctime)s - %(levelname)s - %(message)s")
    args.out = str(Path(args.out or app_settings.OUTPUT_DIR).resolve())
    try:
        report = args.handler(args, app_settings)
        code = exit_code_for_report(report)
    except (SurgeryError, ValidationError, OSError, KeyError, ValueError) as e:
        logging.error(f"Comanda {args.command} a eșuat: {e}")
        report = build_report(app_settings, command_echo(args), errors=[error_entry(e)])
        code = exit_code_for(e)

    try:
        write_report(report, Path(args.out), args.command)
    except SurgeryError as e:
        logging.error(e.detail)
        code = EXIT_IO
    sys.stdout.write(serialize(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
