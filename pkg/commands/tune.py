# commands/tune.py

import json
import logging
from argparse import Namespace
from pathlib import Path

from commands.common import command_echo, load_valid_config
from exceptions import ReportError
from schemas import EdgeConfigFile, Report, TuneResult
from services.report_service import Timer, build_report, validation_report
from services.surgery import TuningWord, tune_config
from services.surgery.edge_config import THETA_KEYS
from settings import Settings


def add_parser(subparsers) -> None:
    parser = subparsers.add_parser("tune", help="Tuning: 0 -> word0, 1 -> word1 în toate cele opt unghiuri")
    parser.add_argument("word0")
    parser.add_argument("word1")
    parser.add_argument("--name", help="numele fișierului de ieșire (implicit <config>_tuned)")
    parser.set_defaults(handler=run)


def write_config(config_file: EdgeConfigFile, path: Path) -> Path:
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(
            json.dumps(config_file.model_dump(exclude_none=True), indent=2, ensure_ascii=False) + "\n",
            encoding="utf-8",
        )
    except OSError as e:
        raise ReportError(f"Nu pot scrie configurația {path}: {e}")
    logging.info(f"Configurație acordată scrisă: {path}")
    return path


def run(args: Namespace, app_settings: Settings) -> Report:
    timer = Timer(app_settings.REPORT_TIMINGS)
    word = TuningWord(word0=args.word0, word1=args.word1)
    cfg, echo = load_valid_config(args.config)

    with timer.measure("tune"):
        tuned = tune_config(word, cfg)
    angles = tuned.as_dict()
    config_file = EdgeConfigFile(
        **angles,
        description=f"{Path(args.config).stem} după tuning cu ({word.word0}, {word.word1}); generat de comanda tune",
    )
    name = args.name or f"{Path(args.config).stem}_tuned"
    target = write_config(config_file, Path(args.out) / f"{name}.json")

    result = TuneResult(
        word0=word.word0, word1=word.word1, output=target.name, tuned=angles,
        validation=validation_report([angles[key] for key in THETA_KEYS], angles),
    )
    return build_report(app_settings, command_echo(args), echo, result, timer=timer)
