# commands/common.py

from argparse import Namespace
from typing import Any, Dict, Tuple

from config_loader import load_edge_config
from exceptions import SurgeryError
from services.report_service import config_echo
from services.surgery import EdgeConfig, config_from_mapping


def command_echo(args: Namespace) -> Dict[str, Any]:
    """Argumentele comenzii, fără handler, pentru ecoul din raport."""
    return {key: value for key, value in sorted(vars(args).items()) if key != "handler"}


def load_config(reference: str) -> Tuple[Dict[str, str], Dict[str, str]]:
    """Datele configurației (unghiuri + cuvinte de tuning) și ecoul lor pentru raport."""
    data = load_edge_config(reference).angles()
    return data, config_echo(data)


def load_valid_config(reference: str) -> Tuple[EdgeConfig, Dict[str, str]]:
    data, echo = load_config(reference)
    return config_from_mapping(data), echo


def parse_complex(text: str) -> complex:
    """'re,im' -> complex; forma greșită este o eroare de format (cod de ieșire 2)."""
    try:
        re_text, im_text = text.split(",")
        return complex(float(re_text), float(im_text))
    except ValueError:
        raise SurgeryError("format", f"'{text}' nu are forma re,im.")
