# config_loader.py
import json
import logging
from pathlib import Path
from typing import Dict, Optional

from pydantic import ValidationError

from exceptions import ReportError
from schemas import EdgeConfigFile
from settings import settings

CONFIG_PATH = Path(__file__).parent / settings.CONFIG_DIR


class ConfigLoader:
    def __init__(self, config_path: Path = CONFIG_PATH):
        self.config_path = config_path
        self._configs: Dict[str, dict] = {}
        self._load_all_configs()

    def _load_all_configs(self):
        """Încarcă toate fișierele .json din directorul de configurare."""
        for config_file in sorted(self.config_path.glob("*.json")):
            try:
                with open(config_file, "r", encoding="utf-8") as f:
                    self._configs[config_file.stem] = json.load(f)
            except (IOError, json.JSONDecodeError) as e:
                logging.warning(f"Eroare la încărcarea {config_file.name}: {e}")

    def get_config(self, name: str) -> dict:
        """Returnează configurarea pentru un nume dat (ex: 'fig2', 'fig2_tuned')."""
        return self._configs.get(name, {})

    def names(self):
        return sorted(self._configs)


# Creăm o singură instanță pe care o vom importa în restul aplicației
config_loader = ConfigLoader()


def read_config_file(path: Path) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as f:
            return json.load(f)
    except FileNotFoundError:
        raise ReportError(f"Fișierul de configurație {path} nu există.")
    except json.JSONDecodeError as e:
        raise ReportError(f"Fișierul {path} nu este JSON valid: {e}")
    except OSError as e:
        raise ReportError(f"Nu pot citi {path}: {e}")


def load_edge_config(reference: str, loader: Optional[ConfigLoader] = None) -> EdgeConfigFile:
    """Acceptă o cale către un fișier .json sau numele unei configurații din config/ (ex: 'fig2')."""
    path = Path(reference)
    if path.suffix == ".json" or path.exists():
        data = read_config_file(path)
    else:
        data = (loader or config_loader).get_config(reference)
        if not data:
            raise ReportError(f"Nu există configurația '{reference}' în {CONFIG_PATH}.")
    if not isinstance(data, dict):
        raise ReportError(f"Configurația '{reference}' trebuie să fie un obiect JSON.")
    try:
        return EdgeConfigFile.model_validate(data)
    except ValidationError:
        logging.warning(f"Configurația '{reference}' nu respectă schema.")
        raise
