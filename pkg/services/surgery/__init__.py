# services/surgery/__init__.py
from functools import lru_cache
from typing import List, Mapping, Optional

from services.angle_service import Angle, as_angle
from settings import settings

from .base import BaseHomeo, PiecewiseDoublingMap
from .edge_config import THETA_KEYS, EdgeConfig, validate_config
from .homeo import IdentityHomeo, SurgeryHomeo, compose
from .tuning import TuningWord, tune_angle, tune_config


def effective_angles(data: Mapping[str, str]) -> List[Angle]:
    """Cele opt unghiuri din dicționar; dacă sunt date cuvinte de tuning, unghiurile sunt întâi acordate."""
    angles = [as_angle(data[key]) for key in THETA_KEYS]
    word0, word1 = data.get("tuning_word0"), data.get("tuning_word1")
    if word0 and word1:
        word = TuningWord(word0=word0, word1=word1)
        angles = [tune_angle(word, a) for a in angles]
    return angles


def config_from_mapping(data: Mapping[str, str]) -> EdgeConfig:
    """Construiește și validează configurația dintr-un dicționar cu cheile theta*."""
    return validate_config(effective_angles(data))


def get_surgery_homeo(cfg: Optional[EdgeConfig]) -> BaseHomeo:
    if cfg is None:
        return IdentityHomeo()
    return _surgery_homeo_for(cfg)


# EdgeConfig este înghețată, deci poate fi cheie; ultimele configurații folosite rămân în memorie
@lru_cache(maxsize=settings.HOMEO_CACHE_SIZE)
def _surgery_homeo_for(cfg: EdgeConfig) -> SurgeryHomeo:
    return SurgeryHomeo.for_config(cfg)


__all__ = [
    "BaseHomeo", "PiecewiseDoublingMap", "EdgeConfig", "THETA_KEYS", "validate_config",
    "SurgeryHomeo", "IdentityHomeo", "compose", "TuningWord", "tune_config",
    "config_from_mapping", "effective_angles", "get_surgery_homeo", "tune_angle",
]
