# schemas.py

import re
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

ANGLE_TEXT = re.compile(r"^\d+/\d+$")
DIGIT_WORD = re.compile(r"^[01]+$")

# =================================================================
# Fișierul de configurație al unei muchii
# =================================================================
class EdgeConfigFile(BaseModel):
    """Cele opt unghiuri ca șiruri 'p/q' (niciodată float) și, opțional, cuvintele de tuning."""
    theta1_minus: str
    theta2_minus: str
    theta3_minus: str
    theta4_minus: str
    theta4_plus: str
    theta3_plus: str
    theta2_plus: str
    theta1_plus: str
    tuning_word0: Optional[str] = None
    tuning_word1: Optional[str] = None
    description: Optional[str] = None

    model_config = ConfigDict(extra="forbid")

    @field_validator(
        "theta1_minus", "theta2_minus", "theta3_minus", "theta4_minus",
        "theta4_plus", "theta3_plus", "theta2_plus", "theta1_plus",
    )
    @classmethod
    def _angle_text(cls, value: str) -> str:
        value = value.strip()
        if not ANGLE_TEXT.match(value) or int(value.split("/")[1]) == 0:
            raise ValueError(f"'{value}' nu este un unghi de forma p/q")
        return value

    @field_validator("tuning_word0", "tuning_word1")
    @classmethod
    def _digit_word(cls, value: Optional[str]) -> Optional[str]:
        if value is not None and not DIGIT_WORD.match(value):
            raise ValueError(f"'{value}' nu este un cuvânt binar")
        return value

    @model_validator(mode="after")
    def _words_together(self) -> "EdgeConfigFile":
        if (self.tuning_word0 is None) != (self.tuning_word1 is None):
            raise ValueError("tuning_word0 și tuning_word1 se dau împreună")
        return self

    def angles(self) -> Dict[str, str]:
        return self.model_dump(exclude={"description"}, exclude_none=True)


# =================================================================
# Rapoarte
# =================================================================
class ErrorEntry(BaseModel):
    code: str
    detail: str
    angles: List[str] = []


class SampleCheckRead(BaseModel):
    label: str
    c: str
    status: str
    pair_distances: List[float]
    min_separation: float
    failed_pairs: List[List[str]] = []
    ray_errors: List[str] = []


class NumericSection(BaseModel):
    ok: bool
    samples: List[SampleCheckRead] = []
    vertices: Dict[str, str] = {}
    vertex_ray_distances: Dict[str, float] = {}


class ValidationReport(BaseModel):
    """Câmpurile *_ok sunt null pentru verificările care nu au mai rulat."""
    valid: bool
    config: Dict[str, str]
    ordering_ok: Optional[bool] = None
    preperiodic_ok: Optional[bool] = None
    colanding_ok: Optional[bool] = None
    nonreturn_ok: Optional[bool] = None
    k_v: Optional[int] = None
    k_w: Optional[int] = None
    k_tilde_v: Optional[int] = None
    k_tilde_w: Optional[int] = None
    sigma_v: Optional[int] = None
    sigma_w: Optional[int] = None
    alpha_v: Optional[str] = None
    alpha_w: Optional[str] = None
    K_lower: Optional[str] = None
    errors: List[ErrorEntry] = []
    warnings: List[str] = []
    numeric: Optional[NumericSection] = None


class AngleImageResult(BaseModel):
    input: str
    n: int
    image: str
    preperiod_word: str
    period_word: str
    preperiod: int
    period: int
    in_support: bool


class ParameterImageResult(BaseModel):
    kind: str
    n: int
    source_angle: str
    source: str
    image_angle: str
    image_period: int
    image: str
    displacement: float


class DomainEntry(BaseModel):
    n: int
    low: str
    high: str
    distance_low: str
    distance_high: str
    parameter: Optional[str] = None


class DomainsResult(BaseModel):
    n_max: int
    monotone: bool
    domains: List[DomainEntry]
    contraction_ratios: List[str] = []


class TuneResult(BaseModel):
    word0: str
    word1: str
    output: str
    tuned: Dict[str, str]
    validation: ValidationReport


class RenderResult(BaseModel):
    plane: str
    width: int
    height: int
    viewport: Dict[str, float]
    files: List[str]
    interior_fraction: float
    rays: Dict[str, str] = {}


class RayResult(BaseModel):
    angle: str
    plane: str
    c: Optional[str] = None
    points: int
    endpoint: str
    final_potential: float
    error: Optional[str] = None
    files: List[str] = []


class Report(BaseModel):
    """Raportul comun al tuturor comenzilor; se serializează cu chei sortate."""
    artifact_version: str
    command: Dict[str, Any]
    config: Dict[str, str] = {}
    settings: Dict[str, Any] = {}
    results: Dict[str, Any] = {}
    errors: List[ErrorEntry] = []
    timings: Optional[Dict[str, float]] = Field(default=None)
