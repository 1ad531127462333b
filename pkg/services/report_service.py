# services/report_service.py
# Construirea și scrierea rapoartelor JSON (chei sortate, aceeași ieșire la rulări identice).

import json
import logging
from contextlib import contextmanager
from fractions import Fraction
from pathlib import Path
from time import perf_counter
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ValidationError

from exceptions import ConfigValidationError, NoCycleError, ReportError, SolverError, SurgeryError
from schemas import ErrorEntry, NumericSection, Report, SampleCheckRead, ValidationReport
from services.angle_service import AngleLike
from services.plane.verification import NumericReport
from services.surgery import EdgeConfig, validate_config
from services.surgery.edge_config import CHECK_ORDER, THETA_KEYS
from services.surgery.homeo import SurgeryHomeo, holder_data
from settings import Settings

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_IO = 2


def exit_code_for(error: Exception) -> int:
    if isinstance(error, SurgeryError) and error.code in ("angle", "format", "io"):
        return EXIT_IO
    if isinstance(error, (ConfigValidationError, NoCycleError, SolverError)):
        return EXIT_INVALID
    if isinstance(error, (ReportError, ValidationError, OSError, KeyError, ValueError)):
        return EXIT_IO
    # erori interne de construcție, LaminationError de perioadă
    return EXIT_INVALID


def exit_code_for_report(report: Report) -> int:
    """0 fără erori; 2 dacă vreo eroare este de format/parsare/I/O; altfel 1."""
    if not report.errors:
        return EXIT_OK
    if any(entry.code in ("angle", "format", "io") for entry in report.errors):
        return EXIT_IO
    return EXIT_INVALID


def error_entry(error: Exception) -> ErrorEntry:
    if isinstance(error, ConfigValidationError):
        return ErrorEntry(code=error.code, detail=error.detail, angles=error.angles)
    if isinstance(error, SurgeryError):
        return ErrorEntry(code=error.code, detail=error.detail)
    if isinstance(error, ValidationError):
        details = "; ".join(f"{'.'.join(str(p) for p in e['loc'])}: {e['msg']}" for e in error.errors())
        return ErrorEntry(code="format", detail=details)
    if isinstance(error, KeyError):
        return ErrorEntry(code="format", detail=f"Cheie necunoscută: {error.args[0]}")
    return ErrorEntry(code=type(error).__name__, detail=str(error))


def fraction_text(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


# =================================================================
# Raportul de validare
# =================================================================
def validation_report(angles: List[AngleLike], config_echo: Dict[str, str]) -> ValidationReport:
    """Rulează validate_config și completează câmpurile *_ok până la verificarea care a eșuat."""
    report = ValidationReport(valid=False, config=config_echo)
    try:
        cfg = validate_config(angles)
        return fill_validation(report, cfg)
    except ConfigValidationError as e:
        # "branch" apare abia la construcția lui G, după toate verificările din CHECK_ORDER
        stage = CHECK_ORDER.index(e.code) if e.code in CHECK_ORDER else (len(CHECK_ORDER) if e.code == "branch" else 0)
        flags = ("ordering_ok", "preperiodic_ok", "colanding_ok", "nonreturn_ok")
        for index, flag in enumerate(flags):
            if index < stage:
                setattr(report, flag, True)
            elif index == stage:
                setattr(report, flag, False)
        report.errors = [error_entry(e)]
        return report


def fill_validation(report: ValidationReport, cfg: EdgeConfig) -> ValidationReport:
    holder = holder_data(SurgeryHomeo(cfg))
    report.valid = True
    report.ordering_ok = report.preperiodic_ok = report.colanding_ok = report.nonreturn_ok = True
    report.k_v, report.k_w, report.k_tilde_v, report.k_tilde_w = cfg.k_v, cfg.k_w, cfg.k_tilde_v, cfg.k_tilde_w
    report.sigma_v, report.sigma_w = cfg.sigma_v, cfg.sigma_w
    report.alpha_v = fraction_text(holder.alpha_v)
    report.alpha_w = fraction_text(holder.alpha_w)
    report.K_lower = fraction_text(holder.k_lower)
    report.warnings = list(cfg.warnings)
    return report


def numeric_section(result: NumericReport, vertices: Optional[Dict[str, str]] = None,
                    vertex_distances: Optional[Dict[str, float]] = None) -> NumericSection:
    return NumericSection(
        ok=result.ok,
        samples=[
            SampleCheckRead(
                label=s.label, c=str(s.c), status=s.status,
                pair_distances=s.pair_distances, min_separation=s.min_separation,
                failed_pairs=[list(p) for p in s.failed_pairs], ray_errors=s.ray_errors,
            )
            for s in result.samples
        ],
        vertices=vertices or {},
        vertex_ray_distances=vertex_distances or {},
    )


# =================================================================
# Raportul comun
# =================================================================
class Timer:
    def __init__(self, enabled: bool):
        self.enabled = enabled
        self.timings: Dict[str, float] = {}

    @contextmanager
    def measure(self, name: str):
        start = perf_counter()
        try:
            yield
        finally:
            if self.enabled:
                self.timings[name] = round(perf_counter() - start, 6)

    def result(self) -> Optional[Dict[str, float]]:
        return self.timings if self.enabled else None


def build_report(app_settings: Settings, command: Dict[str, Any], config_echo: Optional[Dict[str, str]] = None,
                 results: Optional[BaseModel] = None, errors: Optional[List[ErrorEntry]] = None,
                 timer: Optional[Timer] = None) -> Report:
    return Report(
        artifact_version=app_settings.ARTIFACT_VERSION,
        command=command,
        config=config_echo or {},
        settings=app_settings.SOLVER.model_dump(),
        results=results.model_dump(mode="json") if results is not None else {},
        errors=errors or [],
        timings=timer.result() if timer else None,
    )


def serialize(report: Report) -> str:
    return json.dumps(report.model_dump(mode="json"), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def write_report(report: Report, out_dir: Path, name: str) -> Path:
    target = Path(out_dir) / f"{name}.json"
    try:
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_text(serialize(report), encoding="utf-8")
    except OSError as e:
        raise ReportError(f"Nu pot scrie raportul {target}: {e}")
    logging.info(f"Raport scris: {target}")
    return target


def config_echo(data: Dict[str, str]) -> Dict[str, str]:
    return {key: data[key] for key in (*THETA_KEYS, "tuning_word0", "tuning_word1") if data.get(key)}
