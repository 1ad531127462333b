# tests/test_reports.py

import json
from fractions import Fraction

import pytest
from pydantic import ValidationError

from config_loader import load_edge_config
from exceptions import (
    AngleError,
    ConfigValidationError,
    LaminationError,
    NoCycleError,
    ReportError,
    SolverError,
)
from schemas import ErrorEntry, Report
from services.report_service import (
    Timer,
    build_report,
    error_entry,
    exit_code_for,
    exit_code_for_report,
    fraction_text,
    serialize,
    validation_report,
    write_report,
)
from settings import Settings, apply_overrides, settings


# --- Setări ---

def test_overrides_reach_solver_and_app_fields():
    updated = apply_overrides(settings, {"newton_tolerance": "1e-14", "render_workers": "2"})
    assert updated.SOLVER.newton_tolerance == 1e-14
    assert updated.RENDER_WORKERS == 2
    # instanța de bază rămâne neschimbată
    assert settings.SOLVER.newton_tolerance == 1e-12


def test_unknown_override_is_rejected():
    with pytest.raises(KeyError):
        apply_overrides(settings, {"no_such_key": "1"})


@pytest.mark.parametrize("key, value", [("newton_tolerance", "-1"), ("ray_final_potential", "100"), ("render_workers", "x")])
def test_invalid_override_values(key, value):
    with pytest.raises(ValidationError):
        apply_overrides(settings, {key: value})


# --- Coduri de ieșire ---

@pytest.mark.parametrize("error, code", [
    (AngleError("x"), 2),
    (ReportError("x"), 2),
    (KeyError("x"), 2),
    (ConfigValidationError("format", "x"), 2),
    (ConfigValidationError("ordering", "x"), 1),
    (NoCycleError("1/3", 10), 1),
    (SolverError("newton", "x"), 1),
    (LaminationError("bound", "x"), 1),
])
def test_exit_code_for(error, code):
    assert exit_code_for(error) == code


def make_report(*codes):
    return Report(artifact_version="1", command={}, errors=[ErrorEntry(code=c, detail="") for c in codes])


def test_exit_code_for_report():
    assert exit_code_for_report(make_report()) == 0
    assert exit_code_for_report(make_report("colanding")) == 1
    assert exit_code_for_report(make_report("numeric", "io")) == 2


def test_error_entry():
    entry = error_entry(ConfigValidationError("colanding", "detaliu", ["11/56", "1/2"]))
    assert (entry.code, entry.angles) == ("colanding", ["11/56", "1/2"])
    assert error_entry(KeyError("abc")).code == "format"
    with pytest.raises(ValidationError) as error:
        Settings.model_validate({"RENDER_WORKERS": "x"})
    assert error_entry(error.value).code == "format"


# --- Raportul de validare ---

def test_validation_report_for_valid_config(fig2_angles):
    report = validation_report(list(fig2_angles), {})
    assert report.valid
    assert report.ordering_ok and report.preperiodic_ok and report.colanding_ok and report.nonreturn_ok
    assert (report.k_v, report.k_w, report.k_tilde_v, report.k_tilde_w) == (7, 4, 4, 7)
    assert (report.sigma_v, report.sigma_w) == (1, -1)
    assert (report.alpha_v, report.alpha_w, report.K_lower) == ("4/7", "4/7", "7/4")
    assert report.errors == [] and report.warnings == []


def test_validation_report_stops_at_failed_check(fig2_angles):
    angles = list(fig2_angles)
    angles[0] = "25/127"
    report = validation_report(angles, {})
    assert not report.valid
    assert report.ordering_ok is True
    assert report.preperiodic_ok is False
    assert report.colanding_ok is None and report.nonreturn_ok is None
    assert report.errors[0].code == "preperiodic"
    assert report.k_v is None


# --- Raportul comun ---

def test_serialize_is_deterministic():
    report = build_report(settings, {"b": 1, "a": 2}, {"theta1_minus": "11/56"})
    text = serialize(report)
    assert text == serialize(report)
    data = json.loads(text)
    assert list(data) == sorted(data)
    assert list(data["command"]) == ["a", "b"]
    assert data["timings"] is None
    assert data["settings"]["newton_tolerance"] == 1e-12


def test_write_report(tmp_path):
    path = write_report(make_report(), tmp_path / "rapoarte", "validate")
    assert path.name == "validate.json"
    assert json.loads(path.read_text(encoding="utf-8"))["artifact_version"] == "1"


def test_timer():
    assert Timer(False).result() is None
    timer = Timer(True)
    with timer.measure("pas"):
        pass
    assert list(timer.result()) == ["pas"]


def test_fraction_text():
    assert fraction_text(Fraction(8)) == "8/1"
    assert fraction_text(Fraction(4, 7)) == "4/7"


# --- Fișiere de configurație ---

def test_load_named_config():
    data = load_edge_config("fig2").angles()
    assert data["theta1_minus"] == "11/56"
    assert "description" not in data


def write_json(path, data):
    path.write_text(json.dumps(data), encoding="utf-8")
    return str(path)


def test_load_config_file(tmp_path, fig2_cfg):
    path = write_json(tmp_path / "muchie.json", fig2_cfg.as_dict())
    assert load_edge_config(path).angles() == fig2_cfg.as_dict()


@pytest.mark.parametrize("change", [
    {"theta1_minus": "0.19"},
    {"theta1_minus": "1/0"},
    {"tuning_word0": "01"},
    {"tuning_word0": "0a", "tuning_word1": "10"},
    {"extra": "1"},
])
def test_schema_errors(tmp_path, fig2_cfg, change):
    path = write_json(tmp_path / "rau.json", {**fig2_cfg.as_dict(), **change})
    with pytest.raises(ValidationError):
        load_edge_config(path)


def test_missing_or_broken_files(tmp_path):
    with pytest.raises(ReportError):
        load_edge_config("nu_exista")
    with pytest.raises(ReportError):
        load_edge_config(str(tmp_path / "lipsa.json"))
    broken = tmp_path / "stricat.json"
    broken.write_text("{", encoding="utf-8")
    with pytest.raises(ReportError):
        load_edge_config(str(broken))
