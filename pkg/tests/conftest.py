# tests/conftest.py

import pytest

from services.surgery import SurgeryHomeo, validate_config
from settings import Settings, SolverSettings, settings

FIG2_ANGLES = ("11/56", "199/1008", "103/504", "23/112", "29/112", "131/504", "269/1008", "15/56")
FIG2_TUNED_ANGLES = (
    "1423/4032", "369983/1048320", "92543/262080", "5695/16128",
    "6385/16128", "103757/262080", "415217/1048320", "1597/4032",
)


@pytest.fixture(scope="session")
def fig2_angles():
    return FIG2_ANGLES


@pytest.fixture(scope="session")
def fig2_tuned_angles():
    return FIG2_TUNED_ANGLES


@pytest.fixture(scope="session")
def fig2_cfg():
    return validate_config(FIG2_ANGLES)


@pytest.fixture(scope="session")
def fig2_homeo(fig2_cfg):
    return SurgeryHomeo(fig2_cfg)


@pytest.fixture
def solver():
    return SolverSettings()


@pytest.fixture
def fast_render_solver():
    """Pentru imagini mici: puține iterații, razele rămân cu toleranțele implicite."""
    return SolverSettings(max_iterations=200)


@pytest.fixture(autouse=True)
def restore_settings():
    """main() copiază suprascrierile --set în instanța partajată; le anulăm după fiecare test."""
    saved = {name: getattr(settings, name) for name in Settings.model_fields}
    yield
    for name, value in saved.items():
        setattr(settings, name, value)
