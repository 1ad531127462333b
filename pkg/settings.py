# settings.py
import math
from typing import Dict

from pydantic import BaseModel, ConfigDict, Field, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class SolverSettings(BaseModel):
    """Toleranțele pentru partea numerică (raze, Newton, randare)."""
    model_config = ConfigDict(frozen=True, extra="forbid")

    newton_tolerance: float = Field(default=1e-12, gt=0)
    max_newton_steps: int = Field(default=64, gt=0)
    # raza de start 2^16: potențialul log(65536)
    ray_start_potential: float = Field(default=16 * math.log(2.0), gt=0)
    ray_final_potential: float = Field(default=1e-10, gt=0)
    steps_per_halving: int = Field(default=16, gt=0)
    escape_radius: float = Field(default=1e3, gt=0)
    max_iterations: int = Field(default=10_000, gt=0)

    # verificarea numerică a configurațiilor
    landing_tolerance: float = Field(default=1e-3, gt=0)
    landing_separation: float = Field(default=1e-3, gt=0)
    verify_final_potential: float = Field(default=1e-10, gt=0)
    seed_tolerance: float = Field(default=1e-3, gt=0)
    # deplasarea seed-ului de centru dincolo de capătul razei; componentele mici cer 0
    center_nudge: float = Field(default=0.0, ge=0)
    center_period_tolerance: float = Field(default=1e-8, gt=0)
    # centrele obținute din cele două raze ale rădăcinii trebuie să coincidă
    center_match_tolerance: float = Field(default=1e-9, gt=0)

    @model_validator(mode="after")
    def _check_potentials(self) -> "SolverSettings":
        if self.ray_final_potential >= self.ray_start_potential:
            raise ValueError("ray_final_potential trebuie să fie sub ray_start_potential")
        if self.verify_final_potential >= self.ray_start_potential:
            raise ValueError("verify_final_potential trebuie să fie sub ray_start_potential")
        return self


class Settings(BaseSettings):
    model_config = SettingsConfigDict(
        env_prefix="SURGERY_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    LOG_LEVEL: str = "INFO"
    CONFIG_DIR: str = "config"
    OUTPUT_DIR: str = "out"
    ARTIFACT_VERSION: str = "1.0.0"

    # Plafoane pentru partea exactă
    DIGIT_CYCLE_CAP: int = 100_000
    FIRST_RETURN_CAP: int = 64
    LAMINATION_MAX_PERIOD: int = 16
    CHECK_CONJUGACY: bool = True
    HOMEO_MEMO_SIZE: int = 65_536
    HOMEO_CACHE_SIZE: int = 16

    RENDER_WORKERS: int = 4
    REPORT_TIMINGS: bool = False

    SOLVER: SolverSettings = SolverSettings()


settings = Settings()


def apply_overrides(base: Settings, overrides: Dict[str, str]) -> Settings:
    """Aplică perechile key=value de la --set; cheile necunoscute sunt respinse."""
    solver_fields = set(SolverSettings.model_fields)
    app_fields = {name.lower(): name for name in Settings.model_fields if name != "SOLVER"}

    solver_updates: Dict[str, str] = {}
    app_updates: Dict[str, str] = {}
    for key, value in overrides.items():
        if key in solver_fields:
            solver_updates[key] = value
        elif key.lower() in app_fields:
            app_updates[app_fields[key.lower()]] = value
        else:
            raise KeyError(key)

    solver = SolverSettings.model_validate({**base.SOLVER.model_dump(), **solver_updates})
    data = {**base.model_dump(exclude={"SOLVER"}), **app_updates, "SOLVER": solver}
    return Settings.model_validate(data)


def use_settings(new: Settings) -> Settings:
    """Copiază valorile în instanța partajată `settings`, importată direct de servicii."""
    for name in Settings.model_fields:
        setattr(settings, name, getattr(new, name))
    return settings
