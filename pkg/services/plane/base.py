# /services/plane/base.py
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from services.angle_service import Angle

# Valoarea din ImageBuffer pentru pixelii care nu evadează în limita de iterații
INTERIOR = -1


@dataclass(frozen=True)
class ComplexPoint:
    re: float
    im: float

    @classmethod
    def of(cls, z: complex) -> "ComplexPoint":
        return cls(float(z.real), float(z.imag))

    @property
    def z(self) -> complex:
        return complex(self.re, self.im)

    def distance(self, other: "ComplexPoint") -> float:
        return abs(self.z - other.z)

    def __str__(self) -> str:
        return f"{self.re:.13f}{self.im:+.13f}i"


@dataclass
class RayPolyline:
    """Punctele razei, cu potențial descrescător; ultimul aproximează punctul de aterizare."""
    angle: Angle
    points: List[complex] = field(default_factory=list)
    potentials: List[float] = field(default_factory=list)
    final_potential: float = 0.0
    c: Optional[complex] = None
    error: Optional[str] = None

    @property
    def endpoint(self) -> ComplexPoint:
        return ComplexPoint.of(self.points[-1])

    @property
    def is_dynamic(self) -> bool:
        return self.c is not None

    @property
    def ok(self) -> bool:
        return self.error is None

    def lines(self) -> List[str]:
        """Formatul text: 're im potential' pe fiecare linie."""
        return [f"{z.real!r} {z.imag!r} {g!r}" for z, g in zip(self.points, self.potentials)]


class Viewport(BaseModel):
    model_config = ConfigDict(frozen=True)

    center_re: float
    center_im: float
    width: float = Field(gt=0)

    def pixel_size(self, columns: int) -> float:
        return self.width / columns

    def grid(self, columns: int, rows: int, row_start: int = 0, row_end: Optional[int] = None) -> np.ndarray:
        """Centrele pixelilor: coloana i la re = centru + (i − (w−1)/2)·px; rândul 0 este sus."""
        row_end = rows if row_end is None else row_end
        px = self.pixel_size(columns)
        re = self.center_re + (np.arange(columns) - (columns - 1) / 2.0) * px
        im = self.center_im + ((rows - 1) / 2.0 - np.arange(row_start, row_end)) * px
        return re[np.newaxis, :] + 1j * im[:, np.newaxis]

    def to_pixel(self, z: complex, columns: int, rows: int) -> Tuple[float, float]:
        """Coordonatele (x, y) în pixeli pentru suprapunerea SVG."""
        px = self.pixel_size(columns)
        x = (z.real - self.center_re) / px + (columns - 1) / 2.0
        y = (rows - 1) / 2.0 - (z.imag - self.center_im) / px
        return x, y


class Resolution(BaseModel):
    model_config = ConfigDict(frozen=True)

    width: int = Field(gt=0)
    height: int = Field(gt=0)


@dataclass
class ImageBuffer:
    width: int
    height: int
    viewport: Viewport
    data: np.ndarray
    plane: str = "mandelbrot"
    c: Optional[complex] = None

    @property
    def interior_fraction(self) -> float:
        return float(np.mean(self.data == INTERIOR))
