# /services/surgery/base.py
from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from exceptions import SurgeryError
from services.angle_service import Angle, AngleLike, Arc, mod1, open_arcs_meet


@dataclass(frozen=True)
class AffinePiece:
    """Bucata θ ↦ slope·((θ − start) mod 1) + image_start (mod 1) pe arcul [start, start + length)."""
    start: Fraction
    length: Fraction
    slope: Fraction
    image_start: Fraction

    def contains(self, x: Fraction) -> bool:
        return mod1(x - self.start) < self.length

    def __call__(self, x: Fraction) -> Fraction:
        return mod1(self.slope * mod1(x - self.start) + self.image_start)

    @property
    def image_end(self) -> Fraction:
        return mod1(self.slope * self.length + self.image_start)


@dataclass(frozen=True)
class PiecewiseDoublingMap:
    """Aplicație continuă de grad 2 a cercului, afină pe bucăți (F, G sau G̃)."""
    name: str
    pieces: Tuple[AffinePiece, ...]

    @classmethod
    def doubling(cls) -> "PiecewiseDoublingMap":
        return cls("F", (AffinePiece(Fraction(0), Fraction(1), Fraction(2), Fraction(0)),))

    @property
    def breakpoints(self) -> Tuple[Angle, ...]:
        return tuple(Angle(p.start) for p in self.pieces)

    def piece_for(self, x: Fraction) -> AffinePiece:
        for piece in self.pieces:
            if piece.contains(x):
                return piece
        raise SurgeryError("internal", f"Niciun segment din {self.name} nu conține {x}.")

    def __call__(self, x: Fraction) -> Fraction:
        return self.piece_for(x)(x)

    def apply(self, a: Angle) -> Angle:
        return Angle(self(a.value))

    def degree(self) -> Fraction:
        return sum((p.slope * p.length for p in self.pieces), Fraction(0))

    def check_structure(self) -> None:
        """Verifică exact gradul 2, acoperirea cercului, pantele pozitive și continuitatea."""
        total = sum((p.length for p in self.pieces), Fraction(0))
        if total != 1:
            raise SurgeryError("internal", f"Segmentele lui {self.name} acoperă {total}, nu tot cercul.")
        for piece, following in zip(self.pieces, self.pieces[1:] + self.pieces[:1]):
            if piece.slope <= 0:
                raise SurgeryError("internal", f"Pantă nepozitivă în {self.name} la {piece.start}.")
            if mod1(piece.start + piece.length) != following.start:
                raise SurgeryError("internal", f"Segmente necontigue în {self.name} la {following.start}.")
            if piece.image_end != following.image_start:
                raise SurgeryError("internal", f"{self.name} nu este continuă în {following.start}.")
        if self.degree() != 2:
            raise SurgeryError("internal", f"Gradul lui {self.name} este {self.degree()}, nu 2.")


class BaseHomeo(ABC):
    """Contractul comun al homeomorfismelor cercului (pe unghiuri raționale)."""

    @abstractmethod
    def map_angle(self, t: AngleLike, n: int = 1) -> Angle:
        """Imaginea lui t prin h^n; n negativ folosește inversa."""
        raise NotImplementedError

    @abstractmethod
    def support(self) -> Tuple[Arc, ...]:
        """Arcele deschise în afara cărora h este identitatea."""
        raise NotImplementedError

    @abstractmethod
    def inverse(self) -> "BaseHomeo":
        raise NotImplementedError

    def commutes_with(self, other: "BaseHomeo") -> bool:
        """Suporturi disjuncte implică comutare; altfel nu se poate garanta."""
        return not any(open_arcs_meet(a, b) for a in self.support() for b in other.support())

    def __call__(self, t: AngleLike) -> Angle:
        return self.map_angle(t, 1)
