# services/angle_service.py
# Aritmetică exactă pe unghiuri raționale din S¹ = R/Z.
#
# Toate valorile sunt imuabile, iar toate funcțiile sunt pure. Fraction din
# biblioteca standard dă întregi de precizie arbitrară: tuning-ul dublează
# lungimea cuvintelor binare, iar numitorii depășesc rapid 64 de biți.

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Final, Tuple, Union

from exceptions import AngleError

ANGLE_PATTERN = re.compile(r"^\s*(-?\d+)\s*/\s*(-?\d+)\s*$")
COVERS_CIRCLE: Final = "covers circle"
HALF = Fraction(1, 2)


def mod1(x: Fraction) -> Fraction:
    return x - (x.numerator // x.denominator)


@dataclass(frozen=True, order=True)
class Angle:
    """Un unghi rațional redus, cu valoarea în [0, 1)."""
    value: Fraction

    def __post_init__(self):
        if not (0 <= self.value < 1):
            object.__setattr__(self, "value", mod1(Fraction(self.value)))

    @property
    def numerator(self) -> int:
        return self.value.numerator

    @property
    def denominator(self) -> int:
        return self.value.denominator

    def __str__(self) -> str:
        return f"{self.value.numerator}/{self.value.denominator}"

    def __repr__(self) -> str:
        return f"Angle({self})"

    def __float__(self) -> float:
        return float(self.value)

    @classmethod
    def parse(cls, text: str) -> "Angle":
        """Citește un unghi din forma 'p/q' (ex: '11/56')."""
        match = ANGLE_PATTERN.match(text or "")
        if not match:
            raise AngleError(f"Unghiul '{text}' nu este de forma p/q.")
        return make_angle(int(match.group(1)), int(match.group(2)))


AngleLike = Union[Angle, Fraction, str]


def as_angle(value: AngleLike) -> Angle:
    if isinstance(value, Angle):
        return value
    if isinstance(value, str):
        return Angle.parse(value)
    return Angle(mod1(Fraction(value)))


@dataclass(frozen=True)
class BinaryExpansion:
    """Dezvoltarea binară (pre)periodică: cuvântul preperiodic urmat de perioada repetată."""
    preperiod_word: str
    period_word: str

    def __post_init__(self):
        if not self.period_word:
            raise AngleError("Cuvântul periodic nu poate fi gol.")
        if set(self.preperiod_word + self.period_word) - {"0", "1"}:
            raise AngleError(f"Cifre invalide în '{self.preperiod_word}({self.period_word})'.")

    def is_canonical(self) -> bool:
        word, n = self.period_word, len(self.period_word)
        for d in range(1, n):
            if n % d == 0 and word[:d] * (n // d) == word:
                return False
        if self.preperiod_word and self.preperiod_word[-1] == word[-1]:
            return False
        return True

    def __str__(self) -> str:
        return f"{self.preperiod_word}({self.period_word})"


@dataclass(frozen=True)
class OrbitClass:
    preperiod: int
    period: int
    orbit: Tuple[Angle, ...] = field(default_factory=tuple)

    @property
    def is_periodic(self) -> bool:
        return self.preperiod == 0


@dataclass(frozen=True)
class Arc:
    """Arcul parcurs în sens trigonometric de la `start` la `end`."""
    start: Angle
    end: Angle
    includes_start: bool = False
    includes_end: bool = False

    @property
    def length(self) -> Fraction:
        return mod1(self.end.value - self.start.value)

    @classmethod
    def open(cls, start: AngleLike, end: AngleLike) -> "Arc":
        return cls(as_angle(start), as_angle(end))

    @classmethod
    def closed(cls, start: AngleLike, end: AngleLike) -> "Arc":
        return cls(as_angle(start), as_angle(end), True, True)

    def __str__(self) -> str:
        left = "[" if self.includes_start else "("
        right = "]" if self.includes_end else ")"
        return f"{left}{self.start}, {self.end}{right}"


# --- Operații ---

def make_angle(numerator: int, denominator: int) -> Angle:
    if denominator == 0:
        raise AngleError(f"Numitor zero pentru unghiul {numerator}/0.")
    return Angle(mod1(Fraction(numerator, denominator)))


def double_value(x: Fraction, k: int = 1) -> Fraction:
    """Varianta pe Fraction a lui `double`, folosită în buclele interne."""
    return mod1(x * (1 << k))


def double(a: Angle, k: int = 1) -> Angle:
    if k < 0:
        raise AngleError("Dublarea acceptă doar k >= 0.")
    return Angle(double_value(a.value, k))


def multiplicative_order_of_two(modulus: int) -> int:
    if modulus == 1:
        return 1
    order, power = 1, 2 % modulus
    while power != 1:
        power = (power * 2) % modulus
        order += 1
    return order


def preperiod_and_period(x: Fraction) -> Tuple[int, int]:
    """(l, p): l = exponentul lui 2 din numitor, p = ordinul lui 2 modulo partea impară."""
    q = x.denominator
    preperiod = (q & -q).bit_length() - 1
    return preperiod, multiplicative_order_of_two(q >> preperiod)


def orbit_classify(a: Angle) -> OrbitClass:
    preperiod, period = preperiod_and_period(a.value)
    orbit = []
    x = a.value
    for _ in range(preperiod + period + 1):
        orbit.append(Angle(x))
        x = double_value(x)
    return OrbitClass(preperiod=preperiod, period=period, orbit=tuple(orbit))


def digit_of(x: Fraction) -> str:
    """Cifra itinerarului: 0 pe [0, 1/2), 1 pe [1/2, 1)."""
    return "0" if x < HALF else "1"


def to_expansion(a: Angle) -> BinaryExpansion:
    preperiod, period = preperiod_and_period(a.value)
    digits = []
    x = a.value
    for _ in range(preperiod + period):
        digits.append(digit_of(x))
        x = double_value(x)
    word = "".join(digits)
    return BinaryExpansion(word[:preperiod], word[preperiod:])


def expansion_value(preperiod_word: str, period_word: str) -> Fraction:
    """Valoarea exactă a lui 0.pre(per)(per)... ; acceptă și forme necanonice."""
    pre_len, per_len = len(preperiod_word), len(period_word)
    pre = int(preperiod_word, 2) if preperiod_word else 0
    per = int(period_word, 2)
    cycle = (1 << per_len) - 1
    return mod1(Fraction(pre * cycle + per, cycle << pre_len))


def from_expansion(e: BinaryExpansion) -> Angle:
    return Angle(expansion_value(e.preperiod_word, e.period_word))


def value_in_arc(arc: Arc, x: Fraction) -> bool:
    start, end = arc.start.value, arc.end.value
    if x == start:
        return arc.includes_start or (start == end and arc.includes_end)
    if x == end:
        return arc.includes_end
    if start == end:
        return False
    return mod1(x - start) < mod1(end - start)


def arc_contains(arc: Arc, a: Angle) -> bool:
    return value_in_arc(arc, a.value)


def arc_image_under_doubling(arc: Arc) -> Union[Arc, str]:
    if arc.length >= HALF:
        return COVERS_CIRCLE
    return Arc(double(arc.start), double(arc.end), arc.includes_start, arc.includes_end)


def open_arcs_meet(a: Arc, b: Arc) -> bool:
    """Intersecția a două arce deschise, nevide."""
    la, lb = a.length, b.length
    if la == 0 or lb == 0:
        return False
    return mod1(b.start.value - a.start.value) < la or mod1(a.start.value - b.start.value) < lb


def angle_distance(a: AngleLike, b: AngleLike) -> Fraction:
    """Distanța pe cerc (lungimea arcului mai scurt)."""
    d = mod1(as_angle(a).value - as_angle(b).value)
    return min(d, 1 - d)
