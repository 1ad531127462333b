# services/lamination_service.py
# Structura de aterizare a razelor raționale: perechi Lavaurs pentru unghiuri
# periodice și criteriul de itinerar pentru unghiuri preperiodice.

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import Iterable, List, Optional, Tuple

from exceptions import LaminationError
from services.angle_service import (
    Angle,
    as_angle,
    double_value,
    make_angle,
    preperiod_and_period,
)
from settings import settings


@dataclass(frozen=True, order=True)
class Leaf:
    low: Angle
    high: Angle

    def __post_init__(self):
        if self.low == self.high:
            raise LaminationError("leaf", f"Frunză degenerată în {self.low}.")
        if self.high < self.low:
            low, high = self.high, self.low
            object.__setattr__(self, "low", low)
            object.__setattr__(self, "high", high)

    @property
    def period(self) -> int:
        return preperiod_and_period(self.low.value)[1]

    def separates(self, x: Fraction) -> bool:
        """True dacă x este strict în interiorul arcului (low, high)."""
        return self.low.value < x < self.high.value

    def __str__(self) -> str:
        return f"{self.low} {self.high}"


@dataclass(frozen=True)
class Lamination:
    leaves: Tuple[Leaf, ...]
    max_period: int

    def __len__(self) -> int:
        return len(self.leaves)


def leaves_link(a: Leaf, b: Leaf) -> bool:
    """Două frunze se intersectează dacă extremitățile uneia se separă de cealaltă."""
    ends_b = (b.low.value, b.high.value)
    if a.low.value in ends_b or a.high.value in ends_b:
        return False
    return a.separates(b.low.value) != a.separates(b.high.value)


def component_period(t: Angle) -> int:
    preperiod, period = preperiod_and_period(t.value)
    if preperiod:
        raise LaminationError("not_periodic", f"Unghiul {t} nu este periodic (preperioadă {preperiod}).")
    return period


def _angles_of_exact_period(period: int) -> List[Fraction]:
    modulus = (1 << period) - 1
    found = []
    for k in range(1, modulus):
        x = Fraction(k, modulus)
        if preperiod_and_period(x)[1] == period:
            found.append(x)
    return found


@lru_cache(maxsize=None)
def _leaves_up_to(period: int) -> Tuple[Tuple[Fraction, Fraction], ...]:
    """Frunzele tuturor perioadelor <= period, construite incremental (rezultatul e memorat)."""
    if period <= 1:
        return ()
    previous = _leaves_up_to(period - 1)

    # Parcurgem cercul o singură dată: extremitatea inferioară a unei frunze deschide
    # o regiune, cea superioară o închide; în fiecare regiune unghiurile noi
    # se împerechează consecutiv.
    events: List[Tuple[Fraction, int]] = [(x, 0) for x in _angles_of_exact_period(period)]
    for low, high in previous:
        events.append((low, 1))
        events.append((high, -1))
    events.sort()

    pending: List[Fraction] = [None]
    new_leaves = []
    for x, kind in events:
        if kind == 1:
            pending.append(None)
        elif kind == -1:
            if pending.pop() is not None:
                raise LaminationError("lavaurs", f"Număr impar de unghiuri de perioadă {period} într-o regiune.")
        elif pending[-1] is None:
            pending[-1] = x
        else:
            new_leaves.append((pending[-1], x))
            pending[-1] = None
    if pending != [None]:
        raise LaminationError("lavaurs", f"Împerechere incompletă la perioada {period}.")

    logging.debug(f"Laminare: {len(new_leaves)} frunze noi de perioadă {period}.")
    return previous + tuple(new_leaves)


def _check_period_bound(max_period: int) -> None:
    if max_period > settings.LAMINATION_MAX_PERIOD:
        raise LaminationError(
            "bound",
            f"Perioada {max_period} depășește limita LAMINATION_MAX_PERIOD={settings.LAMINATION_MAX_PERIOD}.",
        )


def build_lamination(max_period: int) -> Lamination:
    if max_period < 1:
        raise LaminationError("bound", "max_period trebuie să fie pozitiv.")
    _check_period_bound(max_period)
    leaves = tuple(Leaf(Angle(low), Angle(high)) for low, high in _leaves_up_to(max_period))
    return Lamination(leaves=tuple(sorted(leaves, key=lambda leaf: (leaf.period, leaf.low))), max_period=max_period)


def conjugate_periodic_angle(t: Angle) -> Angle:
    if t.value == 0:
        raise LaminationError("not_periodic", "Unghiul 0 aterizează în cuspidă și nu are partener.")
    period = component_period(t)
    _check_period_bound(period)
    for low, high in _leaves_up_to(period):
        if t.value == low:
            return Angle(high)
        if t.value == high:
            return Angle(low)
    raise LaminationError("lavaurs", f"Unghiul {t} nu a fost împerecheat.")


def _kneading_symbol(x: Fraction, t: Fraction) -> str:
    """Simbolul lui x față de diametrul {t/2, (t+1)/2} (razele care aterizează în punctul critic)."""
    low, high = t / 2, (t + 1) / 2
    if x == low or x == high:
        return "*"
    return "A" if low < x < high else "B"


def _preperiodic_colanding(t1: Fraction, t2: Fraction) -> bool:
    base = Leaf(Angle(t1), Angle(t2))
    ends = (t1, t2)
    x, y = t1, t2
    seen = set()
    while (x, y) not in seen:
        seen.add((x, y))
        if _kneading_symbol(x, t1) != _kneading_symbol(y, t1):
            return False
        x, y = double_value(x), double_value(y)
        if x == y:
            return False
        image = Leaf(Angle(x), Angle(y))
        if leaves_link(base, image):
            return False
        sides = {base.separates(z) for z in (x, y) if z not in ends}
        if len(sides) > 1:
            return False
    return True


def colanding(t1: Angle, t2: Angle) -> bool:
    """Razele de parametru la t1 și t2 aterizează în același punct al lui ∂M."""
    t1, t2 = as_angle(t1), as_angle(t2)
    if t1 == t2:
        return True
    type1, type2 = preperiod_and_period(t1.value), preperiod_and_period(t2.value)
    if type1 != type2:
        return False
    if type1[0] == 0:
        if t1.value == 0 or t2.value == 0:
            return False
        return conjugate_periodic_angle(t1) == t2
    return _preperiodic_colanding(t1.value, t2.value)


# --- Export / import ---

def export_lamination(lamination: Lamination, path: str) -> Path:
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    ordered = sorted(lamination.leaves, key=lambda leaf: (leaf.period, leaf.low))
    target.write_text("".join(f"{leaf}\n" for leaf in ordered), encoding="utf-8")
    logging.info(f"Laminare scrisă în {target} ({len(ordered)} frunze).")
    return target


def parse_leaves(lines: Iterable[str]) -> List[Leaf]:
    leaves = []
    for number, line in enumerate(lines, start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise LaminationError("format", f"Linia {number}: se așteaptă două unghiuri, nu '{line}'.")
        leaves.append(Leaf(Angle.parse(parts[0]), Angle.parse(parts[1])))
    return leaves


def import_lamination(path: str) -> Lamination:
    leaves = parse_leaves(Path(path).read_text(encoding="utf-8").splitlines())
    max_period = max((leaf.period for leaf in leaves), default=1)
    first_link = find_linked_pair(leaves)
    if first_link:
        a, b = first_link
        raise LaminationError("linked", f"Frunzele ({a}) și ({b}) se intersectează.")
    return Lamination(leaves=tuple(leaves), max_period=max_period)


def find_linked_pair(leaves: List[Leaf]) -> Optional[Tuple[Leaf, Leaf]]:
    """O singură trecere cu stivă: fiecare frunză trebuie închisă înaintea celor deschise înaintea ei."""
    # la aceeași abscisă: închiderile întâi, apoi deschiderile (cele mai lungi primele)
    events = []
    for leaf in leaves:
        events.append((leaf.low.value, 1, -leaf.high.value, leaf))
        events.append((leaf.high.value, 0, -leaf.low.value, leaf))
    events.sort(key=lambda e: e[:3])

    stack: List[Leaf] = []
    for _, opening, _, leaf in events:
        if opening:
            stack.append(leaf)
        elif stack[-1] is not leaf:
            return stack[-1], leaf
        else:
            stack.pop()
    return None


def period_angle(numerator: int, period: int) -> Angle:
    """Unghiul numerator/(2^period - 1), folosit des în teste și fixture-uri."""
    return make_angle(numerator, (1 << period) - 1)
