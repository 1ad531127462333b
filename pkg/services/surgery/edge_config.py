# /services/surgery/edge_config.py
# Configurația unei muchii: cele opt unghiuri Θ_i^±, numerele de prima revenire și semnele.

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from exceptions import ConfigValidationError
from services import lamination_service
from services.angle_service import (
    COVERS_CIRCLE,
    Angle,
    AngleLike,
    Arc,
    arc_image_under_doubling,
    as_angle,
    double_value,
    mod1,
    open_arcs_meet,
    preperiod_and_period,
    value_in_arc,
)
from settings import settings

THETA_KEYS = (
    "theta1_minus", "theta2_minus", "theta3_minus", "theta4_minus",
    "theta4_plus", "theta3_plus", "theta2_plus", "theta1_plus",
)

# Ordinea verificărilor; codul erorii spune unde s-a oprit validarea.
CHECK_ORDER = ("ordering", "preperiodic", "colanding", "nonreturn", "first_return", "sign")

SIGN_SHIFTS = (Fraction(0), Fraction(1, 2))


def _arc_pair(a: Angle, b: Angle, c: Angle, d: Angle) -> Tuple[Arc, Arc]:
    return Arc(a, b), Arc(c, d)


@dataclass(frozen=True)
class EdgeConfig:
    theta: Tuple[Angle, ...]
    k_v: int
    k_w: int
    k_tilde_v: int
    k_tilde_w: int
    sigma_v: int
    sigma_w: int
    warnings: Tuple[str, ...] = field(default=(), compare=False)

    # Θ_1^- ... Θ_1^+ în ordinea de pe cerc
    @property
    def minus(self) -> Tuple[Angle, ...]:
        """(Θ_1^-, Θ_2^-, Θ_3^-, Θ_4^-)"""
        return self.theta[:4]

    @property
    def plus(self) -> Tuple[Angle, ...]:
        """(Θ_1^+, Θ_2^+, Θ_3^+, Θ_4^+)"""
        return tuple(reversed(self.theta[4:]))

    def as_dict(self) -> Dict[str, str]:
        return {key: str(angle) for key, angle in zip(THETA_KEYS, self.theta)}

    @property
    def v_arcs(self) -> Tuple[Arc, Arc]:
        m, p = self.minus, self.plus
        return _arc_pair(m[0], m[1], p[1], p[0])

    @property
    def w_arcs(self) -> Tuple[Arc, Arc]:
        m, p = self.minus, self.plus
        return _arc_pair(m[1], m[3], p[3], p[1])

    @property
    def v_tilde_arcs(self) -> Tuple[Arc, Arc]:
        m, p = self.minus, self.plus
        return _arc_pair(m[0], m[2], p[2], p[0])

    @property
    def w_tilde_arcs(self) -> Tuple[Arc, Arc]:
        m, p = self.minus, self.plus
        return _arc_pair(m[2], m[3], p[3], p[2])

    @property
    def e_arcs(self) -> Tuple[Arc, Arc]:
        m, p = self.minus, self.plus
        return _arc_pair(m[0], m[3], p[3], p[0])

    @property
    def s_v(self) -> Fraction:
        return Fraction(0) if self.sigma_v == 1 else Fraction(1, 2)

    @property
    def s_w(self) -> Fraction:
        return Fraction(0) if self.sigma_w == 1 else Fraction(1, 2)

    def in_support(self, t: AngleLike) -> bool:
        x = as_angle(t).value
        return any(value_in_arc(arc, x) for arc in self.e_arcs)


def _forward_orbit(x: Fraction) -> List[Fraction]:
    """Imaginile 2^n·x pentru n >= 1, până la intrarea în ciclu (inclusiv)."""
    preperiod, period = preperiod_and_period(x)
    orbit = []
    for _ in range(preperiod + period):
        x = double_value(x)
        orbit.append(x)
    return orbit


def check_ordering(theta: Sequence[Angle]) -> None:
    if len(theta) != 8:
        raise ConfigValidationError("format", f"Sunt necesare opt unghiuri, nu {len(theta)}.", [str(t) for t in theta])
    if theta[0].value == 0:
        raise ConfigValidationError("ordering", "Θ_1^- trebuie să fie strict pozitiv.", [str(theta[0])])
    for key_a, a, key_b, b in zip(THETA_KEYS, theta, THETA_KEYS[1:], theta[1:]):
        if not a < b:
            raise ConfigValidationError("ordering", f"{key_a}={a} nu este sub {key_b}={b}.", [str(a), str(b)])


def check_preperiodic(theta: Sequence[Angle]) -> None:
    periodic = [str(t) for t in theta if preperiod_and_period(t.value)[0] == 0]
    if periodic:
        raise ConfigValidationError("preperiodic", f"Unghiuri periodice în configurație: {', '.join(periodic)}.", periodic)


def check_colanding(theta: Sequence[Angle]) -> None:
    for i in range(4):
        low, high = theta[i], theta[7 - i]
        if not lamination_service.colanding(low, high):
            raise ConfigValidationError(
                "colanding", f"Razele Θ_{i + 1}^± = {low}, {high} nu aterizează împreună.", [str(low), str(high)]
            )


def check_nonreturn(theta: Sequence[Angle]) -> List[str]:
    """Nicio imagine înainte nu intră în (Θ_1^-, Θ_1^+); întoarce avertismentele pentru atingeri exacte ale lui Θ_1^±."""
    inner = Arc(theta[0], theta[7])
    warnings = []
    for key, angle in zip(THETA_KEYS, theta):
        for step, x in enumerate(_forward_orbit(angle.value), start=1):
            if value_in_arc(inner, x):
                raise ConfigValidationError(
                    "nonreturn",
                    f"{key}={angle} revine în (Θ_1^-, Θ_1^+) după {step} dublări ({Angle(x)}).",
                    [str(angle)],
                )
            if x in (theta[0].value, theta[7].value):
                message = f"Orbita lui {key}={angle} atinge exact {Angle(x)} după {step} dublări."
                logging.warning(message)
                warnings.append(message)
    return warnings


def first_return(strip: Tuple[Arc, Arc], edge: Tuple[Arc, Arc], cap: int) -> Optional[int]:
    current = list(strip)
    for k in range(1, cap + 1):
        images = []
        for arc in current:
            image = arc_image_under_doubling(arc)
            if image == COVERS_CIRCLE:
                return k
            images.append(image)
        if any(open_arcs_meet(image, target) for image in images for target in edge):
            return k
        current = images
    return None


def first_return_numbers(theta: Sequence[Angle]) -> Tuple[int, int, int, int]:
    m, p = theta[:4], tuple(reversed(theta[4:]))
    edge = _arc_pair(m[0], m[3], p[3], p[0])
    strips = {
        "V": _arc_pair(m[0], m[1], p[1], p[0]),
        "W": _arc_pair(m[1], m[3], p[3], p[1]),
        "Ṽ": _arc_pair(m[0], m[2], p[2], p[0]),
        "W̃": _arc_pair(m[2], m[3], p[3], p[2]),
    }
    numbers = []
    for name, strip in strips.items():
        k = first_return(strip, edge, settings.FIRST_RETURN_CAP)
        if k is None:
            raise ConfigValidationError(
                "first_return",
                f"Fâșia {name} nu revine în E în {settings.FIRST_RETURN_CAP} dublări.",
                [str(arc) for arc in strip],
            )
        numbers.append(k)
    return tuple(numbers)


def find_sign_shift(pairs: Sequence[Tuple[Fraction, Fraction]], k_source: int, k_target: int) -> Optional[Fraction]:
    """s ∈ {0, 1/2} cu 2^(k-1)·x + s ≡ 2^(k̃-1)·y (mod 1) pentru toate perechile (x, y)."""
    for shift in SIGN_SHIFTS:
        if all(
            mod1(x * (1 << (k_source - 1)) + shift) == mod1(y * (1 << (k_target - 1)))
            for x, y in pairs
        ):
            return shift
    return None


def determine_signs(theta: Sequence[Angle], k_v: int, k_w: int, k_tilde_v: int, k_tilde_w: int) -> Tuple[int, int]:
    m = [t.value for t in theta[:4]]
    p = [t.value for t in reversed(theta[4:])]
    sides = (m, p)

    v_pairs = [pair for side in sides for pair in ((side[0], side[0]), (side[1], side[2]))]
    w_pairs = [pair for side in sides for pair in ((side[3], side[3]), (side[1], side[2]))]

    s_v = find_sign_shift(v_pairs, k_v, k_tilde_v)
    if s_v is None:
        raise ConfigValidationError("sign", "Nu există semn pentru fâșia V (Θ_1 fix, Θ_2 ↦ Θ_3).", [str(t) for t in theta])
    s_w = find_sign_shift(w_pairs, k_w, k_tilde_w)
    if s_w is None:
        raise ConfigValidationError("sign", "Nu există semn pentru fâșia W (Θ_4 fix, Θ_2 ↦ Θ_3).", [str(t) for t in theta])
    return (1 if s_v == 0 else -1), (1 if s_w == 0 else -1)


def validate_config(theta: Sequence[AngleLike]) -> EdgeConfig:
    angles = tuple(as_angle(t) for t in theta)
    try:
        check_ordering(angles)
        check_preperiodic(angles)
        check_colanding(angles)
        warnings = check_nonreturn(angles)
        k_v, k_w, k_tilde_v, k_tilde_w = first_return_numbers(angles)
        sigma_v, sigma_w = determine_signs(angles, k_v, k_w, k_tilde_v, k_tilde_w)
    except ConfigValidationError as e:
        logging.warning(f"Configurație invalidă ({e.code}): {e.detail}")
        raise

    cfg = EdgeConfig(
        theta=angles,
        k_v=k_v, k_w=k_w, k_tilde_v=k_tilde_v, k_tilde_w=k_tilde_w,
        sigma_v=sigma_v, sigma_w=sigma_w,
        warnings=tuple(warnings),
    )
    logging.info(
        f"Configurație validă: k=({k_v},{k_w},{k_tilde_v},{k_tilde_w}), σ=({sigma_v:+d},{sigma_w:+d})."
    )
    return cfg
