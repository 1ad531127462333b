# /services/surgery/homeo.py
# Conjugarea H (algoritmul cifrelor), acțiunea lui h pe unghiuri și compunerea.

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from exceptions import NoCycleError, SurgeryError
from services.angle_service import (
    Angle,
    AngleLike,
    Arc,
    angle_distance,
    as_angle,
    digit_of,
    double_value,
    expansion_value,
)
from services.surgery.base import BaseHomeo, PiecewiseDoublingMap
from services.surgery.circle_maps import build_backward_map, build_forward_map
from services.surgery.edge_config import EdgeConfig
from settings import settings


def _itinerary(circle_map: PiecewiseDoublingMap, x: Fraction, cap: int) -> Tuple[str, str]:
    """Cifrele orbitei lui x sub aplicație, despărțite în (preperioadă, perioadă)."""
    seen: Dict[Fraction, int] = {}
    digits: List[str] = []
    while x not in seen:
        if len(digits) >= cap:
            raise NoCycleError(str(Angle(x)), cap)
        seen[x] = len(digits)
        digits.append(digit_of(x))
        x = circle_map(x)
    start = seen[x]
    word = "".join(digits)
    return word[:start], word[start:]


def conjugacy_image(circle_map: PiecewiseDoublingMap, t: AngleLike, cap: Optional[int] = None,
                    check: Optional[bool] = None) -> Angle:
    """H(t): cifra n este 0 dacă G^{n-1}(t) < 1/2 și 1 altfel."""
    t = as_angle(t)
    cap = cap or settings.DIGIT_CYCLE_CAP
    try:
        preperiod_word, period_word = _itinerary(circle_map, t.value, cap)
    except NoCycleError:
        logging.error(f"{circle_map.name}: orbita lui {t} nu s-a închis în {cap} pași.")
        raise
    image = expansion_value(preperiod_word, period_word)

    if settings.CHECK_CONJUGACY if check is None else check:
        # cifrele lui G(t) sunt cifrele lui t fără prima
        if preperiod_word:
            shifted = expansion_value(preperiod_word[1:], period_word)
        else:
            shifted = expansion_value("", period_word[1:] + period_word[0])
        if shifted != double_value(image):
            raise SurgeryError("conjugacy", f"H∘{circle_map.name} ≠ F∘H în {t}.")
    return Angle(image)


class SurgeryHomeo(BaseHomeo):
    """h pe unghiuri: H în E-arce, extins prin identitate în rest."""

    def __init__(self, cfg: EdgeConfig, forward: Optional[PiecewiseDoublingMap] = None,
                 backward: Optional[PiecewiseDoublingMap] = None):
        self.cfg = cfg
        self.forward = forward or build_forward_map(cfg)
        self.backward = backward or build_backward_map(cfg)
        # memorie LRU per instanță, plafonată de HOMEO_MEMO_SIZE
        self._cached_conjugacy = lru_cache(maxsize=settings.HOMEO_MEMO_SIZE)(self._conjugacy)

    @classmethod
    def for_config(cls, cfg: EdgeConfig) -> "SurgeryHomeo":
        return cls(cfg)

    def support(self) -> Tuple[Arc, ...]:
        return self.cfg.e_arcs

    def inverse(self) -> "SurgeryHomeo":
        return SurgeryHomeo(self.cfg, forward=self.backward, backward=self.forward)

    def conjugacy(self, t: AngleLike, backward: bool = False) -> Angle:
        """H(t) sau H̃(t) pe tot cercul, fără extensia prin identitate."""
        return self._cached_conjugacy(as_angle(t), backward)

    def _conjugacy(self, t: Angle, backward: bool) -> Angle:
        return conjugacy_image(self.backward if backward else self.forward, t)

    def cache_info(self):
        return self._cached_conjugacy.cache_info()

    def map_angle(self, t: AngleLike, n: int = 1) -> Angle:
        t = as_angle(t)
        if not self.cfg.in_support(t):
            return t
        for _ in range(abs(n)):
            t = self.conjugacy(t, backward=n < 0)
        return t

    def __repr__(self) -> str:
        return f"SurgeryHomeo({self.forward.name}, {self.cfg.as_dict()})"


class IdentityHomeo(BaseHomeo):
    def map_angle(self, t: AngleLike, n: int = 1) -> Angle:
        return as_angle(t)

    def support(self) -> Tuple[Arc, ...]:
        return ()

    def inverse(self) -> "IdentityHomeo":
        return self


class ComposedHomeo(BaseHomeo):
    """outer ∘ inner, evaluat leneș pe fiecare unghi."""

    def __init__(self, outer: BaseHomeo, inner: BaseHomeo):
        self.outer = outer
        self.inner = inner

    def map_angle(self, t: AngleLike, n: int = 1) -> Angle:
        t = as_angle(t)
        if n >= 0:
            for _ in range(n):
                t = self.outer.map_angle(self.inner.map_angle(t, 1), 1)
        else:
            for _ in range(-n):
                t = self.inner.map_angle(self.outer.map_angle(t, -1), -1)
        return t

    def support(self) -> Tuple[Arc, ...]:
        return self.outer.support() + self.inner.support()

    def inverse(self) -> "ComposedHomeo":
        return ComposedHomeo(self.inner.inverse(), self.outer.inverse())


def compose(h1: BaseHomeo, h2: BaseHomeo) -> BaseHomeo:
    """h1 ∘ h2."""
    if isinstance(h1, IdentityHomeo):
        return h2
    if isinstance(h2, IdentityHomeo):
        return h1
    return ComposedHomeo(h1, h2)


# --- Domenii fundamentale ---

@dataclass(frozen=True)
class FundamentalDomain:
    n: int
    low: Angle
    high: Angle
    # distanța până la perechea limită (Θ_4^± pentru n > 0, Θ_1^± pentru n < 0)
    distance_low: Fraction
    distance_high: Fraction


def fundamental_domains(homeo: SurgeryHomeo, n_max: int) -> List[FundamentalDomain]:
    """Perechile de unghiuri ale lui c_n = h^n(c_0), |n| <= n_max, cu c_0 = γ_M(Θ_2^±)."""
    if n_max < 0:
        raise SurgeryError("format", "n_max trebuie să fie nenegativ.")
    cfg = homeo.cfg
    start = (cfg.minus[1], cfg.plus[1])

    pairs: Dict[int, Tuple[Angle, Angle]] = {0: start}
    for direction in (1, -1):
        current = start
        for step in range(1, n_max + 1):
            current = tuple(homeo.map_angle(t, direction) for t in current)
            pairs[direction * step] = current

    domains = []
    for n in sorted(pairs):
        low, high = pairs[n]
        limit_low, limit_high = (cfg.minus[3], cfg.plus[3]) if n > 0 else (cfg.minus[0], cfg.plus[0])
        domains.append(FundamentalDomain(
            n=n, low=low, high=high,
            distance_low=angle_distance(low, limit_low),
            distance_high=angle_distance(high, limit_high),
        ))
    return domains


def is_monotone(domains: List[FundamentalDomain]) -> bool:
    """Extremitățile inferioare cresc strict cu n, iar cele superioare descresc strict."""
    ordered = sorted(domains, key=lambda d: d.n)
    return all(
        a.low < b.low and a.high > b.high
        for a, b in zip(ordered, ordered[1:])
    )


def contraction_ratios(domains: List[FundamentalDomain]) -> List[Fraction]:
    """Raportul distanțelor succesive la limită, pe partea Θ^-; la Fig. 2 tinde la 8."""
    positive = [d for d in domains if d.n > 0]
    negative = sorted((d for d in domains if d.n < 0), key=lambda d: -d.n)
    ratios = []
    for chain in (positive, negative):
        for a, b in zip(chain, chain[1:]):
            if b.distance_low:
                ratios.append(a.distance_low / b.distance_low)
    return ratios


# --- Date Hölder ---

@dataclass(frozen=True)
class HolderData:
    alpha_v: Fraction
    alpha_w: Fraction
    k_lower: Fraction


def holder_data(homeo: SurgeryHomeo) -> HolderData:
    cfg = homeo.cfg
    return HolderData(
        alpha_v=Fraction(cfg.k_tilde_v, cfg.k_v),
        alpha_w=Fraction(cfg.k_w, cfg.k_tilde_w),
        k_lower=max(Fraction(cfg.k_v, cfg.k_tilde_v), Fraction(cfg.k_tilde_w, cfg.k_w)),
    )


def estimate_exponent(homeo: SurgeryHomeo, n_steps: int) -> List[Tuple[float, float]]:
    """(|x − y|, log|H(x) − H(y)| / log|x − y|) cu x = extremitățile spre Θ_1^- și y = Θ_1^-."""
    anchor = homeo.cfg.minus[0]
    samples = []
    x = homeo.cfg.minus[1]
    for _ in range(n_steps):
        x = homeo.map_angle(x, -1)
        gap = angle_distance(x, anchor)
        image_gap = angle_distance(homeo.map_angle(x, 1), homeo.map_angle(anchor, 1))
        samples.append((float(gap), math.log(image_gap) / math.log(gap)))
    return samples
