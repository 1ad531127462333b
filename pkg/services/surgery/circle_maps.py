# /services/surgery/circle_maps.py
# Construcția exactă a aplicațiilor G și G̃ (valorile pe frontieră ale lui f∘η și f∘η^{-1}).

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from exceptions import ConfigValidationError
from services.angle_service import Angle, Arc, mod1, value_in_arc
from services.surgery.base import AffinePiece, PiecewiseDoublingMap
from services.surgery.edge_config import EdgeConfig


@dataclass(frozen=True)
class PieceSpec:
    """Un segment al lui G: arcul sursă, arcul țintă al lui η și datele formei compuse."""
    source_start: Fraction
    source_end: Fraction
    target_start: Fraction
    target_end: Fraction
    k_source: int
    k_target: int
    shift: Fraction


def _power_of_two(exponent: int) -> Fraction:
    return Fraction(2) ** exponent


def _affine_piece(spec: PieceSpec) -> AffinePiece:
    length = mod1(spec.source_end - spec.source_start)
    target_length = mod1(spec.target_end - spec.target_start)
    return AffinePiece(
        start=spec.source_start,
        length=length,
        slope=2 * target_length / length,
        image_start=mod1(2 * spec.target_start),
    )


def _check_composition_form(spec: PieceSpec, piece: AffinePiece, name: str) -> None:
    """η(θ) = ramura lui 2^{-(k̃-1)} în arcul țintă a lui 2^{k-1}·θ + s; se verifică la mijlocul segmentului."""
    target = Arc(Angle(spec.target_start), Angle(spec.target_end))
    if target.length >= Fraction(1, 1 << (spec.k_target - 1)):
        raise ConfigValidationError(
            "branch",
            f"{name}: arcul țintă {target} este prea lung pentru o ramură unică a lui 2^-{spec.k_target - 1}.",
            [str(target.start), str(target.end)],
        )

    expected_slope = _power_of_two(spec.k_source - spec.k_target + 1)
    if piece.slope != expected_slope:
        raise ConfigValidationError(
            "branch",
            f"{name}: panta {piece.slope} pe [{Angle(piece.start)}, ...) diferă de 2^(k-k̃+1) = {expected_slope}.",
            [str(Angle(spec.source_start)), str(Angle(spec.source_end))],
        )

    midpoint = mod1(spec.source_start + piece.length / 2)
    eta = mod1(spec.target_start + mod1(midpoint - spec.source_start) * piece.slope / 2)
    lhs = mod1(eta * (1 << (spec.k_target - 1)))
    rhs = mod1(midpoint * (1 << (spec.k_source - 1)) + spec.shift)
    if not value_in_arc(target, eta) or lhs != rhs:
        raise ConfigValidationError(
            "branch",
            f"{name}: forma afină nu coincide cu forma compusă în {Angle(midpoint)}.",
            [str(Angle(spec.source_start)), str(Angle(spec.source_end))],
        )


def _assemble(name: str, specs: List[PieceSpec], cfg: EdgeConfig) -> PiecewiseDoublingMap:
    m = [t.value for t in cfg.minus]
    p = [t.value for t in cfg.plus]

    pieces = []
    for spec in specs:
        piece = _affine_piece(spec)
        _check_composition_form(spec, piece, name)
        pieces.append(piece)

    # Între Θ_4^- și Θ_4^+, respectiv în afara lui E: dublarea obișnuită.
    pieces.insert(len(specs) // 2, AffinePiece(m[3], p[3] - m[3], Fraction(2), mod1(2 * m[3])))
    pieces.append(AffinePiece(p[0], mod1(m[0] - p[0]), Fraction(2), mod1(2 * p[0])))

    result = PiecewiseDoublingMap(name, tuple(pieces))
    result.check_structure()
    logging.debug(f"{name}: pante {[str(piece.slope) for piece in pieces]}.")
    return result


def _strip_specs(cfg: EdgeConfig, middle_source: int, middle_target: int,
                 k_outer: Tuple[int, int], k_inner: Tuple[int, int],
                 s_outer: Fraction, s_inner: Fraction) -> List[PieceSpec]:
    """Segmentele din E pe ambele părți: [Θ_1, Θ_mid) → [Θ_1, Θ_mid') și [Θ_mid, Θ_4) → [Θ_mid', Θ_4)."""
    m = [t.value for t in cfg.minus]
    p = [t.value for t in cfg.plus]
    i, j = middle_source, middle_target
    return [
        PieceSpec(m[0], m[i], m[0], m[j], *k_outer, s_outer),
        PieceSpec(m[i], m[3], m[j], m[3], *k_inner, s_inner),
        PieceSpec(p[3], p[i], p[3], p[j], *k_inner, s_inner),
        PieceSpec(p[i], p[0], p[j], p[0], *k_outer, s_outer),
    ]


def build_forward_map(cfg: EdgeConfig) -> PiecewiseDoublingMap:
    """G: V ↦ Ṽ cu panta 2^(k_v-k̃_v+1), W ↦ W̃ cu panta 2^(k_w-k̃_w+1), dublare în rest."""
    specs = _strip_specs(
        cfg, middle_source=1, middle_target=2,
        k_outer=(cfg.k_v, cfg.k_tilde_v), k_inner=(cfg.k_w, cfg.k_tilde_w),
        s_outer=cfg.s_v, s_inner=cfg.s_w,
    )
    return _assemble("G", specs, cfg)


def build_backward_map(cfg: EdgeConfig) -> PiecewiseDoublingMap:
    """G̃: rolurile lui (V, W) și (Ṽ, W̃) sunt schimbate."""
    specs = _strip_specs(
        cfg, middle_source=2, middle_target=1,
        k_outer=(cfg.k_tilde_v, cfg.k_v), k_inner=(cfg.k_tilde_w, cfg.k_w),
        s_outer=cfg.s_v, s_inner=cfg.s_w,
    )
    return _assemble("G̃", specs, cfg)
