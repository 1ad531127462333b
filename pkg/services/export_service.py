# services/export_service.py
# Scrierea artefactelor: imagini PPM/PNG, suprapuneri SVG cu raze, fișiere text cu raze.

import logging
from pathlib import Path
from typing import List, Optional, Sequence

import numpy as np

from exceptions import ReportError
from services.plane.base import INTERIOR, ImageBuffer, RayPolyline, Viewport
from templating import render

PALETTE_CYCLE = 64
RAY_COLORS = ("#d62728", "#ff7f0e", "#2ca02c", "#1f77b4", "#1f77b4", "#2ca02c", "#ff7f0e", "#d62728")


def colorize(buffer: ImageBuffer) -> np.ndarray:
    """Nuanțe de gri ciclice după numărul de iterații; interiorul este negru."""
    data = buffer.data
    level = (data % PALETTE_CYCLE).astype(np.float64) / (PALETTE_CYCLE - 1)
    gray = (255 * (0.35 + 0.65 * np.sqrt(level))).astype(np.uint8)
    gray[data == INTERIOR] = 0
    return np.repeat(gray[:, :, np.newaxis], 3, axis=2)


def _prepare(path: Path) -> Path:
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
    except OSError as e:
        raise ReportError(f"Nu pot crea directorul {path.parent}: {e}")
    return path


def write_ppm(buffer: ImageBuffer, path: Path) -> Path:
    path = _prepare(Path(path))
    rgb = colorize(buffer)
    header = f"P6\n{buffer.width} {buffer.height}\n255\n".encode("ascii")
    try:
        path.write_bytes(header + rgb.tobytes())
    except OSError as e:
        raise ReportError(f"Nu pot scrie {path}: {e}")
    logging.info(f"Imagine PPM scrisă: {path}")
    return path


def write_png(buffer: ImageBuffer, path: Path) -> Path:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    path = _prepare(Path(path))
    try:
        plt.imsave(path, colorize(buffer), format="png")
    except OSError as e:
        raise ReportError(f"Nu pot scrie {path}: {e}")
    logging.info(f"Imagine PNG scrisă: {path}")
    return path


def write_ray_text(ray: RayPolyline, path: Path) -> Path:
    path = _prepare(Path(path))
    try:
        path.write_text("\n".join(ray.lines()) + "\n", encoding="utf-8")
    except OSError as e:
        raise ReportError(f"Nu pot scrie {path}: {e}")
    return path


def _visible_pixels(ray: RayPolyline, viewport: Viewport, width: int, height: int):
    pixels = [viewport.to_pixel(z, width, height) for z in ray.points]
    # punctele foarte departe de imagine doar umflă fișierul
    return [(x, y) for x, y in pixels if -width <= x <= 2 * width and -height <= y <= 2 * height]


def write_svg_overlay(rays: Sequence[RayPolyline], viewport: Viewport, width: int, height: int,
                      path: Path, title: str, image_href: Optional[str] = None) -> Path:
    path = _prepare(Path(path))
    entries: List[dict] = []
    for index, ray in enumerate(rays):
        pixels = _visible_pixels(ray, viewport, width, height)
        if not pixels:
            continue
        label_x, label_y = pixels[-1]
        entries.append({
            "angle": str(ray.angle),
            "color": RAY_COLORS[index % len(RAY_COLORS)],
            "points": pixels,
            "label_x": label_x + 4,
            "label_y": label_y - 4,
        })
    svg = render("rays_overlay.svg.j2", width=width, height=height, viewport=viewport,
                 rays=entries, title=title, image_href=image_href)
    try:
        path.write_text(svg, encoding="utf-8")
    except OSError as e:
        raise ReportError(f"Nu pot scrie {path}: {e}")
    logging.info(f"Suprapunere SVG scrisă: {path} ({len(entries)} raze)")
    return path
