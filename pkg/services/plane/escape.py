# /services/plane/escape.py
# Timpul de evadare pentru M și K_c, calculat vectorizat cu numpy pe benzi de rânduri.

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Optional

import numpy as np

from services.plane.base import INTERIOR, ImageBuffer, Resolution, Viewport
from settings import SolverSettings, settings

ROWS_PER_TILE = 32


def _escape_tile(z0: np.ndarray, c: np.ndarray, cap: int, escape_radius: float) -> np.ndarray:
    z = z0.copy()
    counts = np.full(z.shape, INTERIOR, dtype=np.int32)
    active = np.ones(z.shape, dtype=bool)
    radius_sq = escape_radius * escape_radius
    for n in range(1, cap + 1):
        z[active] = z[active] * z[active] + c[active]
        escaped = active & ((z.real * z.real + z.imag * z.imag) > radius_sq)
        counts[escaped] = n
        active &= ~escaped
        if not active.any():
            break
    return counts


def escape_data(viewport: Viewport, resolution: Resolution, julia_c: Optional[complex] = None,
                cap: Optional[int] = None, solver: Optional[SolverSettings] = None,
                workers: Optional[int] = None) -> ImageBuffer:
    """Prima iterație n cu |z_n| > raza de evadare sau INTERIOR; julia_c=None înseamnă planul parametrilor."""
    solver = solver or settings.SOLVER
    cap = cap or solver.max_iterations
    workers = workers or settings.RENDER_WORKERS
    columns, rows = resolution.width, resolution.height

    def render_rows(row_start: int) -> np.ndarray:
        row_end = min(rows, row_start + ROWS_PER_TILE)
        grid = viewport.grid(columns, rows, row_start, row_end)
        if julia_c is None:
            return _escape_tile(np.zeros_like(grid), grid, cap, solver.escape_radius)
        return _escape_tile(grid, np.full_like(grid, julia_c), cap, solver.escape_radius)

    starts = list(range(0, rows, ROWS_PER_TILE))
    with ThreadPoolExecutor(max_workers=workers) as executor:
        # map păstrează ordinea benzilor, deci rezultatul nu depinde de planificare
        tiles = list(executor.map(render_rows, starts))

    data = np.vstack(tiles)
    plane = "mandelbrot" if julia_c is None else "julia"
    logging.info(f"Randare {plane} {columns}x{rows} gata ({workers} fire, {len(starts)} benzi).")
    return ImageBuffer(width=columns, height=rows, viewport=viewport, data=data, plane=plane, c=julia_c)
