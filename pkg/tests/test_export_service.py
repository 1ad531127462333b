# tests/test_export_service.py

import numpy as np

from services import export_service
from services.angle_service import Angle
from services.plane.base import INTERIOR, ImageBuffer, RayPolyline, Viewport

VIEWPORT = Viewport(center_re=0.0, center_im=0.0, width=4.0)


def make_buffer(values):
    data = np.array(values, dtype=np.int32)
    return ImageBuffer(width=data.shape[1], height=data.shape[0], viewport=VIEWPORT, data=data)


def test_colorize():
    rgb = export_service.colorize(make_buffer([[INTERIOR, 0, 63, 64]]))
    assert rgb.shape == (1, 4, 3)
    assert list(rgb[0, :, 0]) == [0, 89, 255, 89]
    assert np.array_equal(rgb[..., 0], rgb[..., 2])


def test_write_ppm(tmp_path):
    path = export_service.write_ppm(make_buffer([[INTERIOR, 0]]), tmp_path / "img" / "a.ppm")
    content = path.read_bytes()
    assert content.startswith(b"P6\n2 1\n255\n")
    assert len(content) == len(b"P6\n2 1\n255\n") + 6


def test_write_png(tmp_path):
    path = export_service.write_png(make_buffer([[INTERIOR, 5], [10, 63]]), tmp_path / "a.png")
    assert path.read_bytes()[:4] == b"\x89PNG"


def test_write_ray_text(tmp_path):
    ray = RayPolyline(angle=Angle.parse("1/3"), points=[1 + 0j, 0.5 + 0.5j], potentials=[1.0, 0.5])
    path = export_service.write_ray_text(ray, tmp_path / "ray.txt")
    assert path.read_text(encoding="utf-8").splitlines() == ["1.0 0.0 1.0", "0.5 0.5 0.5"]


def test_write_svg_overlay(tmp_path):
    inside = RayPolyline(angle=Angle.parse("1/3"), points=[1 + 0j, 0.5 + 0.5j], potentials=[1.0, 0.5])
    far_away = RayPolyline(angle=Angle.parse("2/3"), points=[1e6 + 0j], potentials=[10.0])
    path = export_service.write_svg_overlay(
        [inside, far_away], VIEWPORT, 100, 100, tmp_path / "rays.svg", "Raze", "fundal.png",
    )
    svg = path.read_text(encoding="utf-8")
    assert svg.startswith("<?xml")
    assert 'data-angle="1/3"' in svg
    assert 'data-angle="2/3"' not in svg
    assert 'href="fundal.png"' in svg
    # (1, 0) -> pixelul (74.5, 49.5)
    assert "74.500,49.500" in svg
