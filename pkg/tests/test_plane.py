# tests/test_plane.py

import random
from dataclasses import replace
from fractions import Fraction

import numpy as np
import pytest

from exceptions import SolverError
from services.angle_service import Angle, preperiod_and_period
from services.lamination_service import build_lamination
from services.plane import (
    INTERIOR,
    RayPolyline,
    Resolution,
    Viewport,
    escape_data,
    map_parameter_point,
    solve_center,
    solve_misiurewicz,
    trace_dynamic_ray,
    trace_parameter_ray,
    verify_config_numeric,
)
from services.plane.verification import centers_colanding, check_rays_at, vertex_parameters


def test_viewport_grid():
    viewport = Viewport(center_re=0.0, center_im=0.0, width=4.0)
    grid = viewport.grid(4, 2)
    assert grid.shape == (2, 4)
    # rândul 0 este sus
    assert grid[0, 0] == complex(-1.5, 0.5)
    assert grid[1, 3] == complex(1.5, -0.5)
    assert viewport.to_pixel(complex(-1.5, 0.5), 4, 2) == (0.0, 0.0)


def test_viewport_rejects_zero_width():
    with pytest.raises(ValueError):
        Viewport(center_re=0.0, center_im=0.0, width=0.0)


def test_escape_is_deterministic_across_workers(fast_render_solver):
    viewport = Viewport(center_re=-0.5, center_im=0.0, width=3.0)
    resolution = Resolution(width=41, height=33)
    single = escape_data(viewport, resolution, solver=fast_render_solver, workers=1)
    pooled = escape_data(viewport, resolution, solver=fast_render_solver, workers=4)
    assert np.array_equal(single.data, pooled.data)
    assert single.data.shape == (33, 41)
    assert single.data[16, 20] == INTERIOR
    assert single.data[0, 0] != INTERIOR
    assert 0 < single.interior_fraction < 1


def test_escape_dynamic_plane():
    viewport = Viewport(center_re=0.0, center_im=0.0, width=4.0)
    buffer = escape_data(viewport, Resolution(width=21, height=21), julia_c=0j, cap=100, workers=2)
    assert buffer.plane == "julia"
    assert buffer.data[10, 10] == INTERIOR
    assert buffer.data[0, 0] != INTERIOR


@pytest.mark.parametrize("point, julia_c, interior", [
    (0j, None, True),
    (1 + 0j, None, False),
    (0j, -1 + 0j, True),
])
def test_escape_single_pixel(point, julia_c, interior):
    viewport = Viewport(center_re=point.real, center_im=point.imag, width=0.01)
    buffer = escape_data(viewport, Resolution(width=1, height=1), julia_c=julia_c, cap=500, workers=1)
    assert bool(buffer.data[0, 0] == INTERIOR) is interior


@pytest.mark.numeric
@pytest.mark.parametrize("theta, landing", [("1/3", np.exp(2j * np.pi / 3)), ("1/2", -1.0)])
def test_dynamic_rays_at_zero(solver, theta, landing):
    ray = trace_dynamic_ray(0j, theta, solver, final_potential=1e-8)
    assert ray.ok
    assert abs(ray.points[-1] - landing) < 1e-6
    assert ray.potentials == sorted(ray.potentials, reverse=True)


@pytest.mark.numeric
def test_parameter_ray_conjugate_symmetry(solver):
    upper = trace_parameter_ray("1/4", solver, final_potential=1e-4)
    lower = trace_parameter_ray("3/4", solver, final_potential=1e-4)
    assert len(upper.points) == len(lower.points)
    assert abs(upper.points[-1] - lower.points[-1].conjugate()) < 1e-9


@pytest.mark.numeric
def test_solve_misiurewicz(solver):
    assert abs(solve_misiurewicz("1/2", solver).z + 2) < 1e-12
    c = solve_misiurewicz("1/4", solver).z
    assert abs(c - complex(-0.22815549365396, 1.11514250803994)) < 1e-9


@pytest.mark.numeric
def test_solve_misiurewicz_rejects_periodic(solver):
    with pytest.raises(SolverError) as error:
        solve_misiurewicz("1/3", solver)
    assert error.value.code == "not_preperiodic"


@pytest.mark.numeric
def test_solve_center(solver):
    assert abs(solve_center(2, "1/3", solver).z + 1) < 1e-10
    with pytest.raises(SolverError) as error:
        solve_center(3, "1/3", solver)
    assert error.value.code == "not_root_angle"


@pytest.mark.numeric
def test_map_center(fig2_homeo, solver):
    image = map_parameter_point(fig2_homeo, "center", "25/127", 1, solver, period=7)
    assert image.image_angle == Angle.parse("1/5")
    assert image.image_period == 4
    z, c = 0j, image.image.z
    for _ in range(4):
        z = z * z + c
    assert abs(z) < 1e-8
    assert image.displacement > 0
    assert image.image.distance(solve_center(4, "4/15", solver)) < 1e-9


@pytest.mark.numeric
def test_map_vertex_is_fixed(fig2_homeo, solver):
    image = map_parameter_point(fig2_homeo, "misiurewicz", "11/56", 1, solver)
    assert image.image_angle == image.source_angle
    assert image.displacement == 0


@pytest.mark.numeric
def test_map_center_rejects_wrong_period(fig2_homeo, solver):
    with pytest.raises(SolverError):
        map_parameter_point(fig2_homeo, "center", "25/127", 1, solver, period=4)


@pytest.mark.numeric
def test_rays_land_in_pairs_at_center(fig2_cfg, solver):
    c = solve_center(4, "1/5", solver).z
    check = check_rays_at(fig2_cfg.theta, c, "centru 1/5", solver)
    assert check.status == "ok"
    assert max(check.pair_distances) < solver.landing_tolerance

    # control negativ: 1/2 nu aterizează cu Θ_2^+
    broken = list(fig2_cfg.theta)
    broken[1] = Angle.parse("1/2")
    check = check_rays_at(broken, c, "control", solver)
    assert check.status == "failed"
    assert ("1/2", "269/1008") in check.failed_pairs


@pytest.mark.numeric
def test_verify_config_at_c4(fig2_cfg, solver):
    c4 = solve_center(4, "1/5", solver).z
    assert verify_config_numeric(fig2_cfg, solver, samples=[("c_4", c4)]).ok

    # Θ_2^- mutat cu 1/1008: 198/1008 = 33/168
    perturbed = replace(fig2_cfg, theta=(fig2_cfg.theta[0], Angle.parse("33/168"), *fig2_cfg.theta[2:]))
    report = verify_config_numeric(perturbed, solver, samples=[("c_4", c4)])
    assert not report.ok
    assert report.failed[0].failed_pairs == [("33/168", "269/1008")]


@pytest.mark.numeric
def test_dynamic_ray_maps_onto_doubled_ray(solver):
    c = -1 + 0j
    ray = trace_dynamic_ray(c, "1/3", solver, final_potential=1e-6)
    doubled = trace_dynamic_ray(c, "2/3", solver, final_potential=1e-6)
    assert ray.ok and doubled.ok
    # punctul k+S al razei θ are potențialul pe jumătate față de punctul k al razei 2θ
    shift = solver.steps_per_halving
    for k in range(1, len(doubled.points) - shift):
        w = ray.points[k + shift]
        assert abs(w * w + c - doubled.points[k]) <= 1e-8 * max(1.0, abs(doubled.points[k]))


@pytest.mark.numeric
def test_dynamic_ray_chebyshev(solver):
    # la c = −2 raza θ aterizează în 2cos(2πθ)
    ray = trace_dynamic_ray(-2 + 0j, "1/3", solver, final_potential=1e-8)
    assert ray.ok
    assert abs(ray.points[-1] + 1) < 1e-4


@pytest.mark.numeric
def test_parameter_rays_on_real_axis(solver):
    cusp = trace_parameter_ray("0/1", solver, final_potential=1e-6)
    assert cusp.ok
    end = cusp.points[-1]
    assert abs(end.imag) < 1e-12
    assert 0.25 < end.real < 0.5

    tip = trace_parameter_ray("1/2", solver)
    assert tip.ok
    assert abs(tip.points[-1] + 2) < 1e-6


@pytest.mark.numeric
@pytest.mark.parametrize("theta", ["11/56", "15/56", "23/112", "29/112", "199/1008"])
def test_vertex_rays_agree_with_newton(solver, theta):
    ray = trace_parameter_ray(theta, solver)
    c = solve_misiurewicz(theta, solver, ray=ray)
    assert abs(c.z - ray.points[-1]) < 1e-3


@pytest.mark.numeric
def test_vertex_parameters(fig2_cfg, solver):
    a, b = vertex_parameters(fig2_cfg, solver)
    assert a.distance(solve_misiurewicz("15/56", solver)) < 1e-9
    assert b.distance(solve_misiurewicz("29/112", solver)) < 1e-9
    assert a.distance(b) > 1e-3


def preperiodic_pool():
    """Unghiurile preperiodice cu numitor 2^l·(2^p − 1), l <= 3, p <= 2."""
    pool = set()
    for pre in range(1, 4):
        for per in range(1, 3):
            q = (1 << pre) * ((1 << per) - 1)
            for k in range(1, q):
                t = Angle(Fraction(k, q))
                if preperiod_and_period(t.value)[0] > 0:
                    pool.add(t)
    return sorted(pool)


@pytest.mark.numeric
def test_solver_agrees_with_ray_on_random_angles(solver):
    for theta in random.Random(3).sample(preperiodic_pool(), 20):
        ray = trace_parameter_ray(theta, solver)
        c = solve_misiurewicz(theta, solver, ray=ray)
        assert abs(c.z - ray.points[-1]) < 1e-3, theta


@pytest.mark.numeric
def test_random_leaves_land_together(solver):
    leaves = build_lamination(6).leaves
    for leaf in random.Random(17).sample(list(leaves), 50):
        assert centers_colanding(leaf.low, leaf.high, solver), str(leaf)


@pytest.mark.numeric
def test_center_is_confirmed_by_partner_ray(solver):
    lower = solve_center(7, "25/127", solver)
    upper = solve_center(7, "34/127", solver)
    assert lower.distance(upper) < 1e-9
    z = 0j
    for _ in range(7):
        z = z * z + lower.z
    assert abs(z) < 1e-8


@pytest.mark.numeric
def test_center_from_wrong_component(solver):
    # Newton pornit lângă avion (-1.7549) nu dă centrul componentei cu rădăcina la 1/7
    misleading = RayPolyline(angle=Angle.parse("1/7"), points=[-1.75 + 0j], potentials=[0.0])
    with pytest.raises(SolverError) as error:
        solve_center(3, "1/7", solver, ray=misleading)
    assert error.value.code == "wrong_component"


@pytest.mark.numeric
def test_map_center_backwards_to_c7(fig2_homeo, fig2_cfg, solver):
    image = map_parameter_point(fig2_homeo, "center", "1/5", 1, solver, period=4)
    assert image.image_angle == Angle.parse("26/127")
    assert image.image_period == 7
    assert Angle.parse("1/5") < image.image_angle < fig2_cfg.minus[3]
    z = 0j
    for _ in range(7):
        z = z * z + image.image.z
    assert abs(z) < 1e-8


@pytest.mark.numeric
def test_leaf_images_land_together(fig2_homeo, fig2_cfg, solver):
    inside = [
        leaf for leaf in build_lamination(7).leaves
        if fig2_cfg.in_support(leaf.low) and fig2_cfg.in_support(leaf.high)
    ]
    checked = 0
    for leaf in inside[:10]:
        low, high = fig2_homeo.map_angle(leaf.low), fig2_homeo.map_angle(leaf.high)
        if preperiod_and_period(low.value)[1] > 7:
            continue
        assert centers_colanding(low, high, solver)
        checked += 1
    assert checked >= 1
