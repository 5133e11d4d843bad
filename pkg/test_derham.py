#!/usr/bin/env python3
"""
Test script for the smooth-model quadrature
Tests the bump and its primitive, the inner integrals and both evaluations of μ
"""

import sys

import numpy as np
import pytest
from pydantic import ValidationError
from scipy.integrate import trapezoid
from scipy.interpolate import make_interp_spline

from models.quadrature import Grid1D, Profile
from repository.derham import (
    bump_profile,
    convergence_check,
    make_grid,
    moment_checks,
    mu_direct_fullplane,
    mu_direct_halfplane,
    mu_total_and_halfplane,
    primitive,
    theta_support_check,
    u_integrals,
)
from repository.exceptions import ArgumentError

EPS = 0.1
TWELFTH = 1.0 / 12.0


@pytest.fixture(scope="module")
def setup():
    grid = make_grid(EPS, 200)
    phi = bump_profile(EPS, grid)
    return grid, phi, primitive(phi)


def test_grid_shape():
    grid = make_grid(EPS, 200)
    assert grid.samples == 1201
    assert grid.points[grid.mid] == 0.0
    assert abs(grid.points[-1] - 3 * EPS) < 1e-12
    with pytest.raises(ValidationError):
        Grid1D(half_width=1.0, step=0.5, samples=4)
    with pytest.raises(ArgumentError):
        make_grid(0.0, 200)


def test_under_resolved_grid_rejected():
    with pytest.raises(ArgumentError):
        bump_profile(EPS, make_grid(EPS, 100))
    with pytest.raises(ArgumentError):
        bump_profile(EPS, make_grid(EPS, 200), shape="boxcar")


def test_profile_length_checked():
    grid = make_grid(EPS, 200)
    with pytest.raises(ValidationError):
        Profile(grid=grid, values=np.zeros(10))


def test_bump_properties(setup):
    grid, phi, _ = setup
    assert abs(trapezoid(phi.values, dx=grid.step) - 1.0) < 1e-12
    assert abs(phi.values[grid.index_of(EPS)]) < 1e-12
    assert abs(phi.values[grid.index_of(-EPS)]) < 1e-12
    assert np.allclose(phi.values, phi.values[::-1], rtol=0, atol=1e-12)
    assert phi.values.min() >= 0


def test_primitive_properties(setup):
    grid, _, F = setup
    assert F.values[0] == 0.0
    assert abs(F.values[-1] - 1.0) < 1e-12
    assert abs(F.values[grid.mid] - 0.5) < 1e-10
    assert np.diff(F.values).min() > -1e-8
    assert theta_support_check(F, EPS)


def test_moments(setup):
    _, phi, F = setup
    m1, m2 = moment_checks(phi, F)
    assert abs(m1 - 0.5) < 1e-8
    assert abs(m2 - 1.0 / 3.0) < 1e-8


def test_moment_of_scaled_bump(setup):
    _, phi, _ = setup
    doubled = phi.scaled(2.0)
    m1, _ = moment_checks(doubled, primitive(doubled))
    assert abs(m1 - 2.0) < 1e-8


def test_inner_integrals(setup):
    grid, phi, F = setup
    A, B, _ = u_integrals(0.0, phi, F, EPS)
    assert abs(A - 1.0) < 1e-8
    assert abs(B + 0.5) < 1e-8
    for j in (-150, -60, 0, 40, 150):
        y = grid.points[grid.mid + j]
        _, _, C = u_integrals(y, phi, F, EPS)
        assert abs(C + (1.0 - F.values[grid.mid + j])) < 1e-8


def test_inner_integrals_reject_bad_points(setup):
    _, phi, F = setup
    with pytest.raises(ArgumentError):
        u_integrals(EPS, phi, F, EPS)
    with pytest.raises(ArgumentError):
        u_integrals(-1.5 * EPS, phi, F, EPS)


@pytest.mark.parametrize("y", [0.0123, -0.0471, 0.0002])
def test_inner_integrals_between_nodes(setup, y):
    grid, phi, F = setup
    assert y / grid.step != round(y / grid.step)
    A, B, C = u_integrals(y, phi, F, EPS)
    F_at_y = float(make_interp_spline(grid.points, F.values, k=3)(y))
    assert abs(A - 1.0) < 1e-7
    assert abs(B + 0.5) < 1e-8
    assert abs(C + (1.0 - F_at_y)) < 1e-7


def test_reduced_path(setup):
    _, phi, F = setup
    total, half = mu_total_and_halfplane(phi, F, EPS)
    assert abs(total) < 1e-6
    assert abs(half + TWELFTH) < 1e-6


def test_direct_path(setup):
    _, phi, F = setup
    half_direct = mu_direct_halfplane(phi, F, EPS)
    assert abs(half_direct + TWELFTH) < 1e-4
    assert abs(mu_direct_fullplane(phi, F, EPS)) < 1e-4
    _, half = mu_total_and_halfplane(phi, F, EPS)
    assert abs(half_direct - half) < 1e-4


@pytest.mark.slow
@pytest.mark.parametrize("eps", [0.05, 0.1, 0.2])
@pytest.mark.parametrize("shape", ["mollifier", "skewed"])
def test_independent_of_width_and_shape(eps, shape):
    grid = make_grid(eps, 200)
    phi = bump_profile(eps, grid, shape)
    F = primitive(phi)
    total, half = mu_total_and_halfplane(phi, F, eps)
    assert abs(total) < 1e-6
    assert abs(half + TWELFTH) < 1e-5


@pytest.mark.slow
def test_stable_under_refinement():
    changes = convergence_check(EPS, 200)
    assert max(changes.values()) < 1e-4


def main():
    print("🧪 Testing smooth-model quadrature")
    print("=" * 50)
    grid = make_grid(EPS, 200)
    phi = bump_profile(EPS, grid)
    prepared = (grid, phi, primitive(phi))
    failed = 0
    for name, fn in list(globals().items()):
        if not (name.startswith("test_") and callable(fn)):
            continue
        if name in ("test_independent_of_width_and_shape", "test_stable_under_refinement"):
            continue
        extra = [(0.0123,), (-0.0471,), (0.0002,)] if name == "test_inner_integrals_between_nodes" else [()]
        for args in extra:
            try:
                fn(prepared, *args) if fn.__code__.co_argcount else fn()
                print(f"✅ {name}{args if args else ''}")
            except Exception as e:
                failed += 1
                print(f"❌ {name}{args if args else ''}: {e}")
    return failed == 0


if __name__ == "__main__":
    sys.exit(0 if main() else 1)
