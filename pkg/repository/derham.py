"""
De Rham Quadrature
Numerical evaluation of the smooth-model integrals: bump and primitive calculus,
the three inner integrals, and the exact/half-plane values of the two-form μ
"""

import logging
from typing import Dict, Optional, Tuple

import numpy as np
from scipy.integrate import cumulative_trapezoid, trapezoid
from scipy.interpolate import BSpline, make_interp_spline

from models.quadrature import Grid1D, Profile
from repository.exceptions import ArgumentError

logger = logging.getLogger(__name__)

BUMP_SHAPES = ("mollifier", "skewed")
MIN_STEP_DIV = 200


def make_grid(epsilon: float, step_div: int = MIN_STEP_DIV) -> Grid1D:
    """Grid on [-3ε, 3ε] with step ε/step_div"""
    if epsilon <= 0:
        raise ArgumentError(f"epsilon must be positive, got {epsilon}")
    if step_div < 1:
        raise ArgumentError(f"step_div must be positive, got {step_div}")
    return Grid1D(half_width=3 * epsilon, step=epsilon / step_div, samples=6 * step_div + 1)


def bump_profile(epsilon: float, grid: Grid1D, shape: str = "mollifier") -> Profile:
    """Smooth unit-mass bump supported in (-ε, ε)"""
    if epsilon <= 0:
        raise ArgumentError(f"epsilon must be positive, got {epsilon}")
    if grid.step > epsilon / MIN_STEP_DIV * (1 + 1e-9):
        raise ArgumentError(f"Grid step {grid.step} does not resolve ε={epsilon} (need h <= ε/{MIN_STEP_DIV})")
    if grid.half_width < 3 * epsilon * (1 - 1e-12):
        raise ArgumentError(f"Grid half-width {grid.half_width} is narrower than 3ε")
    if shape not in BUMP_SHAPES:
        raise ArgumentError(f"Unknown bump shape {shape!r}; expected one of {BUMP_SHAPES}")

    t = grid.points / epsilon
    inside = np.abs(t) < 1
    values = np.zeros_like(t)
    values[inside] = np.exp(-1.0 / (1.0 - t[inside] ** 2))
    if shape == "skewed":
        values[inside] *= 1.0 + 0.5 * t[inside]
    values /= trapezoid(values, dx=grid.step)
    return Profile(grid=grid, values=values, name=f"{shape}(ε={epsilon})")


def _derivative(phi: Profile) -> np.ndarray:
    return np.gradient(phi.values, phi.grid.step, edge_order=2)


def primitive(phi: Profile) -> Profile:
    """F(x) = ∫_{-∞}^x φ, cumulative trapezoid with the Euler-Maclaurin end term"""
    h = phi.grid.step
    dphi = _derivative(phi)
    values = cumulative_trapezoid(phi.values, dx=h, initial=0.0) - (h * h / 12.0) * (dphi - dphi[0])
    return Profile(grid=phi.grid, values=values, name=f"primitive of {phi.name}")


def theta_support_check(F: Profile, epsilon: float, tol: float = 1e-12) -> bool:
    """F - Θ vanishes outside (-ε, ε)"""
    x = F.grid.points
    left = x <= -epsilon
    right = x >= epsilon
    total = F.values[-1]
    return bool(np.all(np.abs(F.values[left]) < tol) and np.all(np.abs(F.values[right] - total) < tol))


def moment_checks(phi: Profile, F: Profile) -> Tuple[float, float]:
    """(∫ φF, ∫ φF²)"""
    h = phi.grid.step
    m1 = trapezoid(phi.values * F.values, dx=h)
    m2 = trapezoid(phi.values * F.values ** 2, dx=h)
    return float(m1), float(m2)


def _shift(values: np.ndarray, k: int, left: float, right: float) -> np.ndarray:
    """s[i] = values[i+k], padded with constant tails"""
    out = np.empty_like(values)
    size = values.shape[0]
    if k >= 0:
        out[: size - k] = values[k:]
        out[size - k:] = right
    else:
        out[-k:] = values[: size + k]
        out[: -k] = left
    return out


def _y_offset(y: float, phi: Profile, epsilon: float) -> Optional[int]:
    """Grid offset of y, or None when y falls between nodes"""
    if abs(y) >= epsilon:
        raise ArgumentError(f"Sample point y={y} must satisfy |y| < ε")
    grid = phi.grid
    k = int(round(y / grid.step))
    if abs(k * grid.step - y) <= 1e-9 * grid.step + 1e-15:
        return k
    return None


def _resample(profile: Profile, y: float, left: float, right: float) -> Tuple[np.ndarray, BSpline]:
    """u -> profile(y+u) on the grid nodes through a cubic spline, with constant tails"""
    grid = profile.grid
    spline = make_interp_spline(grid.points, profile.values, k=3)
    x = grid.points + y
    values = spline(x)
    values[x < grid.points[0]] = left
    values[x > grid.points[-1]] = right
    return values, spline


def _inner_integrals(phi: Profile, F: Profile, phi_y: np.ndarray, F_y: np.ndarray,
                     dphi_y: float) -> Tuple[float, float, float]:
    h = phi.grid.step
    mid = phi.grid.mid
    A = trapezoid(phi.values * F_y + F.values * phi_y, dx=h)
    B = -trapezoid(F.values * phi.values, dx=h)
    # half-line integral starts at u = 0 where the integrand does not vanish
    C = -(trapezoid(phi_y[mid:], dx=h) + (h * h / 12.0) * dphi_y)
    return float(A), float(B), float(C)


def _node_integrals(k: int, phi: Profile, F: Profile, dphi: np.ndarray) -> Tuple[float, float, float]:
    phi_y = _shift(phi.values, k, 0.0, 0.0)        # u -> φ(y+u)
    F_y = _shift(F.values, k, 0.0, F.values[-1])   # u -> F(y+u)
    return _inner_integrals(phi, F, phi_y, F_y, dphi[phi.grid.mid + k])


def u_integrals(y: float, phi: Profile, F: Profile, epsilon: float) -> Tuple[float, float, float]:
    """
    A = ∫ d(F(u)F(y+u)) = 1, B = -½∫ d(F(u)²) = -½, C = -∫_{u>=0} φ(y+u) du = -(1-F(y)),
    each by direct quadrature of its integrand. Off-node y is resampled by cubic spline.
    """
    k = _y_offset(y, phi, epsilon)
    if k is not None:
        return _node_integrals(k, phi, F, _derivative(phi))
    phi_y, phi_spline = _resample(phi, y, 0.0, 0.0)
    F_y, _ = _resample(F, y, 0.0, float(F.values[-1]))
    return _inner_integrals(phi, F, phi_y, F_y, float(phi_spline.derivative()(y)))


def mu_total_and_halfplane(phi: Profile, F: Profile, epsilon: float) -> Tuple[float, float]:
    """(∫∫ μ, ∫∫_{y>=x} μ) through the reduced one-variable path"""
    grid = phi.grid
    h = grid.step
    dphi = _derivative(phi)
    support = np.nonzero(np.abs(grid.points) < epsilon)[0]
    bracket = np.zeros(grid.samples)
    for i in support:
        A, B, C = _node_integrals(int(i) - grid.mid, phi, F, dphi)
        bracket[i] = A + B + C
    total = -trapezoid(phi.values * bracket, dx=h)
    half = -trapezoid(F.values * phi.values * bracket, dx=h)
    logger.debug(f"Reduced path on {len(support)} nodes: total={total:.3e}, half={half:.12f}")
    return float(total), float(half)


def _mu_density(phi: Profile, F: Profile, epsilon: float) -> Tuple[np.ndarray, np.ndarray, float]:
    """
    Coefficient M(x, y) of μ = M dx∧dy on the nodes with |x|, |y| <= 2ε, expanded from
    the frobeniator-composition term and the coassociator term of μ.
    """
    grid = phi.grid
    h = grid.step
    mid = grid.mid
    reach = min(int(np.ceil(2 * epsilon / h)) + 1, mid)
    window = np.arange(mid - reach, mid + reach + 1)
    x = grid.points[window]

    # Φ[i, k] = φ(x_i - u_k) on the shared grid
    offsets = window[:, None] - window[None, :] + mid
    valid = (offsets >= 0) & (offsets < grid.samples)
    Phi = np.where(valid, phi.values[np.clip(offsets, 0, grid.samples - 1)], 0.0)

    phi_w = phi.values[window]
    F_w = F.values[window]
    weights = np.full(window.shape[0], h)
    weights[0] = weights[-1] = h / 2

    # M1(x,y) = ∫ φ(x-u)φ(y-u)φ(u)(F(y) - F(u)) du
    c = weights * phi_w
    M1 = (Phi * c) @ Phi.T * F_w[None, :] - (Phi * (c * F_w)) @ Phi.T

    # M2(x,y) = φ(y) ∫ φ(x-w)φ(y-w)(F(w) - Θ(w)) dw, Θ(0) = ½ at the jump
    theta = np.where(x > 0, 1.0, 0.0)
    theta[x == 0] = 0.5
    inner = (Phi * (weights * (F_w - theta))) @ Phi.T
    dphi_w = _derivative(phi)[window]
    jump = (h * h / 12.0) * (dphi_w[:, None] * phi_w[None, :] + phi_w[:, None] * dphi_w[None, :])
    M2 = (inner + jump) * phi_w[None, :]

    return M1 + M2, x, h


def mu_direct_halfplane(phi: Profile, F: Profile, epsilon: float) -> float:
    """-∫∫_{y>=x} M dx dy from the unsimplified two-form (∫_x∫_y μ = -∫∫ M)"""
    M, x, h = _mu_density(phi, F, epsilon)
    running = np.cumsum(M, axis=0)
    diag = np.arange(M.shape[0])
    lower = h * (running[diag, diag] - 0.5 * M[diag, diag] - 0.5 * M[0, :])
    dM_dx = np.gradient(M, h, axis=0, edge_order=2)
    lower -= (h * h / 12.0) * dM_dx[diag, diag]
    return float(-trapezoid(lower, dx=h))


def mu_direct_fullplane(phi: Profile, F: Profile, epsilon: float) -> float:
    M, x, h = _mu_density(phi, F, epsilon)
    return float(-trapezoid(trapezoid(M, dx=h, axis=0), dx=h))


def evaluate_all(epsilon: float, step_div: int = MIN_STEP_DIV, shape: str = "mollifier") -> Dict[str, float]:
    """Every reported smooth-model quantity for one (ε, grid, bump) choice"""
    grid = make_grid(epsilon, step_div)
    phi = bump_profile(epsilon, grid, shape)
    F = primitive(phi)
    m1, m2 = moment_checks(phi, F)
    total, half = mu_total_and_halfplane(phi, F, epsilon)
    A, B, C = u_integrals(0.0, phi, F, epsilon)
    result = {
        "mass": float(trapezoid(phi.values, dx=grid.step)),
        "m1": m1,
        "m2": m2,
        "A0": A,
        "B": B,
        "C0_residual": C + (1.0 - F.values[grid.mid]),
        "total": total,
        "half": half,
        "direct_half": mu_direct_halfplane(phi, F, epsilon),
        "direct_total": mu_direct_fullplane(phi, F, epsilon),
    }
    logger.info(f"Smooth integrals at ε={epsilon}, K={step_div}, {shape}: half={half:.10f}, direct={result['direct_half']:.8f}")
    return result


def convergence_check(epsilon: float, step_div: int = MIN_STEP_DIV, shape: str = "mollifier") -> Dict[str, float]:
    """Largest change in each reported value when h is halved"""
    coarse = evaluate_all(epsilon, step_div, shape)
    fine = evaluate_all(epsilon, 2 * step_div, shape)
    return {key: abs(coarse[key] - fine[key]) for key in coarse}
