"""
Mean-field pairing of the momentum modes ``k`` and ``-k``.

For one pair the Hamiltonian
``H_k = eps (n_k + n_-k - 1) + Delta c_k^dag c_-k^dag + h.c.`` acts as a
spin 1/2 in a transverse field on ``span{|00>, |11>}``, with
``E = sqrt(eps^2 + |Delta|^2)`` and mixing angle
``theta = atan2(|Delta|, eps)``. The gap equation is used exactly as

    |Delta| = sinh(beta E) sin(theta) / (2 [cosh(beta E) + 1])

with no separate coupling constant, which puts the critical temperature at
``T_c = 1/4`` for ``eps = 0``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import bisect

from .core import InputDomainError, NumericError

GAP_XTOL = 1e-14
TEMPERATURE_XTOL = 1e-10
_DELTA_FLOOR = 1e-9
_MAXITER = 500


@dataclass(frozen=True)
class BcsPoint:
    """One momentum pair: single-particle energy, order parameter, inverse temperature."""

    epsilon_k: float
    delta_abs: float
    phi_k: float = 0.0
    beta: float = math.inf

    def __post_init__(self):
        if not self.delta_abs >= 0:
            raise InputDomainError(f"|Delta|={self.delta_abs!r} must be >= 0")
        if not self.beta > 0:
            raise InputDomainError(f"beta={self.beta!r} must be positive")
        if not math.isfinite(self.epsilon_k):
            raise InputDomainError("epsilon_k must be finite")

    @property
    def E_k(self) -> float:
        return math.hypot(self.epsilon_k, self.delta_abs)

    @property
    def theta_k(self) -> float:
        # two-argument form keeps sin(theta) >= 0 for eps < 0
        return math.atan2(self.delta_abs, self.epsilon_k)

    @property
    def temperature(self) -> float:
        return 0.0 if math.isinf(self.beta) else 1.0 / self.beta


def _tanh_half(x: float) -> float:
    # sinh(x) / (cosh(x) + 1), finite for any x >= 0
    return math.tanh(0.5 * x)


def _inv_cosh_plus_one(x: float) -> float:
    if x > 700:
        return 0.0
    return 1.0 / (math.cosh(x) + 1.0)


def _beta_E(point: BcsPoint) -> float:
    E = point.E_k
    if math.isinf(point.beta):
        return math.inf if E > 0 else 0.0
    return point.beta * E


def bcs_ground_state(point: BcsPoint) -> np.ndarray:
    """Amplitudes on ``(|00>, |11>)``: ``(cos(theta/2), -exp(i phi) sin(theta/2))``."""
    half = 0.5 * point.theta_k
    return np.array(
        [math.cos(half), -np.exp(1j * point.phi_k) * math.sin(half)], dtype=complex
    )


def ground_state_concurrence(point: BcsPoint) -> float:
    a0, a1 = bcs_ground_state(point)
    return 2.0 * abs(a0 * a1)


def pair_amplitude(point: BcsPoint) -> float:
    """Thermal ``|<c_k c_-k>|`` at the point's ``(eps, |Delta|, beta)``."""
    return 0.5 * _tanh_half(_beta_E(point)) * math.sin(point.theta_k)


def gap_self_consistency_residual(point: BcsPoint) -> float:
    """``|Delta| - sinh(beta E) sin(theta) / (2 [cosh(beta E) + 1])``."""
    return point.delta_abs - pair_amplitude(point)


def solve_gap(epsilon_k: float, beta: float, phi_k: float = 0.0) -> BcsPoint:
    """Largest self-consistent ``|Delta|`` at inverse temperature ``beta``.

    Returns ``|Delta| = 0`` when only the trivial solution exists. The
    nontrivial root is bracketed in ``[1e-9, 1]`` and found by bisection.
    """
    if not beta > 0:
        raise InputDomainError(f"beta={beta!r} must be positive")

    def residual(delta: float) -> float:
        return gap_self_consistency_residual(BcsPoint(epsilon_k, delta, phi_k, beta))

    if residual(_DELTA_FLOOR) >= 0.0:
        return BcsPoint(epsilon_k, 0.0, phi_k, beta)
    if residual(1.0) <= 0.0:
        raise NumericError("gap residual does not change sign on [1e-9, 1]")
    try:
        delta = bisect(residual, _DELTA_FLOOR, 1.0, xtol=GAP_XTOL, maxiter=_MAXITER)
    except RuntimeError as exc:
        raise NumericError(f"gap bisection failed: {exc}") from exc
    return BcsPoint(epsilon_k, delta, phi_k, beta)


def critical_temperature(epsilon_k: float = 0.0) -> float:
    """Temperature above which :func:`solve_gap` returns zero.

    The linearised gap equation gives ``tanh(|eps| / 2T) = 2 |eps|``;
    ``T_c = 1/4`` at ``eps = 0`` and no ordered phase for ``|eps| >= 1/2``.
    """
    e = abs(epsilon_k)
    if e >= 0.5:
        return 0.0
    if e == 0.0:
        return 0.25
    return e / (2.0 * math.atanh(2.0 * e))


def zero_temperature_gap(epsilon_k: float = 0.0) -> float:
    """``|Delta|`` at T = 0, where ``E = 1/2``."""
    return math.sqrt(max(0.25 - epsilon_k**2, 0.0))


def bcs_thermal_concurrence(point: BcsPoint) -> float:
    """``max(0, sinh(beta E) sin(theta) - 1) / (cosh(beta E) + 1)``.

    Evaluated as ``tanh(beta E / 2) sin(theta) - 1 / (cosh(beta E) + 1)``
    so that large ``beta E`` and ``beta = inf`` are handled.
    """
    x = _beta_E(point)
    value = _tanh_half(x) * math.sin(point.theta_k) - _inv_cosh_plus_one(x)
    return max(0.0, value)


def entanglement_temperature(epsilon_k: float = 0.0) -> float:
    """Temperature where the self-consistent concurrence reaches zero.

    Concurrence vanishes when ``sinh(beta E) sin(theta) = 1``. Combined with
    the gap equation this fixes ``E`` and therefore ``T`` by bisection on the
    gap branch.
    """
    Tc = critical_temperature(epsilon_k)
    if Tc == 0.0:
        return 0.0

    def margin(T: float) -> float:
        point = solve_gap(epsilon_k, 1.0 / T)
        x = _beta_E(point)
        return _tanh_half(x) * math.sin(point.theta_k) - _inv_cosh_plus_one(x)

    lo = Tc * 1e-3
    if margin(lo) <= 0.0:
        return 0.0
    return float(bisect(margin, lo, Tc, xtol=TEMPERATURE_XTOL, maxiter=_MAXITER))


def _gap_at_temperature(epsilon_k: float, T: float) -> float:
    beta = math.inf if T == 0.0 else 1.0 / T
    return solve_gap(epsilon_k, beta).delta_abs


def temperature_for_gap(epsilon_k: float, delta: float) -> float:
    """Invert the monotone branch ``|Delta|(T)`` on ``[0, T_c]`` by bisection."""
    top = zero_temperature_gap(epsilon_k)
    Tc = critical_temperature(epsilon_k)
    if not 0.0 <= delta <= top:
        raise InputDomainError(
            f"|Delta|={delta!r} outside the attainable range [0, {top!r}]"
        )
    if delta == 0.0:
        return Tc
    if delta == top:
        return 0.0
    return float(
        bisect(
            lambda T: _gap_at_temperature(epsilon_k, T) - delta,
            0.0,
            Tc,
            xtol=TEMPERATURE_XTOL,
            maxiter=_MAXITER,
        )
    )


def concurrence_vs_order_parameter(
    epsilon_k: float, delta_grid
) -> list[tuple[float, float, float]]:
    """Rows ``(Delta, T, C)``: concurrence along the self-consistent branch,
    parametrised by the order parameter instead of the temperature."""
    rows = []
    for delta in delta_grid:
        delta = float(delta)
        T = temperature_for_gap(epsilon_k, delta)
        beta = math.inf if T == 0.0 else 1.0 / T
        C = bcs_thermal_concurrence(BcsPoint(epsilon_k, delta, 0.0, beta))
        rows.append((delta, T, C))
    return rows
