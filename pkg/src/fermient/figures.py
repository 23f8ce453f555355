"""Data tables behind the concurrence plots and the two-site table."""

from __future__ import annotations

import math

import numpy as np

from . import bcs
from . import free_fermion as ff
from .core import InputDomainError

FIGURE_IDS = ("fig1", "fig2", "fig3", "fig4", "fig5", "table1")

Table = tuple[list[str], list[tuple]]


def closed_grid(lo: float, hi: float, steps: int) -> np.ndarray:
    """``steps + 1`` points on ``[lo, hi]``, endpoints included."""
    if steps < 1:
        raise InputDomainError(f"steps={steps} must be >= 1")
    return np.linspace(lo, hi, steps + 1)


def temperature_grid(T_max: float, steps: int) -> np.ndarray:
    """``steps`` points on ``(0, T_max]``."""
    if steps < 1:
        raise InputDomainError(f"steps={steps} must be >= 1")
    if not T_max > 0:
        raise InputDomainError(f"T_max={T_max} must be positive")
    return T_max * np.arange(1, steps + 1) / steps


def fig1(steps: int = 200) -> Table:
    rows = [(n, ff.ground_state_concurrence_infinite(n)) for n in closed_grid(0.0, 1.0, steps)]
    return ["n", "C"], rows


def fig2(t: float = 1.0, T_max: float | None = None, steps: int = 200, n_points: int = 19) -> Table:
    """Two sites: concurrence on a (temperature, mean number) grid."""
    if n_points < 1:
        raise InputDomainError(f"n_points={n_points} must be >= 1")
    T_max = 3.0 * abs(t) if T_max is None else T_max
    numbers = 2.0 * np.arange(1, n_points + 1) / (n_points + 1)
    rows = []
    for T in temperature_grid(T_max, steps):
        beta = 1.0 / T
        for N_mean in numbers:
            mu = ff.mu_from_mean_number(N_mean, t, beta)
            C = ff.thermal_concurrence_two_site(ff.ModelParams(2, t, mu, beta))
            rows.append((T, N_mean, C))
    return ["T", "N_mean", "C"], rows


def fig3(
    L: int = 100,
    t: float = 1.0,
    mus: tuple[float, ...] = (0.1, 1.0, 2.0),
    T_max: float | None = None,
    steps: int = 200,
) -> Table:
    T_max = 3.0 * abs(t) if T_max is None else T_max
    rows = []
    for T in temperature_grid(T_max, steps):
        rows.append(
            (T, *(ff.thermal_concurrence(ff.ModelParams(L, t, mu, 1.0 / T)) for mu in mus))
        )
    return ["T", *(_mu_label(mu) for mu in mus)], rows


def _mu_label(mu: float) -> str:
    return f"C_mu{mu:.1f}" if round(mu, 1) == mu else f"C_mu{mu:g}"


def fig4(epsilon_k: float = 0.0, T_max: float = 0.3, steps: int = 200) -> Table:
    rows = []
    for T in temperature_grid(T_max, steps):
        point = bcs.solve_gap(epsilon_k, 1.0 / T)
        rows.append((T, point.delta_abs, bcs.bcs_thermal_concurrence(point)))
    return ["T", "Delta", "C"], rows


def fig5(epsilon_k: float = 0.0, steps: int = 200) -> Table:
    grid = closed_grid(0.0, bcs.zero_temperature_gap(epsilon_k), steps)
    rows = [(d, C) for d, _, C in bcs.concurrence_vs_order_parameter(epsilon_k, grid)]
    return ["Delta", "C"], rows


def table1(beta: float = 1.0, t: float = 1.0) -> Table:
    rows = []
    for mu in (-math.inf, 0.0, math.inf):
        p = ff.ModelParams(2, t, mu, beta)
        rows.append((ff.mean_number_two_site(p), mu, ff.thermal_concurrence_two_site(p)))
    return ["N_mean", "mu", "C"], rows


def normalize_id(fig_id: str) -> str:
    key = str(fig_id).strip().lower()
    if key.isdigit():
        key = f"fig{key}"
    if key not in FIGURE_IDS:
        raise InputDomainError(f"unknown figure id {fig_id!r}; choose from {', '.join(FIGURE_IDS)}")
    return key
