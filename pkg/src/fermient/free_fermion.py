"""
Spinless fermions hopping on a periodic ring.

The hopping Hamiltonian ``H = -t sum_l (c_l^dag c_{l+1} + h.c.) - mu N`` is
diagonal in the momentum modes ``k = 1..L`` with energies
``eps_k = -2 t cos(2 pi k / L)``. Eigenstates are Slater determinants of
occupied modes; the grand-canonical Gibbs state is a product of Fermi-Dirac
occupations. Both give a two-site reduced density matrix fixed by the mean
filling and the nearest-neighbour correlator ``S = <c1^dag c2>``.

Inverse temperature ``beta = math.inf`` is accepted everywhere and means the
zero-temperature limit (step occupations, 1/2 at the Fermi level).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np
from scipy.optimize import brentq
from scipy.special import expit

from .core import InputDomainError, TwoSiteRDM, concurrence_from_rdm

#: Concurrence values below this are treated as zero by threshold searches.
ZERO_CONCURRENCE = 1e-13


@dataclass(frozen=True)
class ModelParams:
    """Parameters of the ring Hamiltonian.

    Parameters
    ----------
    L : int
        Number of sites, ``L >= 2``.
    t : float
        Hopping integral.
    mu : float
        Chemical potential.
    beta : float
        Inverse temperature (``math.inf`` for T = 0).
    """

    L: int
    t: float = 1.0
    mu: float = 0.0
    beta: float = math.inf

    def __post_init__(self):
        if int(self.L) != self.L or self.L < 2:
            raise InputDomainError(f"L={self.L!r} must be an integer >= 2")
        object.__setattr__(self, "L", int(self.L))
        if not self.beta > 0:
            raise InputDomainError(f"beta={self.beta!r} must be positive")
        # mu = +-inf is allowed: empty or full band
        if not np.isfinite(self.t) or np.isnan(self.mu):
            raise InputDomainError("t must be finite and mu must not be nan")

    @property
    def temperature(self) -> float:
        return 0.0 if math.isinf(self.beta) else 1.0 / self.beta


@dataclass(frozen=True)
class ModeSpectrum:
    epsilon: np.ndarray
    omega: complex


@dataclass(frozen=True)
class EigenstateSpec:
    """Occupied momentum modes of a Slater-determinant eigenstate."""

    modes: tuple[int, ...]

    def __post_init__(self):
        modes = tuple(int(k) for k in self.modes)
        if len(set(modes)) != len(modes):
            raise InputDomainError(f"modes {modes} are not distinct")
        object.__setattr__(self, "modes", tuple(sorted(modes)))

    @property
    def N(self) -> int:
        return len(self.modes)

    def check(self, L: int) -> None:
        bad = [k for k in self.modes if not 1 <= k <= L]
        if bad:
            raise InputDomainError(f"mode indices {bad} outside 1..{L}")


@dataclass(frozen=True)
class CorrelationSet:
    """Correlators that fix the two-site RDM.

    ``nn = <n1 n2>`` and ``hh = <(1-n1)(1-n2)>`` are carried separately so
    that both are available without cancellation.
    """

    S: complex
    n_mean: float
    nn: float
    hh: float

    def rdm(self) -> TwoSiteRDM:
        w = (1.0 - self.hh - self.nn) / 2.0
        return TwoSiteRDM(u=self.hh, w1=w, w2=w, v=self.nn, z=self.S)


def _phases(L: int) -> np.ndarray:
    k = np.arange(1, L + 1)
    return np.exp(2j * np.pi * (k % L) / L)


def mode_energies(params: ModelParams) -> np.ndarray:
    """``eps_k = -2 t cos(2 pi k / L)`` for ``k = 1..L``."""
    L = params.L
    k = np.arange(1, L + 1) % L
    # fold k onto min(k, L-k) so that eps_k == eps_{L-k} bitwise
    m = np.minimum(k, L - k)
    # cos written as a sine so that the zero crossing at 4m = L is exact
    return -2.0 * params.t * np.sin(np.pi * (L - 4 * m) / (2 * L))


def mode_spectrum(params: ModelParams) -> ModeSpectrum:
    return ModeSpectrum(
        epsilon=mode_energies(params), omega=complex(np.exp(2j * np.pi / params.L))
    )


def _pair_kernel(L: int) -> np.ndarray:
    k = np.arange(L)
    return 2.0 * np.sin(np.pi * (k[:, None] - k[None, :]) / L) ** 2


def _correlations(occ: np.ndarray, holes: np.ndarray) -> CorrelationSet:
    # <n1 n2> = L^-2 sum_{k,k'} f_k f_k' (1 - cos(2 pi (k-k')/L)), and the
    # same with hole occupations for <(1-n1)(1-n2)>; every term is >= 0, so
    # exact zeros (one particle, one hole) come out exactly.
    L = occ.size
    W = _pair_kernel(L)
    nn = float(occ @ W @ occ) / L**2
    hh = float(holes @ W @ holes) / L**2
    # sum_k omega^k = 0, so S can be summed over particles or holes; the
    # shorter sum keeps the full band exactly at S = 0
    if holes.sum() < occ.sum():
        S = -complex(np.dot(_phases(L), holes)) / L
    else:
        S = complex(np.dot(_phases(L), occ)) / L
    return CorrelationSet(S=S, n_mean=float(occ.sum()) / L, nn=nn, hh=hh)


def _occupation_vector(L: int, state: EigenstateSpec) -> np.ndarray:
    state.check(L)
    occ = np.zeros(L)
    occ[np.asarray(state.modes, dtype=int) - 1] = 1.0
    return occ


def eigenstate_correlator(params: ModelParams, state: EigenstateSpec) -> CorrelationSet:
    """Correlators of the Slater determinant ``|k_N>``.

    ``S = L^-1 sum_l omega^{k_l}``, ``n = N/L`` and ``<n1 n2> = n^2 - |S|^2``.
    """
    occ = _occupation_vector(params.L, state)
    return _correlations(occ, 1.0 - occ)


def eigenstate_rdm(params: ModelParams, state: EigenstateSpec) -> TwoSiteRDM:
    return eigenstate_correlator(params, state).rdm()


def eigenstate_concurrence(params: ModelParams, state: EigenstateSpec) -> float:
    """Nearest-neighbour concurrence of an energy eigenstate.

    Depends only on the filling and ``|S|``; equal for every neighbouring
    pair by translation invariance.
    """
    return concurrence_from_rdm(eigenstate_rdm(params, state))


def eigenstate_energy(params: ModelParams, state: EigenstateSpec) -> float:
    """``E = sum_l (eps_{k_l} - mu)``."""
    state.check(params.L)
    eps = mode_energies(params)
    return float(sum(eps[k - 1] - params.mu for k in state.modes))


def ground_state_modes(params: ModelParams, N: int) -> EigenstateSpec:
    """The ``N`` lowest modes; ties at the Fermi level go to the smallest ``k``."""
    if not 0 <= N <= params.L:
        raise InputDomainError(f"N={N!r} outside 0..{params.L}")
    eps = mode_energies(params)
    order = sorted(range(1, params.L + 1), key=lambda k: (eps[k - 1], k))
    return EigenstateSpec(tuple(order[:N]))


def ground_state_correlator_infinite(n: float) -> float:
    """``S_G(n) = sin(pi n) / pi`` for the filled Fermi sea of an infinite ring."""
    if not 0.0 <= n <= 1.0:
        raise InputDomainError(f"filling n={n!r} outside [0, 1]")
    return math.sin(math.pi * n) / math.pi


def ground_state_concurrence_infinite(n: float) -> float:
    """Nearest-neighbour concurrence of the infinite-lattice ground state.

    ``C = 2 {S - sqrt[((n-1)^2 - S^2)(n^2 - S^2)]}`` with ``S = sin(pi n)/pi``.
    The bracket is never negative on [0, 1], so no max is needed.
    """
    S = ground_state_correlator_infinite(n)
    # (n-1)^2 - S^2 and n^2 - S^2 factored to keep sign at the endpoints
    hh = max((1.0 - n - S) * (1.0 - n + S), 0.0)
    nn = max((n - S) * (n + S), 0.0)
    return 2.0 * (S - math.sqrt(hh * nn))


def _fd(x: np.ndarray, beta: float) -> tuple[np.ndarray, np.ndarray]:
    """Occupation and hole probabilities for ``x = eps - mu``."""
    x = np.asarray(x, dtype=float)
    if math.isinf(beta):
        occ = np.where(x < 0, 1.0, np.where(x > 0, 0.0, 0.5))
        return occ, 1.0 - occ
    return expit(-beta * x), expit(beta * x)


def fermi_dirac(params: ModelParams, k: int) -> float:
    """``<n_k> = 1 / (exp(beta (eps_k - mu)) + 1)``."""
    if not 1 <= k <= params.L:
        raise InputDomainError(f"mode k={k!r} outside 1..{params.L}")
    eps = mode_energies(params)[k - 1]
    return float(_fd(eps - params.mu, params.beta)[0])


def occupations(params: ModelParams) -> np.ndarray:
    """Fermi-Dirac occupations of all modes, ``k = 1..L``."""
    return _fd(mode_energies(params) - params.mu, params.beta)[0]


def thermal_correlators(params: ModelParams) -> CorrelationSet:
    """Correlators of the grand-canonical Gibbs state.

    Same as for an eigenstate with the mode occupations replaced by their
    Fermi-Dirac averages.
    """
    occ, holes = _fd(mode_energies(params) - params.mu, params.beta)
    return _correlations(occ, holes)


def thermal_rdm(params: ModelParams) -> TwoSiteRDM:
    return thermal_correlators(params).rdm()


def thermal_concurrence(params: ModelParams) -> float:
    return concurrence_from_rdm(thermal_rdm(params))


def thermal_margin(params: ModelParams) -> float:
    """Signed ``|z| - sqrt(u v)``; the concurrence is twice its positive part."""
    c = thermal_correlators(params)
    return abs(c.S) - math.sqrt(max(c.hh, 0.0) * max(c.nn, 0.0))


def _scaled_cosh_terms(beta: float, t: float, mu: float):
    # all terms divided by exp(m) to stay finite for large beta*|mu|
    a = beta * mu
    b = 2.0 * beta * abs(t)
    if math.isinf(a):
        # mu -> +-inf limit: only the exp(|a|) terms survive
        ea = 1.0 if a > 0 else 0.0
        return ea, 0.5, 0.0, 0.0, 0.0
    m = max(abs(a), b)
    ea, ema = math.exp(a - m), math.exp(-a - m)
    eb, emb = math.exp(b - m), math.exp(-b - m)
    cosh_a = 0.5 * (ea + ema)
    cosh_b = 0.5 * (eb + emb)
    sinh_b = 0.5 * (eb - emb)
    return ea, cosh_a, cosh_b, sinh_b, math.exp(-m)


def _require_two_sites(params: ModelParams) -> None:
    if params.L != 2:
        raise InputDomainError(f"two-site closed form needs L=2, got L={params.L}")
    if math.isinf(params.beta):
        raise InputDomainError("two-site closed form needs finite beta")


def thermal_concurrence_two_site(params: ModelParams) -> float:
    """``C = max(0, sinh(2 beta |t|) - 1) / (cosh(beta mu) + cosh(2 beta t))``."""
    _require_two_sites(params)
    _, cosh_a, cosh_b, sinh_b, one = _scaled_cosh_terms(params.beta, params.t, params.mu)
    return max(0.0, sinh_b - one) / (cosh_a + cosh_b)


def mean_number_two_site(params: ModelParams) -> float:
    """``<N> = (exp(beta mu) + cosh(2 beta t)) / (cosh(beta mu) + cosh(2 beta t))``."""
    _require_two_sites(params)
    ea, cosh_a, cosh_b, _, _ = _scaled_cosh_terms(params.beta, params.t, params.mu)
    return (ea + cosh_b) / (cosh_a + cosh_b)


def mu_from_mean_number(N_mean: float, t: float, beta: float) -> float:
    """Chemical potential giving mean particle number ``N_mean`` on two sites.

    Logarithmic inversion of :func:`mean_number_two_site`.
    """
    if not 0.0 < N_mean < 2.0:
        raise InputDomainError(f"mean number {N_mean!r} outside (0, 2)")
    if not 0.0 < beta < math.inf:
        raise InputDomainError(f"beta={beta!r} must be positive and finite")
    c = math.cosh(2.0 * beta * t)
    d = N_mean - 1.0
    # 2N - N^2 = 1 - d^2
    root = math.sqrt(c * c * d * d + (1.0 - d) * (1.0 + d))
    if d >= 0:
        x = (c * d + root) / (2.0 - N_mean)
    else:
        # rationalised form avoids cancellation of c*d + root
        x = N_mean / (root - c * d)
    return math.log(x) / beta


def energy_density_relation_check(
    params: ModelParams, state: EigenstateSpec | None = None
) -> tuple[float, float]:
    """Return ``(-<H>/(2 t L), Re S)`` at zero chemical potential.

    ``state=None`` means the thermal state at ``params.beta``. The two
    numbers agree by translation invariance of the hopping term.
    """
    if params.mu != 0.0:
        raise InputDomainError("energy-density relation requires mu = 0")
    if params.t == 0.0:
        raise InputDomainError("energy-density relation undefined for t = 0")
    if state is None:
        energy = float(np.dot(mode_energies(params), occupations(params)))
        S = thermal_correlators(params).S
    else:
        energy = eigenstate_energy(params, state)
        S = eigenstate_correlator(params, state).S
    return -energy / (2.0 * params.t * params.L), S.real


def threshold_temperature(
    L: int,
    t: float,
    mu: float,
    T_lo: float = 1e-3,
    T_hi: float = 10.0,
    steps: int = 400,
    xtol: float = 1e-6,
) -> float:
    """Temperature above which the thermal concurrence stays zero.

    Scans a uniform grid on ``[T_lo, T_hi]``, takes the last grid point with
    ``C > 0`` and refines the crossing by root finding on ``|z| - sqrt(uv)``.
    Returns ``T_lo`` when no grid point is entangled.
    """
    if not 0.0 < T_lo < T_hi:
        raise InputDomainError("need 0 < T_lo < T_hi")
    Ts = np.linspace(T_lo, T_hi, steps + 1)

    def margin(T: float) -> float:
        return thermal_margin(ModelParams(L, t, mu, 1.0 / T))

    entangled = [2.0 * margin(T) > ZERO_CONCURRENCE for T in Ts]
    if not any(entangled):
        return float(T_lo)
    last = max(i for i, e in enumerate(entangled) if e)
    if last == len(Ts) - 1:
        raise InputDomainError(f"concurrence still positive at T_hi={T_hi}")
    return float(brentq(margin, Ts[last], Ts[last + 1], xtol=xtol))


def thermal_sweep(
    params: ModelParams, temperatures: Iterable[float]
) -> list[float]:
    """Thermal concurrence on a list of temperatures (other parameters fixed)."""
    out = []
    for T in temperatures:
        beta = math.inf if T == 0 else 1.0 / T
        out.append(
            thermal_concurrence(ModelParams(params.L, params.t, params.mu, beta))
        )
    return out

