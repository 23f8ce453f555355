"""
Oracle-equivalence checks: every closed form against brute-force Fock space.

Each check returns the largest deviation it saw together with its
tolerance. The command-line ``verify`` subcommand runs them and fails if any
deviation exceeds its tolerance.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterator

import numpy as np

from . import bcs, eta
from . import free_fermion as ff
from . import oracle as orc

SUITES = ("operators", "eigenstate", "thermal", "eta", "bcs")


@dataclass(frozen=True)
class CheckResult:
    name: str
    deviation: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return bool(self.deviation <= self.tolerance)


def _random_state(L: int, rng: np.random.Generator) -> orc.FockState:
    amp = rng.normal(size=2**L) + 1j * rng.normal(size=2**L)
    return orc.FockState(L, amp / np.linalg.norm(amp))


def check_anticommutators(max_L: int, seed: int = 7) -> CheckResult:
    """``{c_i, c_j} = 0`` and ``{c_i, c_j^dag} = delta_ij`` on random states."""
    L = min(max_L, 6)
    rng = np.random.default_rng(seed)
    psi = _random_state(L, rng)
    worst = 0.0
    for i, j in itertools.product(range(1, L + 1), repeat=2):
        a = orc.apply_annihilation(orc.apply_creation(psi, j), i).amplitudes
        b = orc.apply_creation(orc.apply_annihilation(psi, i), j).amplitudes
        expected = psi.amplitudes if i == j else 0.0
        worst = max(worst, np.max(np.abs(a + b - expected)))
        a = orc.apply_annihilation(orc.apply_annihilation(psi, j), i).amplitudes
        b = orc.apply_annihilation(orc.apply_annihilation(psi, i), j).amplitudes
        worst = max(worst, np.max(np.abs(a + b)))
    return CheckResult(f"anticommutators L={L}", float(worst), 1e-12)


def check_spectrum(max_L: int) -> CheckResult:
    """Site-basis Hamiltonian and momentum-mode energies give the same spectrum."""
    worst = 0.0
    for L in range(2, min(max_L, 8) + 1):
        p = ff.ModelParams(L, 1.0, 0.3)
        site = np.linalg.eigvalsh(orc.site_hamiltonian(p).toarray())
        eps = ff.mode_energies(p) - p.mu
        modes = np.array(
            [sum(eps[k] for k in range(L) if m >> k & 1) for m in range(2**L)]
        )
        worst = max(worst, np.max(np.abs(np.sort(site) - np.sort(modes))))
    return CheckResult(f"site vs mode spectrum L<={min(max_L, 8)}", float(worst), 1e-10)


def check_partition_function(max_L: int) -> CheckResult:
    worst = 0.0
    for L in range(2, min(max_L, 10) + 1):
        for beta, mu in ((0.5, -0.7), (2.0, 0.4)):
            p = ff.ModelParams(L, 1.0, mu, beta)
            dense = orc.log_partition_function(p)
            product = orc.log_partition_function_product(p)
            # relative error of Z itself
            worst = max(worst, abs(np.expm1(dense - product)))
    return CheckResult(f"partition function L<={min(max_L, 10)}", float(worst), 1e-10)


def check_eigenstates(max_L: int) -> CheckResult:
    """Closed-form eigenstate concurrence vs partial trace for every mode subset."""
    worst = 0.0
    top = min(max_L, 6)
    for L in range(2, top + 1):
        p = ff.ModelParams(L)
        for N in range(L + 1):
            for modes in itertools.combinations(range(1, L + 1), N):
                rdm = orc.two_site_rdm(orc.slater_state(L, modes))
                closed = ff.eigenstate_concurrence(p, ff.EigenstateSpec(modes))
                worst = max(worst, abs(closed - orc.wootters_concurrence(rdm)))
    return CheckResult(f"eigenstate concurrence, all subsets L<={top}", worst, 1e-10)


def check_eigenstate_rdm(max_L: int) -> CheckResult:
    worst = 0.0
    top = min(max_L, 6)
    for L in range(2, top + 1):
        p = ff.ModelParams(L)
        for N in range(L + 1):
            for modes in itertools.combinations(range(1, L + 1), N):
                rdm = orc.two_site_rdm(orc.slater_state(L, modes)).rho
                closed = ff.eigenstate_rdm(p, ff.EigenstateSpec(modes)).matrix()
                worst = max(worst, float(np.max(np.abs(rdm - closed))))
    return CheckResult(f"eigenstate RDM entries L<={top}", worst, 1e-12)


def thermal_grid() -> list[tuple[float, float]]:
    return [(b, m) for b in np.linspace(0.2, 5.0, 5) for m in np.linspace(-2.0, 2.0, 5)]


def check_thermal(max_L: int) -> CheckResult:
    """Closed-form thermal concurrence vs dense Gibbs state on a 5x5 grid."""
    worst = 0.0
    top = min(max_L, 6)
    for L in range(2, top + 1):
        for beta, mu in thermal_grid():
            p = ff.ModelParams(L, 1.0, mu, beta)
            rho, _ = orc.build_hamiltonian_and_gibbs(p)
            oracle_c = orc.wootters_concurrence(orc.two_site_rdm(rho))
            worst = max(worst, abs(ff.thermal_concurrence(p) - oracle_c))
    return CheckResult(f"thermal concurrence 5x5 grid L<={top}", worst, 1e-10)


def check_thermal_rdm(max_L: int) -> CheckResult:
    worst = 0.0
    top = min(max_L, 6)
    for L in range(2, top + 1):
        for beta, mu in thermal_grid():
            p = ff.ModelParams(L, 1.0, mu, beta)
            rho = orc.gibbs_from_site_hamiltonian(p)
            rdm = orc.two_site_rdm(rho).rho
            worst = max(worst, float(np.max(np.abs(rdm - ff.thermal_rdm(p).matrix()))))
    return CheckResult(f"thermal RDM entries (site diagonalisation) L<={top}", worst, 1e-12)


def check_two_site_closed_form() -> CheckResult:
    worst = 0.0
    for beta, mu in thermal_grid():
        p = ff.ModelParams(2, 1.0, mu, beta)
        worst = max(worst, abs(ff.thermal_concurrence(p) - ff.thermal_concurrence_two_site(p)))
        rho, _ = orc.build_hamiltonian_and_gibbs(p)
        n_oracle = float(np.real(np.sum(np.diag(rho) * orc.number_operator_diagonal(2))))
        worst = max(worst, abs(n_oracle - ff.mean_number_two_site(p)))
    return CheckResult("two-site closed forms", worst, 1e-12)


def check_eta(max_L: int) -> CheckResult:
    worst = 0.0
    top = min(max_L, 10)
    for L in range(2, top + 1):
        for N in range(L + 1):
            state = eta.EtaNumberState(L, N)
            rdm = orc.two_site_rdm(orc.dicke_state(L, N))
            worst = max(worst, float(np.max(np.abs(rdm.rho - eta.eta_rdm(state).matrix()))))
            worst = max(worst, abs(eta.eta_concurrence(state) - orc.wootters_concurrence(rdm)))
    return CheckResult(f"eta states vs Dicke partial trace L<={top}", worst, 1e-12)


def check_bcs() -> CheckResult:
    """4x4 pairing Gibbs state vs closed-form concurrence and gap equation."""
    worst = 0.0
    for beta in (0.5, 2.0, 8.0, 40.0):
        for eps in (-0.4, 0.0, 0.3, 1.2):
            for delta in (0.0, 0.05, 0.3, 0.7):
                for phi in (0.0, 2.1):
                    point = bcs.BcsPoint(eps, delta, phi, beta)
                    rho = orc.bcs_mode_gibbs(eps, delta * np.exp(1j * phi), beta)
                    worst = max(
                        worst,
                        abs(orc.wootters_concurrence(rho) - bcs.bcs_thermal_concurrence(point)),
                        abs(abs(orc.bcs_pair_amplitude(rho)) - bcs.pair_amplitude(point)),
                    )
    return CheckResult("pairing model Gibbs state", worst, 1e-10)


def _suite(name: str, max_L: int) -> list[Callable[[], CheckResult]]:
    return {
        "operators": [
            lambda: check_anticommutators(max_L),
            lambda: check_spectrum(max_L),
            lambda: check_partition_function(max_L),
        ],
        "eigenstate": [lambda: check_eigenstates(max_L), lambda: check_eigenstate_rdm(max_L)],
        "thermal": [
            lambda: check_thermal(max_L),
            lambda: check_thermal_rdm(max_L),
            check_two_site_closed_form,
        ],
        "eta": [lambda: check_eta(max_L)],
        "bcs": [check_bcs],
    }[name]


def run_checks(suite: str = "all", max_L: int = 6) -> Iterator[CheckResult]:
    names = SUITES if suite == "all" else (suite,)
    for name in names:
        for check in _suite(name, max_L):
            yield check()
