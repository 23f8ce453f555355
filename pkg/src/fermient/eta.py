"""
Eta-pairing number states of the Hubbard model.

``|N> ∝ (eta^+)^N |0>`` puts ``N`` on-site pairs on ``L`` sites with equal
weight on every configuration. Each on-site pair is a hard-core boson, so
the state is a Dicke state of ``L`` qubits and its two-site reduced density
matrix has no Jordan-Wigner signs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import InputDomainError, TwoSiteRDM, concurrence_from_rdm


@dataclass(frozen=True)
class EtaNumberState:
    L: int
    N: int

    def __post_init__(self):
        if int(self.L) != self.L or self.L < 1:
            raise InputDomainError(f"L={self.L!r} must be a positive integer")
        if int(self.N) != self.N or not 0 <= self.N <= self.L:
            raise InputDomainError(f"N={self.N!r} outside 0..{self.L}")

    @property
    def log_normalization(self) -> float:
        """``log(L! N! / (L - N)!)``."""
        L, N = self.L, self.N
        return math.lgamma(L + 1) + math.lgamma(N + 1) - math.lgamma(L - N + 1)

    @property
    def normalization(self) -> float:
        """``L! N! / (L - N)!``; ``inf`` once it leaves the float range,
        use :attr:`log_normalization` there."""
        if self.L <= 20:
            L, N = self.L, self.N
            return float(math.factorial(L) * math.factorial(N) // math.factorial(L - N))
        try:
            return math.exp(self.log_normalization)
        except OverflowError:
            return math.inf


def _require_pairs_of_sites(state: EtaNumberState) -> None:
    if state.L < 2:
        raise InputDomainError(f"two-site quantities need L >= 2, got L={state.L}")


def odlro_correlator(state: EtaNumberState) -> float:
    """Pair-pair correlator ``<c_jd^dag c_ju^dag c_lu c_ld>``, ``j != l``.

    ``N (L - N) / (L (L - 1))``, independent of the distance between sites.
    """
    _require_pairs_of_sites(state)
    L, N = state.L, state.N
    return N * (L - N) / (L * (L - 1))


def eta_rdm(state: EtaNumberState) -> TwoSiteRDM:
    _require_pairs_of_sites(state)
    L, N = state.L, state.N
    norm = L * (L - 1)
    O = odlro_correlator(state)
    return TwoSiteRDM(
        u=(L - N) * (L - N - 1) / norm,
        w1=O,
        w2=O,
        v=N * (N - 1) / norm,
        z=O,
    )


def eta_concurrence(state: EtaNumberState) -> float:
    """``C = 2 {O - [O (N-1)(L-N-1) / (L(L-1))]^(1/2)}``."""
    _require_pairs_of_sites(state)
    L, N = state.L, state.N
    O = odlro_correlator(state)
    # N = 0 or N = L makes the product -0 or 0
    inner = max(O * (N - 1) * (L - N - 1) / (L * (L - 1)), 0.0)
    return 2.0 * (O - math.sqrt(inner))


def eta_concurrence_from_rdm(state: EtaNumberState) -> float:
    return concurrence_from_rdm(eta_rdm(state))
