"""
Brute-force Fock-space reference computations.

States are dense vectors over the ``2**L`` occupation bitstrings. Site ``l``
(1-based) is bit ``l - 1`` of the basis index, so index
``b = sum_l n_l 2**(l-1)``; the basis vector ``|n_1 ... n_L>`` is
``(c_1^dag)^{n_1} ... (c_L^dag)^{n_L} |0>``, which puts the Jordan-Wigner
string on the sites with smaller index. Read as qubits, the same vector is
the image of the fermionic state under the occupation-number mapping, and
reduced density matrices of two sites are ordinary partial traces.

Nothing here uses the closed forms of the model modules; the only shared
input is the parameter container.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

import numpy as np
import scipy.sparse as sp

from .core import InputDomainError, ResourceLimitError
from .free_fermion import ModelParams

#: Largest L for which dense 2**L x 2**L matrices are built.
DENSE_CAP = 12
#: Largest L for pure-state vectors.
STATE_CAP = 14

_SY_SY = np.array(
    [[0, 0, 0, -1], [0, 0, 1, 0], [0, 1, 0, 0], [-1, 0, 0, 0]], dtype=complex
)


@dataclass
class FockState:
    """Dense amplitude vector of ``L`` local fermionic modes."""

    L: int
    amplitudes: np.ndarray

    def __post_init__(self):
        if self.L > STATE_CAP:
            raise ResourceLimitError(f"L={self.L} above state cap {STATE_CAP}")
        self.amplitudes = np.asarray(self.amplitudes, dtype=complex)
        if self.amplitudes.shape != (2**self.L,):
            raise InputDomainError(
                f"amplitude vector has shape {self.amplitudes.shape}, "
                f"expected ({2**self.L},)"
            )

    @classmethod
    def vacuum(cls, L: int) -> FockState:
        amp = np.zeros(2**L, dtype=complex)
        amp[0] = 1.0
        return cls(L, amp)

    @classmethod
    def basis(cls, L: int, occupations) -> FockState:
        """Basis vector ``|n_1 ... n_L>``."""
        index = sum(int(n) << l for l, n in enumerate(occupations))
        amp = np.zeros(2**L, dtype=complex)
        amp[index] = 1.0
        return cls(L, amp)

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def normalized(self) -> FockState:
        nrm = self.norm()
        if nrm == 0:
            raise InputDomainError("cannot normalize the zero vector")
        return FockState(self.L, self.amplitudes / nrm)

    def is_normalized(self, tol: float = 1e-12) -> bool:
        return abs(self.norm() ** 2 - 1.0) <= tol


@dataclass
class DensityMatrix4:
    """Two-qubit density matrix, basis index ``n1 + 2*n2``."""

    rho: np.ndarray

    def __post_init__(self):
        self.rho = np.asarray(self.rho, dtype=complex)
        if self.rho.shape != (4, 4):
            raise InputDomainError(f"expected a 4x4 matrix, got {self.rho.shape}")
        if np.max(np.abs(self.rho - self.rho.conj().T)) > 1e-12:
            raise InputDomainError("density matrix is not Hermitian")
        tr = np.trace(self.rho).real
        if abs(tr - 1.0) > 1e-12:
            raise InputDomainError(f"density matrix has trace {tr!r}")
        lowest = np.linalg.eigvalsh(self.rho)[0]
        if lowest < -1e-10:
            raise InputDomainError(f"density matrix has eigenvalue {lowest!r} < 0")


def _site_mask(L: int, site: int) -> int:
    if not 1 <= site <= L:
        raise InputDomainError(f"site {site} outside 1..{L}")
    return 1 << (site - 1)


def _parity_below(L: int, site: int) -> np.ndarray:
    idx = np.arange(2**L)
    below = idx & ((1 << (site - 1)) - 1)
    counts = np.zeros_like(idx)
    for b in range(site - 1):
        counts += (below >> b) & 1
    return np.where(counts % 2 == 0, 1.0, -1.0)


def apply_creation(state: FockState, site: int) -> FockState:
    """``c_site^dag |state>``, sign ``(-1)^{n_1 + ... + n_{site-1}}``."""
    mask = _site_mask(state.L, site)
    idx = np.arange(2**state.L)
    src = (idx & mask) == 0
    out = np.zeros_like(state.amplitudes)
    sign = _parity_below(state.L, site)
    out[idx[src] | mask] = sign[src] * state.amplitudes[src]
    return FockState(state.L, out)


def apply_annihilation(state: FockState, site: int) -> FockState:
    """``c_site |state>`` (adjoint of :func:`apply_creation`)."""
    mask = _site_mask(state.L, site)
    idx = np.arange(2**state.L)
    src = (idx & mask) != 0
    out = np.zeros_like(state.amplitudes)
    sign = _parity_below(state.L, site)
    out[idx[src] ^ mask] = sign[src] * state.amplitudes[src]
    return FockState(state.L, out)


def momentum_mode_creation(state: FockState, k: int) -> FockState:
    """Apply ``c~_k^dag = L^{-1/2} sum_l omega^{l k} c_l^dag``.

    This is the inverse of ``c_l = L^{-1/2} sum_k omega^{l k} c~_k``,
    ``omega = exp(2 pi i / L)``.
    """
    L = state.L
    if not 1 <= k <= L:
        raise InputDomainError(f"mode {k} outside 1..{L}")
    out = np.zeros_like(state.amplitudes)
    for l in range(1, L + 1):
        phase = np.exp(2j * np.pi * ((l * k) % L) / L)
        out += phase * apply_creation(state, l).amplitudes
    return FockState(L, out / math.sqrt(L))


def slater_state(L: int, modes) -> FockState:
    """``c~_{k_1}^dag ... c~_{k_N}^dag |0>`` (rightmost applied first)."""
    state = FockState.vacuum(L)
    for k in reversed(list(modes)):
        state = momentum_mode_creation(state, k)
    return state


def creation_operator(L: int, site: int) -> sp.csr_matrix:
    """Sparse matrix of ``c_site^dag`` on the full Fock space."""
    mask = _site_mask(L, site)
    idx = np.arange(2**L)
    src = idx[(idx & mask) == 0]
    sign = _parity_below(L, site)[src]
    return sp.csr_matrix((sign, (src | mask, src)), shape=(2**L, 2**L))


def site_hamiltonian(params: ModelParams) -> sp.csr_matrix:
    """Ring Hamiltonian built bond by bond in the site basis.

    The boundary bond ``c_L^dag c_1`` picks up its Jordan-Wigner sign from
    the operator matrices; no mode transformation is involved.
    """
    L = params.L
    cdag = [creation_operator(L, l) for l in range(1, L + 1)]
    c = [op.T.tocsr() for op in cdag]
    dim = 2**L
    H = sp.csr_matrix((dim, dim))
    for l in range(L):
        r = (l + 1) % L
        hop = cdag[l] @ c[r]
        H = H - params.t * (hop + hop.T)
    number = sum(cdag[l] @ c[l] for l in range(L))
    return (H - params.mu * number).tocsr()


def number_operator_diagonal(L: int) -> np.ndarray:
    idx = np.arange(2**L)
    return np.array([bin(b).count("1") for b in idx], dtype=float)


def mode_basis_unitary(L: int) -> np.ndarray:
    """Columns are the Slater determinants of every mode-occupation bitstring."""
    if L > DENSE_CAP:
        raise ResourceLimitError(f"L={L} above dense cap {DENSE_CAP}")
    U = np.zeros((2**L, 2**L), dtype=complex)
    for m in range(2**L):
        modes = [k for k in range(1, L + 1) if m >> (k - 1) & 1]
        U[:, m] = slater_state(L, modes).amplitudes
    return U


def _mode_energy_levels(params: ModelParams) -> np.ndarray:
    L = params.L
    k = np.arange(1, L + 1)
    eps = -2.0 * params.t * np.cos(2.0 * np.pi * k / L) - params.mu
    levels = np.zeros(2**L)
    for i in range(L):
        levels += np.where(np.arange(2**L) >> i & 1, eps[i], 0.0)
    return levels


def build_hamiltonian_and_gibbs(params: ModelParams) -> tuple[np.ndarray, float]:
    """Dense grand-canonical Gibbs state ``exp(-beta H)/Z`` in the site basis.

    Built from the Boltzmann weights of the momentum-occupation eigenstates,
    rotated back with :func:`mode_basis_unitary`. Returns ``(rho, log_Z)``;
    ``log_Z`` is ``nan`` at zero temperature.
    """
    if params.L > DENSE_CAP:
        raise ResourceLimitError(f"L={params.L} above dense cap {DENSE_CAP}")
    levels = _mode_energy_levels(params)
    w = _boltzmann(levels, params.beta)
    U = mode_basis_unitary(params.L)
    rho = (U * (w / w.sum())) @ U.conj().T
    if math.isinf(params.beta):
        return rho, math.nan
    return rho, float(-params.beta * levels.min() + np.log(w.sum()))


def gibbs_from_site_hamiltonian(params: ModelParams) -> np.ndarray:
    """Gibbs state by dense diagonalisation of :func:`site_hamiltonian`."""
    if params.L > DENSE_CAP:
        raise ResourceLimitError(f"L={params.L} above dense cap {DENSE_CAP}")
    E, V = np.linalg.eigh(site_hamiltonian(params).toarray())
    w = _boltzmann(E, params.beta)
    return (V * (w / w.sum())) @ V.conj().T


def _boltzmann(levels: np.ndarray, beta: float) -> np.ndarray:
    shifted = levels - levels.min()
    if math.isinf(beta):
        return np.where(shifted <= 1e-12, 1.0, 0.0)
    return np.exp(-beta * shifted)


def log_partition_function(params: ModelParams) -> float:
    """``log Z`` from the dense spectrum of the site Hamiltonian."""
    E = np.linalg.eigvalsh(site_hamiltonian(params).toarray())
    e0 = E.min()
    return float(-params.beta * e0 + np.log(np.sum(np.exp(-params.beta * (E - e0)))))


def log_partition_function_product(params: ModelParams) -> float:
    """``log prod_k [1 + exp(-beta (eps_k - mu))]``."""
    k = np.arange(1, params.L + 1)
    eps = -2.0 * params.t * np.cos(2.0 * np.pi * k / params.L) - params.mu
    return float(np.sum(np.logaddexp(0.0, -params.beta * eps)))


def two_site_rdm(source, L: int | None = None) -> DensityMatrix4:
    """Reduced density matrix of sites 1 and 2.

    ``source`` is a :class:`FockState`, a state vector, or a dense
    ``2**L x 2**L`` density matrix.
    """
    if isinstance(source, FockState):
        L, psi = source.L, source.amplitudes
        psi = psi / np.linalg.norm(psi)
        M = psi.reshape(2 ** (L - 2), 4)
        rho = M.T @ M.conj()
    else:
        arr = np.asarray(source, dtype=complex)
        L = int(round(math.log2(arr.shape[0])))
        if arr.ndim == 1:
            return two_site_rdm(FockState(L, arr))
        R = 2 ** (L - 2)
        rho = np.einsum("rirj->ij", arr.reshape(R, 4, R, 4))
    return DensityMatrix4(rho)


def wootters_concurrence(rho) -> float:
    """Concurrence of an arbitrary two-qubit density matrix.

    ``max(0, l1 - l2 - l3 - l4)`` with ``l_i`` the decreasing square roots of
    the eigenvalues of ``rho (sy x sy) rho* (sy x sy)``. They are obtained as
    singular values of ``F^T (sy x sy) F`` for a factor ``rho = F F^dag``,
    which avoids taking square roots of tiny eigenvalues of that product.
    """
    if not isinstance(rho, DensityMatrix4):
        rho = DensityMatrix4(rho)
    p, V = np.linalg.eigh(rho.rho)
    F = V * np.sqrt(np.clip(p, 0.0, None))
    lam = np.linalg.svd(F.T @ _SY_SY @ F, compute_uv=False)
    return float(max(0.0, lam[0] - lam[1] - lam[2] - lam[3]))


def dicke_state(L: int, N: int) -> FockState:
    """Equal-weight superposition of all weight-``N`` bitstrings of ``L`` qubits."""
    if not 0 <= N <= L:
        raise InputDomainError(f"N={N} outside 0..{L}")
    amp = np.zeros(2**L, dtype=complex)
    for occupied in combinations(range(L), N):
        amp[sum(1 << i for i in occupied)] = 1.0
    return FockState(L, amp / math.sqrt(math.comb(L, N)))


def expectation(state: FockState, op) -> complex:
    psi = state.amplitudes
    return complex(np.vdot(psi, op @ psi))


def bcs_mode_hamiltonian(epsilon: float, delta: complex) -> np.ndarray:
    """Dense 4x4 pairing Hamiltonian of the modes ``k`` (site 1) and ``-k`` (site 2).

    ``eps (n_k + n_-k - 1) + delta c_k^dag c_-k^dag + h.c.``
    """
    ck_dag = creation_operator(2, 1).toarray()
    cmk_dag = creation_operator(2, 2).toarray()
    ck, cmk = ck_dag.conj().T, cmk_dag.conj().T
    pair = ck_dag @ cmk_dag
    H = epsilon * (ck_dag @ ck + cmk_dag @ cmk - np.eye(4))
    return H + delta * pair + np.conj(delta) * pair.conj().T


def bcs_mode_gibbs(epsilon: float, delta: complex, beta: float) -> np.ndarray:
    E, V = np.linalg.eigh(bcs_mode_hamiltonian(epsilon, delta))
    w = _boltzmann(E, beta)
    return (V * (w / w.sum())) @ V.conj().T


def bcs_pair_amplitude(rho: np.ndarray) -> complex:
    """``<c_-k c_k>`` in a two-mode state."""
    ck = creation_operator(2, 1).toarray().conj().T
    cmk = creation_operator(2, 2).toarray().conj().T
    return complex(np.trace(rho @ (cmk @ ck)))
