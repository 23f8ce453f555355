"""
Two-mode reduced density matrix and its concurrence.

Every model in this package ends up with a number-conserving reduced
density matrix for two local fermionic modes. In the occupation basis
``index = n1 + 2*n2`` it reads::

    [[u, 0,       0,  0],
     [0, w1, conj(z), 0],
     [0, z,       w2, 0],
     [0, 0,       0,  v]]

with ``z = <c1^dag c2>`` stored at ``[2, 1]``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

#: Absolute tolerance for the RDM invariants.
RDM_TOL = 1e-12


class InputDomainError(ValueError):
    """Raised when an argument violates a documented precondition or invariant."""


class NumericError(RuntimeError):
    """Raised when an internal numerical routine fails to converge."""


class ResourceLimitError(InputDomainError):
    """Raised when a brute-force computation would exceed its size cap."""


@dataclass(frozen=True)
class TwoSiteRDM:
    """Number-conserving reduced density matrix of two local modes.

    Parameters
    ----------
    u : float
        Probability that both modes are empty.
    w1 : float
        Probability that mode 1 is occupied and mode 2 empty.
    w2 : float
        Probability that mode 1 is empty and mode 2 occupied.
    v : float
        Probability that both modes are occupied.
    z : complex
        Coherence ``<c1^dag c2>``.
    """

    u: float
    w1: float
    w2: float
    v: float
    z: complex

    def __post_init__(self):
        for name in ("u", "w1", "w2", "v"):
            p = getattr(self, name)
            if not np.isfinite(p) or p < -RDM_TOL or p > 1 + RDM_TOL:
                raise InputDomainError(f"{name}={p!r} is not a probability in [0, 1]")
        total = self.u + self.w1 + self.w2 + self.v
        if abs(total - 1.0) > RDM_TOL:
            raise InputDomainError(f"u + w1 + w2 + v = {total!r} != 1")
        z2 = abs(self.z) ** 2
        if not z2 <= self.w1 * self.w2 + RDM_TOL:
            raise InputDomainError(
                f"|z|^2 = {z2!r} exceeds w1*w2 = {self.w1 * self.w2!r} (not positive)"
            )
        object.__setattr__(self, "z", complex(self.z))

    def matrix(self) -> np.ndarray:
        """Dense 4x4 matrix in the ``n1 + 2*n2`` basis."""
        rho = np.zeros((4, 4), dtype=complex)
        rho[0, 0] = self.u
        rho[1, 1] = self.w1
        rho[2, 2] = self.w2
        rho[3, 3] = self.v
        rho[2, 1] = self.z
        rho[1, 2] = self.z.conjugate()
        return rho


def concurrence_from_rdm(rdm: TwoSiteRDM) -> float:
    """Concurrence ``2 max(0, |z| - sqrt(u v))`` of a number-conserving RDM.

    Examples
    --------
    >>> concurrence_from_rdm(TwoSiteRDM(u=0, w1=0.5, w2=0.5, v=0, z=0.5))
    1.0
    """
    # u, v may sit up to RDM_TOL below zero after validation
    uv = max(rdm.u, 0.0) * max(rdm.v, 0.0)
    return 2.0 * max(0.0, abs(rdm.z) - math.sqrt(uv))


def entanglement_window(z_abs: float, n: float) -> bool:
    """Whether an eigenstate with filling ``n`` and ``|<c1^dag c2>| = z_abs``
    has nonzero pairwise concurrence.

    True iff ``|z|^2`` lies strictly between
    ``n^2 - n + 1 -/+ sqrt(2 n^2 - 2 n + 1)``.
    """
    if not 0.0 <= z_abs <= 1.0:
        raise InputDomainError(f"z_abs={z_abs!r} outside [0, 1]")
    if not 0.0 <= n <= 1.0:
        raise InputDomainError(f"n={n!r} outside [0, 1]")
    centre = n * n - n + 1.0
    half_width = math.sqrt(2.0 * n * n - 2.0 * n + 1.0)
    z2 = z_abs * z_abs
    return centre - half_width < z2 < centre + half_width
