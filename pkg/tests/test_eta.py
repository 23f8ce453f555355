import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from fermient import eta
from fermient import oracle as orc
from fermient.core import InputDomainError


def spinful_eta_state(L, N):
    """Unnormalised (eta^+)^N |0> on 2L modes; site j carries modes 2j-1 (up), 2j (down)."""
    up = [orc.creation_operator(2 * L, 2 * j - 1) for j in range(1, L + 1)]
    dn = [orc.creation_operator(2 * L, 2 * j) for j in range(1, L + 1)]
    eta_plus = sum(d @ u for u, d in zip(up, dn))
    psi = np.zeros(2 ** (2 * L), dtype=complex)
    psi[0] = 1.0
    for _ in range(N):
        psi = eta_plus @ psi
    return psi, up, dn


class TestState:
    @pytest.mark.parametrize("L, N", [(0, 0), (3, 4), (3, -1), (2.5, 1)])
    def test_validation(self, L, N):
        with pytest.raises(InputDomainError):
            eta.EtaNumberState(L, N)

    @pytest.mark.parametrize("L, N", [(1, 0), (4, 2), (5, 3), (20, 10), (21, 7), (200, 100)])
    def test_normalization(self, L, N):
        s = eta.EtaNumberState(L, N)
        exact = math.factorial(L) * math.factorial(N) // math.factorial(L - N)
        assert s.log_normalization == pytest.approx(math.log(exact), rel=1e-13)
        if exact < 1e300:
            assert s.normalization == pytest.approx(float(exact), rel=1e-12)
        else:
            assert s.normalization == math.inf

    @pytest.mark.parametrize("L, N", [(2, 1), (3, 2), (4, 2)])
    def test_normalization_from_fock_space(self, L, N):
        psi, _, _ = spinful_eta_state(L, N)
        assert np.vdot(psi, psi).real == pytest.approx(eta.EtaNumberState(L, N).normalization, rel=1e-12)


class TestCorrelator:
    @pytest.mark.parametrize("L", [2, 5, 9])
    def test_empty_and_full(self, L):
        assert eta.odlro_correlator(eta.EtaNumberState(L, 0)) == 0
        assert eta.odlro_correlator(eta.EtaNumberState(L, L)) == 0

    def test_four_sites(self):
        assert eta.odlro_correlator(eta.EtaNumberState(4, 2)) == pytest.approx(1 / 3, abs=1e-15)

    @pytest.mark.parametrize("L, N", [(3, 1), (4, 2), (4, 3)])
    def test_pair_correlator_in_fock_space(self, L, N):
        psi, up, dn = spinful_eta_state(L, N)
        psi = psi / np.linalg.norm(psi)
        # c_1d^dag c_1u^dag c_2u c_2d
        op = dn[0] @ up[0] @ up[1].T @ dn[1].T
        value = np.vdot(psi, op @ psi)
        assert value.real == pytest.approx(eta.odlro_correlator(eta.EtaNumberState(L, N)), abs=1e-12)
        assert abs(value.imag) < 1e-14

    def test_thermodynamic_limit(self):
        for n in (0.25, 0.5, 0.8):
            for L in (100, 1000, 10**4):
                O = eta.odlro_correlator(eta.EtaNumberState(L, int(n * L)))
                assert abs(O - n * (1 - n)) < 1.0 / L

    def test_requires_two_sites(self):
        with pytest.raises(InputDomainError):
            eta.odlro_correlator(eta.EtaNumberState(1, 1))
        with pytest.raises(InputDomainError):
            eta.eta_concurrence(eta.EtaNumberState(1, 0))


class TestRdm:
    def test_four_sites(self):
        r = eta.eta_rdm(eta.EtaNumberState(4, 2))
        assert (r.u, r.v) == pytest.approx((1 / 6, 1 / 6), abs=1e-15)
        assert r.z == pytest.approx(1 / 3, abs=1e-15)

    def test_vacuum(self):
        r = eta.eta_rdm(eta.EtaNumberState(7, 0))
        assert (r.u, r.w1, r.w2, r.v, r.z) == (1, 0, 0, 0, 0)

    @pytest.mark.parametrize("L, N", [(10, 3), (6, 4), (8, 1)])
    def test_dicke_oracle(self, L, N):
        rho = orc.two_site_rdm(orc.dicke_state(L, N)).rho
        closed = eta.eta_rdm(eta.EtaNumberState(L, N)).matrix()
        assert np.max(np.abs(rho - closed)) < 1e-12

    def test_spinful_oracle(self):
        # the pair occupation of sites 1 and 2 directly in the 2L-mode Fock space
        L, N = 4, 2
        psi, up, dn = spinful_eta_state(L, N)
        psi = psi / np.linalg.norm(psi)
        pair = [d @ u @ u.T @ d.T for u, d in zip(up, dn)]
        p1, p2 = np.vdot(psi, pair[0] @ psi).real, np.vdot(psi, pair[1] @ psi).real
        both = np.vdot(psi, pair[0] @ pair[1] @ psi).real
        r = eta.eta_rdm(eta.EtaNumberState(L, N))
        assert r.v == pytest.approx(both, abs=1e-12)
        assert r.w1 == pytest.approx(p1 - both, abs=1e-12)
        assert r.w2 == pytest.approx(p2 - both, abs=1e-12)


class TestConcurrence:
    @pytest.mark.parametrize("L", range(2, 30))
    def test_w_state(self, L):
        assert eta.eta_concurrence(eta.EtaNumberState(L, 1)) == pytest.approx(2 / L, abs=1e-15)

    def test_four_sites(self):
        C = eta.eta_concurrence(eta.EtaNumberState(4, 2))
        assert C == pytest.approx(1 / 3, abs=1e-15)
        rdm = orc.two_site_rdm(orc.dicke_state(4, 2))
        assert orc.wootters_concurrence(rdm) == pytest.approx(1 / 3, abs=1e-12)

    @pytest.mark.parametrize("L", range(2, 31))
    def test_identity_with_rdm_path(self, L):
        for N in range(L + 1):
            s = eta.EtaNumberState(L, N)
            assert eta.eta_concurrence(s) == pytest.approx(eta.eta_concurrence_from_rdm(s), abs=1e-14)

    @given(st.integers(2, 5000), st.data())
    def test_pair_hole_symmetry(self, L, data):
        N = data.draw(st.integers(0, L))
        a = eta.eta_concurrence(eta.EtaNumberState(L, N))
        b = eta.eta_concurrence(eta.EtaNumberState(L, L - N))
        assert a == pytest.approx(b, abs=1e-15)

    def test_exact_rational_example(self):
        # L=6, N=2: O = 8/30, inner = O * 3/30 = 4/150
        O = Fraction(8, 30)
        expected = 2 * (float(O) - math.sqrt(float(O * Fraction(3, 30))))
        assert eta.eta_concurrence(eta.EtaNumberState(6, 2)) == pytest.approx(expected, abs=1e-15)

    def test_decay_at_half_filling(self):
        Ls = [10, 100, 1000, 10**4]
        C = [eta.eta_concurrence(eta.EtaNumberState(L, L // 2)) for L in Ls]
        assert all(a > b for a, b in zip(C, C[1:]))
        assert C[-1] < 1e-3
        scaled = [c * L for c, L in zip(C, Ls)]
        assert max(scaled) < 2.0

    @pytest.mark.parametrize("n", [0.1, 0.3, 0.7])
    def test_decay_generic_filling(self, n):
        C = [eta.eta_concurrence(eta.EtaNumberState(L, int(n * L))) for L in (100, 1000, 10**4)]
        assert C[0] > C[1] > C[2] >= 0
        assert C[2] < 1e-3
