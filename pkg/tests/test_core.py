import cmath
import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from fermient.core import (
    InputDomainError,
    TwoSiteRDM,
    concurrence_from_rdm,
    entanglement_window,
)


def random_rdm(draw_u, draw_v, frac, phase):
    """Valid number-conserving RDM from four numbers in [0, 1]."""
    u = draw_u * 0.5
    v = draw_v * 0.5
    w = (1.0 - u - v) / 2.0
    return TwoSiteRDM(u=u, w1=w, w2=w, v=v, z=frac * w * cmath.exp(1j * phase))


rdms = st.builds(
    random_rdm,
    st.floats(0, 1),
    st.floats(0, 1),
    st.floats(0, 1),
    st.floats(0, 2 * math.pi),
)


@pytest.mark.parametrize(
    "u, w1, w2, v, z, expected",
    [
        (0.0, 0.5, 0.5, 0.0, 0.5, 1.0),
        (1.0, 0.0, 0.0, 0.0, 0.0, 0.0),
        # two sites of the L=4, N=2 Dicke state (oracle partial trace)
        (1 / 6, 1 / 3, 1 / 3, 1 / 6, 1 / 3, 1 / 3),
    ],
)
def test_concurrence_examples(u, w1, w2, v, z, expected):
    rdm = TwoSiteRDM(u, w1, w2, v, z)
    assert concurrence_from_rdm(rdm) == pytest.approx(expected, abs=1e-15)


def test_matrix_layout():
    rho = TwoSiteRDM(0.1, 0.3, 0.4, 0.2, 0.1 + 0.2j).matrix()
    assert np.allclose(np.diag(rho).real, [0.1, 0.3, 0.4, 0.2])
    assert rho[2, 1] == 0.1 + 0.2j
    assert rho[1, 2] == 0.1 - 0.2j
    assert np.allclose(rho, rho.conj().T)


@pytest.mark.parametrize(
    "args, fragment",
    [
        ((0.5, 0.5, 0.5, 0.0, 0.0), "!= 1"),
        ((-0.1, 0.6, 0.5, 0.0, 0.0), "u="),
        ((0.0, 0.5, 0.5, 0.0, 0.6), "w1*w2"),
        ((0.0, 0.5, 0.5, 0.0, float("nan")), "w1*w2"),
    ],
)
def test_invariant_violations_are_named(args, fragment):
    with pytest.raises(InputDomainError, match=fragment.replace("*", r"\*")):
        TwoSiteRDM(*args)


def test_tolerance_is_absolute_1e12():
    TwoSiteRDM(0.25, 0.25, 0.25, 0.25 + 5e-13, 0.0)
    with pytest.raises(InputDomainError):
        TwoSiteRDM(0.25, 0.25, 0.25, 0.25 + 5e-12, 0.0)


@given(rdms, st.floats(0, 2 * math.pi))
def test_phase_of_z_is_irrelevant(rdm, phi):
    rotated = TwoSiteRDM(rdm.u, rdm.w1, rdm.w2, rdm.v, rdm.z * cmath.exp(1j * phi))
    assert concurrence_from_rdm(rotated) == pytest.approx(concurrence_from_rdm(rdm), abs=1e-15)


@given(rdms)
def test_particle_hole_swap(rdm):
    swapped = TwoSiteRDM(rdm.v, rdm.w1, rdm.w2, rdm.u, rdm.z)
    assert concurrence_from_rdm(swapped) == concurrence_from_rdm(rdm)


@given(rdms)
def test_bounded_and_zero_below_sqrt_uv(rdm):
    C = concurrence_from_rdm(rdm)
    assert 0.0 <= C <= 1.0
    if abs(rdm.z) <= math.sqrt(rdm.u * rdm.v):
        assert C == 0.0


@pytest.mark.parametrize(
    "z_abs, n, expected",
    [(0.5, 0.5, True), (0.20, 0.5, False), (0.0, 0.0, False)],
)
def test_window_examples(z_abs, n, expected):
    assert entanglement_window(z_abs, n) is expected


def test_window_half_filling_edge():
    edge = (math.sqrt(2) - 1) / 2
    assert not entanglement_window(edge - 1e-6, 0.5)
    assert entanglement_window(edge + 1e-6, 0.5)


def _window_via_concurrence(z, n):
    u = (n - 1) ** 2 - z * z
    v = n * n - z * z
    return 2 * max(0.0, z - math.sqrt(max(u * v, 0.0))) > 0


@given(st.floats(0, 1), st.floats(0, 1))
def test_window_matches_concurrence_form(z, n):
    centre = n * n - n + 1
    half = math.sqrt(2 * n * n - 2 * n + 1)
    # skip the measure-zero boundary where rounding decides
    if min(abs(z * z - (centre - half)), abs(z * z - (centre + half))) < 1e-9:
        return
    assert entanglement_window(z, n) == _window_via_concurrence(z, n)


@pytest.mark.parametrize("z, n", [(-0.1, 0.5), (1.1, 0.5), (0.2, 1.5)])
def test_window_domain(z, n):
    with pytest.raises(InputDomainError):
        entanglement_window(z, n)
