import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis.strategies import integers
from numpy.testing import assert_allclose

from seqgen.library import X, Z
from seqgen.mps import (BondProfile, MatrixProductState, PureState,
                        StateError, fidelity, local_expectation,
                        mps_from_dense, mps_to_dense, product_state,
                        random_mps, random_state, schmidt_profile,
                        schmidt_rank_at_cut, schmidt_values)
from seqgen.recipes import ghz_state


#-------------------------------------------------------------------------------
# PureState
#-------------------------------------------------------------------------------
def test_zero_state_is_rejected():
    with pytest.raises(StateError):
        PureState(np.zeros(4))
    with pytest.raises(StateError):
        PureState(np.zeros(4), normalize=True)


def test_unnormalized_state_is_rejected_unless_asked():
    with pytest.raises(StateError):
        PureState([1.0, 1.0])
    psi = PureState([1.0, 1.0], normalize=True)
    assert_allclose(psi.amplitudes, [2**-0.5, 2**-0.5])


def test_amplitudes_are_read_only():
    psi = product_state([0, 1])
    with pytest.raises(ValueError):
        psi.amplitudes[0] = 1.0


def test_dims_must_match_amplitudes():
    with pytest.raises(StateError):
        PureState(np.ones(3) / np.sqrt(3))
    with pytest.raises(StateError):
        PureState(np.ones(4) / 2.0, dims=(2, 3))


def test_product_state_index():
    psi = product_state([1, 0, 1])
    assert psi.n_sites == 3
    assert psi.amplitudes[5] == 1.0


@settings(max_examples=30, deadline=None)
@given(integers(1, 6), integers(0, 2**32 - 1))
def test_fidelity_symmetric_and_bounded(n, seed):
    rng = np.random.default_rng(seed)
    a = random_state(n, rng)
    b = random_state(n, rng)
    f = fidelity(a, b)
    assert 0.0 <= f <= 1.0
    assert f == pytest.approx(fidelity(b, a), abs=1e-15)
    assert fidelity(a, a) == pytest.approx(1.0, abs=1e-12)


def test_fidelity_register_mismatch():
    with pytest.raises(StateError):
        fidelity(product_state([0, 0]), product_state([0, 0, 0]))


def test_local_expectation():
    assert local_expectation(product_state([0, 1]), {0: Z}) == \
        pytest.approx(1.0)
    assert local_expectation(product_state([0, 1]), {1: Z}) == \
        pytest.approx(-1.0)
    assert local_expectation(ghz_state(3), {0: X, 1: X, 2: X}) == \
        pytest.approx(1.0)


#-------------------------------------------------------------------------------
# MPS conversion
#-------------------------------------------------------------------------------
@settings(max_examples=40, deadline=None)
@given(integers(1, 7), integers(0, 2**32 - 1))
def test_dense_roundtrip(n, seed):
    psi = random_state(n, np.random.default_rng(seed))
    mps = mps_from_dense(psi, tol=0.0)
    assert fidelity(mps_to_dense(mps), psi) == pytest.approx(1.0, abs=1e-10)
    assert_allclose(mps_to_dense(mps).amplitudes, psi.amplitudes, atol=1e-10)


def test_sites_are_left_canonical(rng):
    mps = mps_from_dense(random_state(6, rng))
    for a in mps.site_tensors:
        acc = sum(a[i] @ a[i].conj().T for i in range(a.shape[0]))
        assert_allclose(acc, np.eye(a.shape[1]), atol=1e-12)


def test_generic_bond_profile(rng):
    mps = mps_from_dense(random_state(6, rng))
    assert mps.bond_profile == (1, 2, 4, 8, 4, 2, 1)
    assert mps.bond_profile.within_exact_bound(mps.local_dims)


def test_product_state_has_unit_bonds():
    mps = mps_from_dense(product_state([1, 0, 1, 1]))
    assert mps.bond_profile == (1, 1, 1, 1, 1)


def test_w_and_ghz_bonds(w4):
    assert mps_from_dense(w4).bond_profile == (1, 2, 2, 2, 1)
    assert schmidt_profile(ghz_state(5)) == (1, 2, 2, 2, 2, 1)


def test_gauge_is_deterministic(rng):
    psi = random_state(5, rng)
    a = mps_from_dense(psi)
    b = mps_from_dense(psi)
    for x, y in zip(a.site_tensors, b.site_tensors):
        assert np.array_equal(x, y)


def test_truncation_drops_small_schmidt_values():
    amps = np.zeros(4, dtype=complex)
    amps[0] = 1.0
    amps[3] = 1e-8
    psi = PureState(amps, normalize=True)
    assert mps_from_dense(psi, tol=1e-12).bond_profile == (1, 2, 1)
    assert mps_from_dense(psi, tol=1e-6).bond_profile == (1, 1, 1)


def test_negative_tol():
    with pytest.raises(StateError):
        mps_from_dense(product_state([0]), tol=-1.0)


def test_contraction_reports_norm():
    a = np.zeros((2, 1, 1))
    a[0, 0, 0] = 3.0
    a[1, 0, 0] = 4.0
    state, norm = mps_to_dense(MatrixProductState([a], [1.0], [1.0]),
                               return_norm=True)
    assert norm == pytest.approx(5.0)
    assert_allclose(state.amplitudes, [0.6, 0.8])


def test_zero_mps_is_rejected():
    a = np.zeros((2, 1, 1))
    with pytest.raises(StateError):
        mps_to_dense(MatrixProductState([a], [1.0], [1.0]))


def test_bond_mismatch():
    with pytest.raises(StateError):
        MatrixProductState([np.ones((2, 2, 1)), np.ones((2, 1, 3))],
                           [1.0], [1.0])


def test_random_mps_bonds(rng):
    mps = random_mps(5, 3, rng)
    assert mps.bond_profile == BondProfile([1, 2, 3, 3, 2, 1])


#-------------------------------------------------------------------------------
# Schmidt ranks
#-------------------------------------------------------------------------------
def test_schmidt_values_of_bell_pair():
    s = schmidt_values(ghz_state(2), 1)
    assert_allclose(s, [2**-0.5, 2**-0.5])
    assert schmidt_rank_at_cut(ghz_state(2), 1) == 2


def test_cut_out_of_range():
    with pytest.raises(StateError):
        schmidt_values(ghz_state(3), 0)
    with pytest.raises(StateError):
        schmidt_values(ghz_state(3), 3)
