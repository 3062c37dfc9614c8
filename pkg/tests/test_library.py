import numpy as np
import pytest
from numpy.testing import assert_allclose

from seqgen.library import (CNOT, CZ, H, ISWAP, SQRT_ISWAP, SWAP, GateError,
                            TwoQubitGate, flip_first, gate, rz,
                            unitarity_error, verify_decomposition)


@pytest.mark.parametrize('form', ['CZ_FORM', 'CNOT_FORM'])
def test_iswap_decompositions(form):
    assert verify_decomposition(form) <= 1e-14


def test_wrong_angle_breaks_the_identity():
    assert verify_decomposition('CZ_FORM', rz_angle=np.pi) == \
        pytest.approx(np.sqrt(2.0))


def test_unknown_decomposition():
    with pytest.raises(GateError):
        verify_decomposition('SWAP_FORM')


def test_sqrt_iswap_squares_to_iswap():
    assert_allclose(SQRT_ISWAP @ SQRT_ISWAP, ISWAP, atol=1e-12)


@pytest.mark.parametrize('u', [SWAP, CZ, CNOT, ISWAP, SQRT_ISWAP, H])
def test_fixed_gates_are_unitary(u):
    assert unitarity_error(u) < 1e-15


def test_hadamard_conjugates_cnot_to_cz():
    h2 = gate('H2').matrix
    assert_allclose(h2 @ CNOT @ h2, CZ, atol=1e-15)


def test_lookup():
    assert gate('iswap').name == 'ISWAP'
    assert gate('cz').n_qubits == 2
    assert gate('x').n_qubits == 1
    assert_allclose(gate('RZ', np.pi / 2).matrix, rz(np.pi / 2))
    with pytest.raises(GateError):
        gate('RZ')
    with pytest.raises(GateError):
        gate('TOFFOLI')


def test_dagger_inverts():
    g = gate('SQRT_ISWAP')
    assert_allclose(g.dagger() @ g, np.eye(4), atol=1e-15)


def test_non_unitary_gate():
    with pytest.raises(GateError):
        TwoQubitGate('bad', np.ones((4, 4)))


def test_flip_first_moves_the_exchange_pair():
    u = flip_first(SQRT_ISWAP)
    out = u @ np.array([1.0, 0.0, 0.0, 0.0])
    assert_allclose(out, np.array([1.0, 0.0, 0.0, 1j]) / np.sqrt(2.0),
                    atol=1e-15)
