__doc__ = """
Gate library: the single- and two-qubit matrices used by the atomic and
cavity recipes, and the two ISWAP decomposition identities.

Two-qubit matrices act on the basis {|00>, |01>, |10>, |11>} with the
first qubit as the slow index. For atom-cavity gates this is the
product basis {|b,0>, |b,1>, |a,0>, |a,1>} (atom first, b = 0, a = 1), so
that the exchange pair |a,0> <-> |b,1> sits at |10> <-> |01>.

Usage:

>>> g = gate('ISWAP')
>>> g.matrix @ [0, 1, 0, 0]                  # i|10>
>>> verify_decomposition('CZ_FORM')          # < 1e-14
>>> verify_decomposition('CZ_FORM', rz_angle=np.pi)  # sqrt(2), wrong phases

"""

import logging

import numpy as np

from .errors import InputError
from .mps import kron

logger = logging.getLogger(__name__)

GATE_TOL = 1e-14

_S2 = 1.0 / np.sqrt(2.0)


class GateError(InputError):
    pass


#-------------------------------------------------------------------------------
# fixed matrices
#-------------------------------------------------------------------------------
I2 = np.eye(2, dtype=complex)
X = np.array([[0, 1], [1, 0]], dtype=complex)
Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
Z = np.array([[1, 0], [0, -1]], dtype=complex)
H = _S2 * np.array([[1, 1], [1, -1]], dtype=complex)

SWAP = np.array([[1, 0, 0, 0],
                 [0, 0, 1, 0],
                 [0, 1, 0, 0],
                 [0, 0, 0, 1]], dtype=complex)
CZ = np.diag([1, 1, 1, -1]).astype(complex)
CNOT = np.array([[1, 0, 0, 0],
                 [0, 1, 0, 0],
                 [0, 0, 0, 1],
                 [0, 0, 1, 0]], dtype=complex)
ISWAP = np.array([[1, 0, 0, 0],
                  [0, 0, 1j, 0],
                  [0, 1j, 0, 0],
                  [0, 0, 0, 1]], dtype=complex)
# exp[i pi (|01><10| + |10><01|) / 4]
SQRT_ISWAP = np.array([[1, 0, 0, 0],
                       [0, _S2, 1j * _S2, 0],
                       [0, 1j * _S2, _S2, 0],
                       [0, 0, 0, 1]], dtype=complex)


def rz(phi):
    """R_z(phi) = exp(-i sigma_z phi / 2)."""
    return np.diag([np.exp(-0.5j * phi), np.exp(0.5j * phi)])


_FIXED = {
    'I': I2,
    'X': X,
    'Y': Y,
    'Z': Z,
    'H': H,
    'SWAP': SWAP,
    'CZ': CZ,
    'CNOT': CNOT,
    'ISWAP': ISWAP,
    'SQRT_ISWAP': SQRT_ISWAP,
    'H2': kron(I2, H),
}


class TwoQubitGate:
    """Named unitary (4x4 for two-qubit gates, 2x2 for the locals)."""

    def __init__(self, name, matrix, angle=None):
        self.name = name
        self.angle = angle
        self.matrix = np.array(matrix, dtype=complex)
        self.matrix.setflags(write=False)
        if unitarity_error(self.matrix) > GATE_TOL:
            raise GateError('%s is not unitary' % name)

    @property
    def n_qubits(self):
        return int(round(np.log2(self.matrix.shape[0])))

    def dagger(self):
        return TwoQubitGate(self.name + '^dag', self.matrix.conj().T,
                            self.angle)

    def __matmul__(self, other):
        m = other.matrix if isinstance(other, TwoQubitGate) else other
        return self.matrix @ m

    def __repr__(self):
        if self.angle is None:
            return '<TwoQubitGate %s>' % self.name
        return '<TwoQubitGate %s(%g)>' % (self.name, self.angle)


def unitarity_error(u):
    u = np.asarray(u)
    return float(np.max(np.abs(u.conj().T @ u - np.eye(u.shape[1]))))


def gate(name, angle=None):
    """Look up a gate by name.

    Names are case-insensitive: I, X, Y, Z, H, H2 (1 x H), SWAP, CZ, CNOT,
    ISWAP, SQRT_ISWAP and RZ, which requires ``angle``.
    """
    key = str(name).upper()
    if key == 'RZ':
        if angle is None:
            raise GateError('RZ needs an angle')
        return TwoQubitGate('RZ', rz(angle), angle)
    if key not in _FIXED:
        raise GateError('unknown gate "%s"' % name)
    return TwoQubitGate(key, _FIXED[key])


def flip_first(u):
    """Conjugate a two-qubit gate by X on the first qubit.

    Moves an atom-cavity gate written with b = 0, a = 1 to a register in
    which the atom uses a = 0, b = 1.
    """
    xf = kron(X, I2)
    return xf @ np.asarray(u) @ xf


#===============================================================================
# decomposition identities
#===============================================================================
def _iswap_cz_form(rz_angle):
    r = kron(rz(rz_angle), rz(rz_angle))
    return 1j * SWAP @ CZ @ r


def _iswap_cnot_form(rz_angle):
    r = kron(rz(rz_angle), rz(rz_angle))
    h2 = kron(I2, H)
    return 1j * SWAP @ r @ h2 @ CNOT @ h2


_FORMS = {'CZ_FORM': _iswap_cz_form,
          'CNOT_FORM': _iswap_cnot_form}


def verify_decomposition(form, rz_angle=np.pi / 2):
    """Max elementwise deviation between ISWAP and one of its decompositions.

    Parameters
    ----------
    form : {'CZ_FORM', 'CNOT_FORM'}
        CZ_FORM is ISWAP = i SWAP CZ [R_z(a) x R_z(a)], CNOT_FORM replaces
        CZ with (1 x H) CNOT (1 x H).
    rz_angle : float
        the local rotation angle a; the identities hold for pi/2.

    Returns
    -------
    dev : float
    """
    key = str(form).upper()
    if key not in _FORMS:
        raise GateError('unknown decomposition "%s"' % form)
    dev = float(np.max(np.abs(ISWAP - _FORMS[key](rz_angle))))
    logger.debug('%s (rz=%g): deviation %.3e', key, rz_angle, dev)
    return dev
