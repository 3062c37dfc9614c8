__doc__ = """
Sequential generation scenarios.

* isometric ancilla plans (:func:`run_plan`)
* the D-standard map with a tag qubit (:func:`run_standard_map`)
* direct nearest-neighbour qubit chains (:func:`run_qubit_chain`) and their
  ancilla + SWAP equivalent (:func:`run_ancilla_swap_chain`)
* projective measurement of the ancilla (:func:`measure_ancilla`)

Joint ancilla-register states keep the ancilla as the slowest index and
append every emitted qubit as the new fastest index. Chain sites are
0-based: a layer lists gates on (0, 1), (1, 2), ..., (n-2, n-1) in that
order and may end with a gate on (n-1, 0).

Usage:

>>> qubits, ancilla, decoupled = run_plan(plan)
>>> layer = GateLayer([((k, k + 1), u) for k, u in enumerate(gates)])
>>> psi = run_qubit_chain(n, [layer], product_state([0] * n))

"""

import logging

import numpy as np
from scipy import linalg

from .compiler import GenerationPlan, Isometry, ISOMETRY_TOL
from .errors import SeqgenError
from .library import SWAP, unitarity_error
from .mps import STATE_TOL, PureState, kron

logger = logging.getLogger(__name__)

PURITY_TOL = 1e-10
UNITARY_TOL = 1e-12
# outcome probabilities below this are treated as impossible
ZERO_PROBABILITY = 1e-14


class SimulationError(SeqgenError):
    pass


class ZeroProbabilityError(SimulationError):
    def __init__(self, s, probability=0.0):
        SimulationError.__init__(self, s)
        self.probability = probability


#===============================================================================
# joint ancilla-register states
#===============================================================================
class JointState:
    """Ancilla of dimension D entangled with a register of emitted qudits.

    ``amplitudes`` has shape (D, d^n_emitted): row index is the ancilla.
    """

    def __init__(self, amplitudes, ancilla_dim, d=2, normalize=False):
        amps = np.array(amplitudes, dtype=complex).reshape(ancilla_dim, -1)
        n = int(round(np.log(amps.shape[1]) / np.log(d))) if d > 1 else 0
        if d**n != amps.shape[1]:
            raise SimulationError('register of %d amplitudes is not a power '
                                  'of %d' % (amps.shape[1], d))
        norm = linalg.norm(amps)
        if norm == 0.0:
            raise SimulationError('zero joint state')
        if normalize:
            amps = amps / norm
        elif abs(norm - 1.0) > STATE_TOL:
            raise SimulationError('joint state norm %.16g deviates from 1'
                                  % norm)
        self.amplitudes = amps
        self.ancilla_dim = int(ancilla_dim)
        self.n_emitted = n
        self.d = int(d)

    def reduced_ancilla(self):
        a = self.amplitudes
        return a @ a.conj().T

    def purity(self):
        rho = self.reduced_ancilla()
        return float(np.real(np.trace(rho @ rho)))

    def as_state(self):
        """The joint vector as a PureState, ancilla first."""
        return PureState(self.amplitudes.ravel(),
                         (self.ancilla_dim,) + (self.d,) * self.n_emitted,
                         normalize=True)

    def split(self, reference=None):
        """Dominant ancilla state and the register projected onto it.

        The ancilla phase is chosen so that <reference|ancilla> is real and
        non-negative when a reference vector is given.
        """
        w, v = linalg.eigh(self.reduced_ancilla())
        ancilla = v[:, -1]
        if reference is not None:
            ov = np.vdot(reference, ancilla)
            if abs(ov) > 1e-12:
                ancilla = ancilla * np.conj(ov) / abs(ov)
        qubits = ancilla.conj() @ self.amplitudes
        dims = (self.d,) * self.n_emitted
        return ancilla, PureState(qubits, dims, normalize=True)

    def __repr__(self):
        return '<JointState D=%d emitted=%d>' % (self.ancilla_dim,
                                                  self.n_emitted)


def plan_joint_state(plan):
    """Joint ancilla-register state after running every step of a plan."""
    D, d = plan.ancilla_dim, plan.d
    joint = plan.phi_I.reshape(D, 1)
    for k, step in enumerate(plan.steps):
        res = step.residual
        if res > ISOMETRY_TOL:
            raise SimulationError('step %d is not isometric (residual %.3e)'
                                  % (k + 1, res))
        v = step.matrix.reshape(D, d, D)
        joint = np.einsum('gia,ap->gpi', v, joint).reshape(D, -1)
    return JointState(joint, D, d, normalize=True)


def run_plan(plan):
    """Execute a generation plan.

    Returns
    -------
    qubits : PureState
        emitted register projected onto ``ancilla_out``, normalized.
    ancilla_out : ndarray
        dominant eigenvector of the final ancilla state, phase aligned
        with ``plan.phi_F`` when it is set.
    decoupled : bool
        ancilla purity >= 1 - 1e-10.
    """
    joint = plan_joint_state(plan)
    purity = joint.purity()
    decoupled = purity >= 1.0 - PURITY_TOL
    ancilla_out, qubits = joint.split(plan.phi_F)
    logger.debug('run_plan: %d steps, ancilla purity %.15f', plan.n_sites,
                 purity)
    if not decoupled:
        logger.warning('ancilla is still entangled (purity %.6f)', purity)
    return qubits, ancilla_out, decoupled


#===============================================================================
# standard map
#===============================================================================
def standard_map_unitary(D):
    """The D-standard map T on A' x tag x bin: SWAP of tag and time bin."""
    return kron(np.eye(D, dtype=complex), SWAP)


def _check_atomic(unitaries, D):
    us = []
    for k, u in enumerate(unitaries):
        u = np.asarray(u, dtype=complex)
        if u.shape != (2 * D, 2 * D):
            raise SimulationError('atomic unitary %d has shape %s, expected '
                                  '%s' % (k + 1, u.shape, (2 * D, 2 * D)))
        if unitarity_error(u) > UNITARY_TOL:
            raise SimulationError('atomic unitary %d is not unitary'
                                  % (k + 1))
        us.append(u)
    return us


def run_standard_map(D, atomic_unitaries, phi_I):
    """Generate qubits with atomic unitaries followed by the standard map.

    The atom is A' x tag (index 2 alpha + t). Every step applies U_A with
    the tag in |0>, appends a fresh time bin in |0> and applies T, after
    which the tag must be back in |0>.

    Returns
    -------
    qubits : PureState
    decoupled : bool
    """
    us = _check_atomic(atomic_unitaries, D)
    phi_I = np.asarray(phi_I, dtype=complex).ravel()
    if phi_I.size != D:
        raise SimulationError('phi_I has length %d, D = %d'
                              % (phi_I.size, D))
    t_map = standard_map_unitary(D).reshape((D, 2, 2) * 2)
    # rows: ancilla A', columns: emitted bins
    joint = phi_I.reshape(D, 1)
    for k, u in enumerate(us):
        atom = np.zeros((2 * D, joint.shape[1]), dtype=complex)
        atom[0::2] = joint
        atom = (u @ atom).reshape(D, 2, -1)
        full = np.zeros(atom.shape + (2,), dtype=complex)
        full[..., 0] = atom
        # T acts on (A', tag, bin)
        full = np.tensordot(t_map, full, axes=([3, 4, 5], [0, 1, 3]))
        full = np.moveaxis(full, 2, 3)
        stray = float(np.sum(np.abs(full[:, 1])**2))
        if stray > 1e-10:
            raise SimulationError('tag not reset by the standard map at step '
                                  '%d (weight %.3e)' % (k + 1, stray))
        joint = full[:, 0].reshape(D, -1)
    state = JointState(joint, D, normalize=True)
    purity = state.purity()
    _, qubits = state.split()
    return qubits, purity >= 1.0 - PURITY_TOL


def standard_map_plan(atomic_unitaries, phi_I, phi_F=None):
    """Isometries V = <0|_T T (U_A (. x |0>_T) x |0>_B) of a standard-map run.

    With the atom indexed as 2 alpha + t this is the even-column slice of
    every U_A, already in the ancilla-major row layout of a plan.
    """
    phi_I = np.asarray(phi_I, dtype=complex).ravel()
    D = phi_I.size
    us = _check_atomic(atomic_unitaries, D)
    steps = [Isometry(u[:, 0::2], step_index=k + 1)
             for k, u in enumerate(us)]
    return GenerationPlan(steps, phi_I, phi_F, ancilla_dim=D)


#===============================================================================
# qubit chains
#===============================================================================
class GateLayer:
    """Ordered two-qubit gates applied once per pass.

    Parameters
    ----------
    gates : list of ((int, int), array_like)
        0-based site pairs with 4x4 unitaries.
    layer_count : int
        number of times the layer is applied.
    nearest_neighbour : bool
        enforce the sequential order (0,1), (1,2), ... with an optional
        closing (n-1, 0) gate.
    """

    def __init__(self, gates, layer_count=1, nearest_neighbour=True):
        self.gates = []
        for sites, u in gates:
            u = np.asarray(u, dtype=complex)
            if u.shape != (4, 4):
                raise SimulationError('gate on %s is not 4x4' % (sites,))
            if unitarity_error(u) > UNITARY_TOL:
                raise SimulationError('gate on %s is not unitary' % (sites,))
            self.gates.append(((int(sites[0]), int(sites[1])), u))
        self.layer_count = int(layer_count)
        self.nearest_neighbour = nearest_neighbour

    def check_order(self, n):
        if not self.nearest_neighbour:
            for (a, b), _ in self.gates:
                if a == b or not (0 <= a < n and 0 <= b < n):
                    raise SimulationError('bad site pair (%d, %d)' % (a, b))
            return
        last = -1
        for j, ((a, b), _) in enumerate(self.gates):
            if (a, b) == (n - 1, 0):
                if j != len(self.gates) - 1:
                    raise SimulationError('the (n-1, 0) gate must close '
                                          'the layer')
                continue
            if b != a + 1 or not 0 <= a < n - 1:
                raise SimulationError('gate on (%d, %d) is not a nearest '
                                      'neighbour pair' % (a, b))
            if a <= last:
                raise SimulationError('gate on (%d, %d) is out of order'
                                      % (a, b))
            last = a

    def __len__(self):
        return len(self.gates)


def apply_gate(state, gate, sites):
    """Apply a k-site operator to the given 0-based sites of a state."""
    dims = state.dims
    sites = list(sites)
    k = len(sites)
    op = np.asarray(gate, dtype=complex).reshape([dims[s] for s in sites] * 2)
    psi = np.tensordot(op, state.tensor(), axes=(list(range(k, 2 * k)), sites))
    psi = np.moveaxis(psi, list(range(k)), sites)
    return PureState(psi.ravel(), dims, normalize=True)


def run_qubit_chain(n, layers, initial):
    """Apply gate layers in order to a dense n-qubit register."""
    if initial.dims != (2,) * n:
        raise SimulationError('initial state is not an %d-qubit register' % n)
    state = initial
    for layer in layers:
        layer.check_order(n)
        for _ in range(layer.layer_count):
            for sites, u in layer.gates:
                state = apply_gate(state, u, sites)
    return state


def run_ancilla_swap_chain(gates, n):
    """One sequential layer realised with a single ancilla.

    Qubits and ancilla start in |0>. Gate k acts on (qubit k, ancilla),
    then SWAP(ancilla, qubit k+1) hands the ancilla content on. The
    ancilla ends in |0> and is traced out.
    """
    if len(gates) != n - 1:
        raise SimulationError('need %d gates for %d qubits, got %d'
                              % (n - 1, n, len(gates)))
    state = PureState(np.eye(1, 2**(n + 1), dtype=complex).ravel(),
                      (2,) * (n + 1))
    anc = n
    for k, u in enumerate(gates):
        state = apply_gate(state, u, (k, anc))
        state = apply_gate(state, SWAP, (anc, k + 1))
    tail = state.tensor()
    stray = float(np.sum(np.abs(tail[..., 1])**2))
    if stray > 1e-10:
        raise SimulationError('ancilla not returned to |0> (weight %.3e)'
                              % stray)
    return PureState(tail[..., 0].ravel(), (2,) * n, normalize=True)


#===============================================================================
# measurement
#===============================================================================
def measure_ancilla(joint, basis, outcome):
    """Project the ancilla onto one vector of an orthonormal basis.

    Parameters
    ----------
    joint : JointState
    basis : sequence of array_like
        D orthonormal ancilla vectors.
    outcome : int
        index of the basis vector.

    Returns
    -------
    probability : float
    post_state : PureState
        normalized register state for that outcome.

    Raises
    ------
    ZeroProbabilityError
        the requested outcome cannot occur; ``err.probability`` is 0.
    """
    b = np.array([np.asarray(v, dtype=complex).ravel() for v in basis])
    if b.shape != (joint.ancilla_dim, joint.ancilla_dim):
        raise SimulationError('basis must hold %d vectors of length %d'
                              % (joint.ancilla_dim, joint.ancilla_dim))
    if np.max(np.abs(b.conj() @ b.T - np.eye(joint.ancilla_dim))) > 1e-12:
        raise SimulationError('measurement basis is not orthonormal')
    if not 0 <= outcome < joint.ancilla_dim:
        raise SimulationError('outcome %s outside 0..%d'
                              % (outcome, joint.ancilla_dim - 1))
    projected = b[outcome].conj() @ joint.amplitudes
    p = float(np.real(np.vdot(projected, projected)))
    if p < ZERO_PROBABILITY:
        raise ZeroProbabilityError('outcome %d has probability zero'
                                   % outcome, probability=0.0)
    post = PureState(projected, (joint.d,) * joint.n_emitted, normalize=True)
    return p, post
