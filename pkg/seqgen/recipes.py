__doc__ = """
Closed-form target states and explicit generation recipes.

Target states are given in register order, site 1 (first emitted) as the
slowest index. A W-type state with angles Theta_i and phases Phi_i has

    e^{i Phi_1} sin Theta_1                         on |10...0>
    cos Theta_1 e^{i Phi_2} sin Theta_2             on |010..0>
    ...
    cos Theta_1 ... cos Theta_{n-1}                 on |0...01>

and the photon-source coefficients are c_i = cos Theta_i,
s_i = e^{i Phi_i} sin Theta_i, closed by (c_n, s_n) = (0, 1).

Recipes:
    w_source_plan        two-level photon source, D = 2
    adiabatic_recipe     three-level atom {a, b1, b2} with the map M_AB
    w_standard_map_unitaries
                         atomic unitaries for the standard map, D = 2
    atomic_w_cascade     sqrt(ISWAP) between atoms and a cavity qubit
    atomic_w_post_state  closed form after measuring that cavity
    atomic_ghz_sequence  SWAP.CNOT between consecutive atoms
    atomic_cluster_sequence / run_atomic_cluster
                         ISWAP between a cavity qubit and every atom

Atomic registers use a = 0, b = 1.
"""

import logging
from dataclasses import dataclass, field

import numpy as np

from .compiler import GenerationPlan, Isometry
from .errors import InputError
from .generation import (GateLayer, JointState, apply_gate, measure_ancilla,
                         run_plan, run_qubit_chain)
from .library import CNOT, ISWAP, SQRT_ISWAP, SWAP, X, Z, flip_first, rz
from .mps import PureState, local_expectation, product_state

logger = logging.getLogger(__name__)

LEVELS = {'a': 0, 'b1': 1, 'b2': 2}
LEVEL_NAMES = ('a', 'b1', 'b2')


class RecipeError(InputError):
    pass


def _angles(values, n, name):
    arr = np.atleast_1d(np.asarray(values, dtype=float))
    if arr.size == 1 and n != 1:
        arr = np.full(n, arr[0])
    if arr.size != n:
        raise RecipeError('%s needs %d values, got %d' % (name, n, arr.size))
    return arr


#===============================================================================
# W-type states
#===============================================================================
@dataclass
class WParams:
    """Angles Theta_1..Theta_{n-1} and phases Phi_1..Phi_{n-1}."""

    thetas: np.ndarray
    phis: np.ndarray = field(default=None)

    def __post_init__(self):
        self.thetas = np.atleast_1d(np.asarray(self.thetas, dtype=float))
        if self.phis is None:
            self.phis = np.zeros_like(self.thetas)
        self.phis = np.atleast_1d(np.asarray(self.phis, dtype=float))
        if self.thetas.size != self.phis.size:
            raise RecipeError('%d thetas but %d phis'
                              % (self.thetas.size, self.phis.size))
        if self.thetas.size < 1:
            raise RecipeError('a W-type state needs n >= 2')

    @property
    def n(self):
        return self.thetas.size + 1

    @classmethod
    def uniform(cls, n):
        """Angles that give every excitation amplitude 1/sqrt(n)."""
        if n < 2:
            raise RecipeError('a W state needs n >= 2, got %d' % n)
        k = np.arange(1, n)
        return cls(np.arcsin(1.0 / np.sqrt(n - k + 1)), np.zeros(n - 1))

    def source_coefficients(self):
        """(c_i, s_i) for i = 1..n including the closing (0, 1)."""
        c = np.append(np.cos(self.thetas), 0.0).astype(complex)
        s = np.append(np.exp(1j * self.phis) * np.sin(self.thetas), 1.0)
        return list(zip(c, s))


def target_w_state(params):
    """W-type state with the excitation on site j weighted as above."""
    n = params.n
    amps = np.zeros(2**n, dtype=complex)
    carry = 1.0
    for j, (c, s) in enumerate(params.source_coefficients()):
        amps[2**(n - 1 - j)] = carry * s
        carry = carry * c
    return PureState(amps, (2,) * n, normalize=True)


def w_source_plan(params, n=None):
    """Photon-source plan V_[i] = c_i|a,0><a| + s_i|b,1><a| + |b,0><b|.

    The ancilla levels are a = 0 and b = 1; the source starts in |a> and
    ends in |b>.
    """
    if n is not None and n != params.n:
        raise RecipeError('params describe %d sites, n = %d' % (params.n, n))
    steps = []
    for k, (c, s) in enumerate(params.source_coefficients()):
        v = np.zeros((4, 2), dtype=complex)
        v[0, 0] = c
        v[3, 0] = s
        v[2, 1] = 1.0
        steps.append(Isometry(v, step_index=k + 1))
    return GenerationPlan(steps, [1.0, 0.0], [0.0, 1.0], ancilla_dim=2)


def w_standard_map_unitaries(params):
    """Atomic unitaries for :func:`run_standard_map` giving the W state.

    The atom has D = 2 levels {a, b} times the tag; each unitary sends
    |a, tag 0> to c_i|a, 0> + s_i|b, 1> (index 2 alpha + t) and keeps
    |b, tag 0>, so that the induced isometries are the source plan.
    """
    us = []
    for c, s in params.source_coefficients():
        u = np.zeros((4, 4), dtype=complex)
        u[0, 0], u[3, 0] = c, s
        u[1, 1] = 1.0
        u[2, 2] = 1.0
        u[0, 3], u[3, 3] = -np.conj(s), np.conj(c)
        us.append(u)
    return us


#===============================================================================
# three-level atom with adiabatic passage
#===============================================================================
def _level(x):
    if isinstance(x, str):
        if x not in LEVELS:
            raise RecipeError('unknown level "%s"' % x)
        return LEVELS[x]
    return int(x)


def rotation_u(k, l, m, phi, theta):
    """U_kl^m(Phi, Theta) on the levels {a, b1, b2}.

    cos(Theta)(|k><k| + |l><l|) + e^{i Phi} sin(Theta)|k><l|
    - e^{-i Phi} sin(Theta)|l><k| + |m><m|
    """
    k, l, m = _level(k), _level(l), _level(m)
    if sorted((k, l, m)) != [0, 1, 2]:
        raise RecipeError('levels must be a permutation of a, b1, b2')
    u = np.zeros((3, 3), dtype=complex)
    u[k, k] = u[l, l] = np.cos(theta)
    u[k, l] = np.exp(1j * phi) * np.sin(theta)
    u[l, k] = -np.exp(-1j * phi) * np.sin(theta)
    u[m, m] = 1.0
    return u


def emission_map():
    """M_AB: |a> -> |b1>|1>, |b1> -> |b1>|0>, |b2> -> |b2>|0>.

    Rows are (level, photon) with the level slow.
    """
    m = np.zeros((6, 3), dtype=complex)
    m[2 * LEVELS['b1'] + 1, LEVELS['a']] = 1.0
    m[2 * LEVELS['b1'], LEVELS['b1']] = 1.0
    m[2 * LEVELS['b2'], LEVELS['b2']] = 1.0
    return m


class AtomicRecipe:
    """Level sequence for a three-level atom emitting through M_AB.

    Parameters
    ----------
    kind : str
    initial : str
        starting level.
    unitaries : list of (3, 3) arrays
        U_A^[i] applied before the i-th emission.
    final : str
        level in which the atom decouples.
    """

    levels = LEVEL_NAMES

    def __init__(self, kind, initial, unitaries, final='b1'):
        self.kind = kind
        self.initial = initial
        self.final = final
        self.emission_map = emission_map()
        self.unitaries = [np.asarray(u, dtype=complex) for u in unitaries]
        for j, u in enumerate(self.unitaries):
            if np.max(np.abs(u.conj().T @ u - np.eye(3))) > 1e-12:
                raise RecipeError('U_A^[%d] is not unitary' % (j + 1))

    @property
    def n_sites(self):
        return len(self.unitaries)

    def plan(self):
        """The recipe as a D = 3 generation plan with steps M_AB U_A."""
        steps = [Isometry(self.emission_map @ u, step_index=j + 1)
                 for j, u in enumerate(self.unitaries)]
        phi_I = np.zeros(3, dtype=complex)
        phi_I[LEVELS[self.initial]] = 1.0
        phi_F = np.zeros(3, dtype=complex)
        phi_F[LEVELS[self.final]] = 1.0
        return GenerationPlan(steps, phi_I, phi_F, ancilla_dim=3)

    def run(self):
        """(photons, final atom state, decoupled)."""
        return run_plan(self.plan())


def adiabatic_recipe(kind, n, thetas=None, phis=None):
    """W, GHZ or cluster recipe for the three-level atom.

    Parameters
    ----------
    kind : {'W', 'GHZ', 'CLUSTER'}
    n : int
        number of photons, n >= 2.
    thetas, phis : array_like
        W: n-1 values, GHZ: one value, CLUSTER: n values. Scalars
        broadcast. Defaults: uniform W angles, Theta = pi/4 otherwise,
        phases zero.

    Returns
    -------
    recipe : AtomicRecipe
    """
    kind = str(kind).upper()
    if n < 2:
        raise RecipeError('recipes need n >= 2, got %d' % n)
    swap_ab1 = rotation_u('a', 'b1', 'b2', 0.0, np.pi / 2)
    if kind == 'W':
        if thetas is None:
            params = WParams.uniform(n)
        else:
            params = WParams(_angles(thetas, n - 1, 'thetas'),
                             _angles(0.0 if phis is None else phis, n - 1,
                                     'phis'))
        us = [rotation_u('a', 'b2', 'b1', p, t)
              for t, p in zip(params.thetas, params.phis)]
        us.append(rotation_u('a', 'b2', 'b1', 0.0, np.pi / 2))
        return AtomicRecipe('W', 'b2', us)
    if kind == 'GHZ':
        theta = _angles(np.pi / 4 if thetas is None else thetas, 1, 'thetas')
        phi = _angles(0.0 if phis is None else phis, 1, 'phis')
        us = [rotation_u('a', 'b2', 'b1', phi[0], theta[0])]
        us += [swap_ab1] * (n - 2)
        us.append(rotation_u('b1', 'b2', 'a', 0.0, np.pi / 2) @ swap_ab1)
        return AtomicRecipe('GHZ', 'a', us)
    if kind == 'CLUSTER':
        theta = _angles(np.pi / 4 if thetas is None else thetas, n, 'thetas')
        phi = _angles(0.0 if phis is None else phis, n, 'phis')
        us = [rotation_u('a', 'b2', 'b1', phi[i], theta[i]) @ swap_ab1
              for i in range(n - 1)]
        us.append(rotation_u('a', 'b1', 'b2', phi[-1], theta[-1]) @
                  rotation_u('b1', 'b2', 'a', 0.0, np.pi / 2) @ swap_ab1)
        return AtomicRecipe('CLUSTER', 'b2', us)
    raise RecipeError('unknown recipe kind "%s"' % kind)


#===============================================================================
# closed forms
#===============================================================================
def ghz_state(n, phase=1.0):
    """(|0...0> + phase |1...1>)/sqrt(2)."""
    if n < 1:
        raise RecipeError('n must be positive')
    amps = np.zeros(2**n, dtype=complex)
    amps[0] = 1.0
    amps[-1] = phase
    return PureState(amps, (2,) * n, normalize=True)


def adiabatic_ghz_target(n, theta=np.pi / 4, phi=0.0):
    """cos(Theta)|1...1> - e^{-i Phi} sin(Theta)|0...0>."""
    amps = np.zeros(2**n, dtype=complex)
    amps[0] = -np.exp(-1j * phi) * np.sin(theta)
    amps[-1] = np.cos(theta)
    return PureState(amps, (2,) * n, normalize=True)


def cluster_state(n, thetas=np.pi / 4, phis=0.0):
    """Product of O-operators acting on the nearest earlier neighbour.

    Site 1 carries cos(Theta_1)|0> + e^{i Phi_1} sin(Theta_1)|1>; site i
    carries O^0_{i-1}|0> + O^1_{i-1}|1> with

        O^0 = cos(Theta_i)|0><0| - e^{-i Phi_i} sin(Theta_i)|1><1|
        O^1 = e^{i Phi_i} sin(Theta_i)|0><0| + cos(Theta_i)|1><1|

    For Theta = pi/4, Phi = 0 this is 2^{-n/2} prod (Z_{i-1}|0>_i + |1>_i),
    i.e. Z_1 ... Z_{n-1} applied to the CZ-graph cluster state, so that
    <Z_{i-1} X_i Z_{i+1}> = -1 for i < n and <Z_{n-1} X_n> = +1.
    """
    theta = _angles(thetas, n, 'thetas')
    phi = _angles(phis, n, 'phis')
    psi = np.array([np.cos(theta[0]), np.exp(1j * phi[0]) * np.sin(theta[0])])
    for i in range(1, n):
        c = np.cos(theta[i])
        s = np.sin(theta[i])
        # rows: previous qubit, columns: new qubit
        table = np.array([[c, np.exp(1j * phi[i]) * s],
                          [-np.exp(-1j * phi[i]) * s, c]])
        psi = (psi.reshape(-1, 2)[:, :, None] * table[None]).ravel()
    return PureState(psi, (2,) * n, normalize=True)


#===============================================================================
# atomic sequences with the cavity qubit
#===============================================================================
def atomic_w_cascade(n):
    """sqrt(ISWAP) cascade of n-1 atoms through an initially empty cavity.

    Returns the joint state with the cavity as a two-level ancilla and
    the atoms in passing order; every atom enters in |a> = |0>.
    """
    if n < 2:
        raise RecipeError('the cascade needs n >= 2, got %d' % n)
    atoms = n - 1
    # atom-cavity exchange |a,0> <-> |b,1> with a = 0
    u = flip_first(SQRT_ISWAP)
    state = product_state([0] * n)
    for k in range(1, n):
        state = apply_gate(state, u, (k, 0))
    return JointState(state.amplitudes, 2, normalize=True)


def atomic_w_post_state(n, outcome=0):
    """Atoms after measuring the cascade's cavity in (|0> +- |1>)/sqrt(2).

    Outcome 0 is the + result. Atom k carries b with amplitude
    +-i 2^{-k/2} and the all-a component has 2^{-(n-1)/2}, before
    renormalization by the outcome probability 1/2.
    """
    if n < 2:
        raise RecipeError('the cascade needs n >= 2, got %d' % n)
    sign = 1.0 if outcome == 0 else -1.0
    m = n - 1
    amps = np.zeros(2**m, dtype=complex)
    amps[0] = 2.0**(-m / 2.0)
    for k in range(1, n):
        amps[2**(m - k)] = sign * 1j * 2.0**(-k / 2.0)
    return PureState(amps, (2,) * m, normalize=True)


def atomic_ghz_sequence(n):
    """GHZ state of atoms passing the cavity two at a time.

    Returns the initial register ((|a>+|b>)/sqrt(2)) x |a>^(n-1) and the
    layer of SWAP.CNOT gates on consecutive atoms.
    """
    if n < 2:
        raise RecipeError('the GHZ sequence needs n >= 2, got %d' % n)
    amps = np.zeros(2**n, dtype=complex)
    amps[0] = amps[2**(n - 1)] = 1.0
    initial = PureState(amps, (2,) * n, normalize=True)
    u = SWAP @ CNOT
    layer = GateLayer([((k, k + 1), u) for k in range(n - 1)])
    return initial, layer


def atomic_cluster_sequence(n):
    """ISWAP sequence between a cavity qubit (site 0) and n atoms.

    The cavity and all atoms start in (|0>+|1>)/sqrt(2). After the
    sequence atom k holds what the cavity held before it, the ISWAP phases
    R_z(pi/2) accumulate once on atom 1 and twice on atoms 2..n, and the
    cavity holds the last link of the chain.

    Returns
    -------
    initial : PureState
        n+1 sites, cavity first.
    layer : GateLayer
    compensation : list of (2, 2) arrays
        local unitaries for atoms 1..n turning the register into
        :func:`cluster_state` (Theta = pi/4, Phi = 0).
    """
    if n < 2:
        raise RecipeError('the cluster sequence needs n >= 2, got %d' % n)
    initial = PureState(np.full(2**(n + 1), 2.0**(-(n + 1) / 2.0)),
                        (2,) * (n + 1))
    layer = GateLayer([((0, k), ISWAP) for k in range(1, n + 1)],
                      nearest_neighbour=False)
    compensation = [Z @ rz(-np.pi / 2)]
    compensation += [Z @ rz(-np.pi)] * (n - 2)
    compensation.append(rz(-np.pi))
    return initial, layer, compensation


def run_atomic_cluster(n, outcome=0, compensate=True):
    """Run the atomic cluster sequence and close it by measuring the cavity.

    The cavity is measured in the computational basis; outcome 1 is
    corrected by Z on the last atom.

    Returns
    -------
    probability : float
    atoms : PureState
    """
    initial, layer, compensation = atomic_cluster_sequence(n)
    state = run_qubit_chain(n + 1, [layer], initial)
    joint = JointState(state.amplitudes, 2)
    p, atoms = measure_ancilla(joint, np.eye(2), outcome)
    if outcome == 1:
        atoms = apply_gate(atoms, Z, (n - 1,))
    if compensate:
        for k, u in enumerate(compensation):
            atoms = apply_gate(atoms, u, (k,))
    return p, atoms


def ghz_stabilizer_checks(state):
    """<X...X> and the <Z_i Z_{i+1}> expectations of a register."""
    n = state.n_sites
    xx = local_expectation(state, {k: X for k in range(n)}).real
    zz = [local_expectation(state, {k: Z, k + 1: Z}).real
          for k in range(n - 1)]
    return xx, zz
