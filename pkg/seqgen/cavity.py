__doc__ = """
Cavity-QED gate physics on a truncated Fock space.

Three levels of description of an atom in a cavity:

* the full model: levels b, a, e (index 0, 1, 2) times Fock(n_max),
  basis index ``level * (n_max + 1) + n``;
* the adiabatic model after eliminating e: levels b, a times Fock(n_max);
* the selective model: 4x4 on {|b,0>, |b,1>, |a,0>, |a,1>}.

The laser detuning delta is removed by a rotating frame, which adds a
diagonal delta term and leaves a static matrix. Second-order elimination
of e carries the opposite overall sign of the full model, so the
effective Hamiltonians are propagated as exp(+iHt); this reproduces the
+i of sqrt(ISWAP) = exp[i pi (|a,0><b,1| + h.c.) / 4].

The polarization scheme works at the effective-operator level on the
atom levels {a, b, a', b'} times the single-excitation photon space
{0, 1_a, 1_b}.

Usage:

>>> model = CavityModel(g=1.0, omega=1.0, delta=200.0)
>>> t, u = sqrt_iswap_pulse(model)
>>> selectivity_error(model, 'full')

"""

import logging
from dataclasses import dataclass, replace

import numpy as np
from scipy import linalg

from .errors import InputError, SeqgenError
from .library import X, Y
from .mps import PureState

logger = logging.getLogger(__name__)

HERMITIAN_TOL = 1e-10
LEAKAGE_TOL = 1e-8

B, A, E = 0, 1, 2


class PhysicsError(SeqgenError):
    pass


class ModelError(InputError):
    pass


#===============================================================================
# models
#===============================================================================
@dataclass(frozen=True)
class CavityModel:
    """Atom-cavity parameters in units of g.

    Attributes
    ----------
    g : float
        atom-cavity coupling on the e-b transition.
    omega : float
        laser Rabi frequency on the e-a transition.
    delta : float
        large detuning Delta; must be nonzero.
    detuning : float or None
        small laser detuning delta. None selects the resonant choice
        Omega^2/4Delta - g^2/Delta.
    n_max : int
        Fock cutoff; the mode holds 0..n_max photons.
    """

    g: float = 1.0
    omega: float = 1.0
    delta: float = 200.0
    detuning: float = None
    n_max: int = 4

    def __post_init__(self):
        if self.delta == 0:
            raise ModelError('the large detuning Delta must be nonzero')
        if int(self.n_max) < 1:
            raise ModelError('n_max must be at least 1, got %s' % self.n_max)

    @property
    def small_detuning(self):
        if self.detuning is None:
            return self.resonant_detuning
        return self.detuning

    @property
    def resonant_detuning(self):
        return self.omega**2 / (4 * self.delta) - self.g**2 / self.delta

    @property
    def coupling(self):
        """Effective exchange rate g Omega / 2 Delta."""
        return self.g * self.omega / (2 * self.delta)

    @property
    def ratios(self):
        """|Delta| / max(g, Omega) and g / (Omega / 2)."""
        big = max(abs(self.g), abs(self.omega))
        return {'adiabatic': abs(self.delta) / big if big else np.inf,
                'selective': (abs(self.g) / (abs(self.omega) / 2)
                              if self.omega else np.inf)}

    @property
    def fock_dim(self):
        return int(self.n_max) + 1


@dataclass(frozen=True)
class PolarizationModel:
    """Two Raman branches a' <-> a (mode a) and b' <-> b (mode b)."""

    g_a: float = 1.0
    g_b: float = 1.0
    omega_a: float = 1.0
    omega_b: float = 1.0
    delta_a: float = 200.0
    delta_b: float = 200.0

    def __post_init__(self):
        if self.delta_a == 0 or self.delta_b == 0:
            raise ModelError('both detunings must be nonzero')

    @property
    def couplings(self):
        return (self.g_a * self.omega_a / (2 * self.delta_a),
                self.g_b * self.omega_b / (2 * self.delta_b))

    @property
    def ratios(self):
        big = max(self.g_a, self.g_b, self.omega_a, self.omega_b)
        return {'adiabatic': min(abs(self.delta_a), abs(self.delta_b)) / big}


#-------------------------------------------------------------------------------
# operators
#-------------------------------------------------------------------------------
def _sigma(k, l, dim):
    s = np.zeros((dim, dim), dtype=complex)
    s[k, l] = 1.0
    return s


def _annihilation(n_max):
    return np.diag(np.sqrt(np.arange(1, n_max + 1)), 1).astype(complex)


def _check_hermitian(h, tol=HERMITIAN_TOL):
    dev = float(np.max(np.abs(h - h.conj().T)))
    if dev > tol:
        raise PhysicsError('operator is not Hermitian (deviation %.3e)' % dev)


def full_hamiltonian(model):
    """Static three-level Hamiltonian in the frame rotating with delta.

    -Delta (s_aa + a^dag a) + delta s_aa + g (s_eb a + a^dag s_be)
    + (Omega / 2)(s_ea + s_ae)
    """
    nf = model.fock_dim
    a = _annihilation(model.n_max)
    one = np.eye(nf)
    s = lambda k, l: _sigma(k, l, 3)
    h = (-model.delta * (np.kron(s(A, A), one) + np.kron(np.eye(3), a.conj().T @ a))
         + model.small_detuning * np.kron(s(A, A), one)
         + model.g * (np.kron(s(E, B), a) + np.kron(s(B, E), a.conj().T))
         + 0.5 * model.omega * np.kron(s(E, A) + s(A, E), one))
    _check_hermitian(h, 1e-14)
    return h


def adiabatic_hamiltonian(model):
    """Static two-level Hamiltonian after eliminating e.

    (Omega^2/4Delta - delta) s_aa + (g^2/Delta) a^dag a s_bb - g^2/Delta
    + (g Omega / 2Delta)(s_ab a + a^dag s_ba)

    With the resonant delta the {|a,0>, |b,1>} block equals H_sel.
    """
    nf = model.fock_dim
    a = _annihilation(model.n_max)
    one = np.eye(nf)
    s = lambda k, l: _sigma(k, l, 2)
    stark = model.g**2 / model.delta
    h = ((model.omega**2 / (4 * model.delta) - model.small_detuning)
         * np.kron(s(A, A), one)
         + stark * np.kron(s(B, B), a.conj().T @ a)
         - stark * np.eye(2 * nf)
         + model.coupling * (np.kron(s(A, B), a) + np.kron(s(B, A), a.conj().T)))
    _check_hermitian(h, 1e-14)
    return h


def selective_hamiltonian(model, form='projector'):
    """H_sel on {|b,0>, |b,1>, |a,0>, |a,1>}.

    ``form`` selects the construction: 'projector' builds
    (g Omega / 2Delta)(|a,0><b,1| + h.c.), 'pauli' builds
    (g Omega / 4Delta)(X x X + Y x Y). Both are equal.
    """
    k = model.coupling
    if form == 'projector':
        h = np.zeros((4, 4), dtype=complex)
        h[2, 1] = h[1, 2] = k
    elif form == 'pauli':
        h = 0.5 * k * (np.kron(X, X) + np.kron(Y, Y))
    else:
        raise ModelError('unknown form "%s"' % form)
    return h


def logical_indices(model):
    """Indices of |b,0>, |b,1>, |a,0>, |a,1> in a model's basis."""
    nf = model.fock_dim
    return [B * nf, B * nf + 1, A * nf, A * nf + 1]


#===============================================================================
# time evolution
#===============================================================================
def propagator(h, t):
    """exp(-i H t) from the eigendecomposition of a Hermitian H."""
    h = np.asarray(h, dtype=complex)
    _check_hermitian(h)
    h = 0.5 * (h + h.conj().T)
    w, v = linalg.eigh(h)
    return (v * np.exp(-1j * w * t)) @ v.conj().T


def evolve(h, t, psi0):
    """psi(t) = exp(-i H t) psi0; psi0 may hold several columns."""
    if not np.isfinite(t):
        raise PhysicsError('evolution time must be finite')
    return propagator(h, t) @ np.asarray(psi0, dtype=complex)


def sqrt_iswap_pulse(model):
    """Pulse length and gate of the selective Hamiltonian.

    Returns
    -------
    duration : float
        t* = pi / (4 |g Omega / 2 Delta|).
    gate : (4, 4) ndarray
        exp(+i sign(k) H_sel t*), equal to SQRT_ISWAP.
    """
    k = model.coupling
    if k == 0:
        raise PhysicsError('zero effective coupling, no pulse length')
    t = np.pi / (4 * abs(k))
    if not np.isfinite(t):
        raise PhysicsError('pulse length overflows (coupling %.3e)' % k)
    gate = propagator(-np.sign(k) * selective_hamiltonian(model), t)
    ratios = model.ratios
    logger.debug('sqrt(ISWAP) pulse t*=%.6g, Delta/g-ratio %.3g, '
                 'selectivity %.3g', t, ratios['adiabatic'],
                 ratios['selective'])
    return t, gate


def _subspace_fidelity(u_sub, subspace, ideal):
    if subspace == 'exchange':
        # order |a,0>, |b,1>
        blk = ideal[np.ix_([2, 1], [2, 1])]
        tr = np.trace(blk.conj().T @ u_sub)
        return (abs(tr)**2 + 2) / 6.0
    # idle states |b,0> and |a,1> only up to their phases
    blk = np.trace(ideal[1:3, 1:3].conj().T @ u_sub[1:3, 1:3])
    tot = abs(blk) + abs(u_sub[0, 0]) + abs(u_sub[3, 3])
    return (tot**2 + 4) / 20.0


def selectivity_error(model, level='full', subspace='exchange',
                      full_output=False):
    """Infidelity of the physical sqrt(ISWAP) pulse.

    Parameters
    ----------
    model : CavityModel
    level : {'full', 'adiabatic'}
        Hamiltonian to propagate for the pulse length t*.
    subspace : {'exchange', 'qubit'}
        'exchange' scores span{|a,0>, |b,1>} with the average gate
        fidelity F = (|tr(U_id^dag P U P)|^2 + d) / (d^2 + d), d = 2.
        'qubit' scores all four logical states (d = 4), the idle states
        |b,0> and |a,1> up to a phase each.
    full_output : bool
        also return the leakage, the largest population reaching the Fock
        level n_max from a logical input.

    Returns
    -------
    infidelity : float
    leakage : float, only if ``full_output``
    """
    level = str(level).lower()
    if model.n_max < 3:
        raise ModelError('selectivity needs n_max >= 3 to watch leakage')
    t, _ = sqrt_iswap_pulse(model)
    if level == 'full':
        u = propagator(full_hamiltonian(model), t)
    elif level == 'adiabatic':
        u = propagator(-adiabatic_hamiltonian(model), t)
    else:
        raise ModelError('unknown level "%s"' % level)
    idx = logical_indices(model)
    if subspace == 'exchange':
        sub = [idx[2], idx[1]]
    elif subspace == 'qubit':
        sub = idx
    else:
        raise ModelError('unknown subspace "%s"' % subspace)
    # exp(+i H_sel t*): SQRT_ISWAP for Delta > 0, its inverse for Delta < 0
    ideal = propagator(-selective_hamiltonian(model), t)
    f = _subspace_fidelity(u[np.ix_(sub, sub)], subspace, ideal)
    infid = float(max(0.0, 1.0 - f))

    nf = model.fock_dim
    top = [lv * nf + model.n_max for lv in range(u.shape[0] // nf)]
    leakage = float(np.max(np.sum(np.abs(u[np.ix_(top, sub)])**2, axis=0)))
    if leakage > LEAKAGE_TOL:
        logger.warning('Fock cutoff n_max=%d reached (population %.3e)',
                       model.n_max, leakage)
    logger.debug('%s/%s Delta=%g Omega=%g: infidelity %.3e', level,
                 subspace, model.delta, model.omega, infid)
    if full_output:
        return infid, leakage
    return infid


#===============================================================================
# polarization qubits
#===============================================================================
POL_LEVELS = {'a': 0, 'b': 1, "a'": 2, "b'": 3}
POL_PHOTONS = {'0': 0, '1a': 1, '1b': 2}


def _pol(level, photon):
    return POL_LEVELS[level] * 3 + POL_PHOTONS[photon]


def _branch_generators():
    """|a',0><a,1_a| + h.c. and |b',0><b,1_b| + h.c. on the 12-dim space."""
    gens = []
    for lo, hi, ph in (("a'", 'a', '1a'), ("b'", 'b', '1b')):
        g = np.zeros((12, 12), dtype=complex)
        g[_pol(lo, '0'), _pol(hi, ph)] = 1.0
        g[_pol(hi, ph), _pol(lo, '0')] = 1.0
        gens.append(g)
    return gens


def polarization_selective_hamiltonian(model):
    """H_sel^p = k_a |a',0><a,1_a| + k_b |b',0><b,1_b| + h.c."""
    ka, kb = model.couplings
    ga, gb = _branch_generators()
    return ka * ga + kb * gb


def polarization_selective_unitary(model, t=None):
    """U_sel^p for the polarization scheme.

    With a duration ``t`` this is exp(+i H_sel^p t). Without it every
    branch with nonzero coupling receives its own constant pulse of
    length pi / (2|k|), giving exp[i pi (sum of driven generators) / 2].
    """
    if t is not None:
        return propagator(-polarization_selective_hamiltonian(model), t)
    gen = np.zeros((12, 12), dtype=complex)
    for k, g in zip(model.couplings, _branch_generators()):
        if k != 0:
            gen += g
    return propagator(-gen, np.pi / 2)


def _logical_pol():
    # {b,1_a}, {b,1_b}, {a,1_a}, {a,1_b} == |b0>, |b1>, |a0>, |a1>
    return [_pol('b', '1a'), _pol('b', '1b'), _pol('a', '1a'), _pol('a', '1b')]


def polarization_sqrt_iswap(model=None, full_output=False):
    """(U_sel^p)^-1 exp[i pi (|a'><b'| + h.c.) / 4] U_sel^p.

    Returns the 4x4 restriction to {|b,1_a>, |b,1_b>, |a,1_a>, |a,1_b>},
    which is SQRT_ISWAP with 1_a as photon 0 and 1_b as photon 1. With
    ``full_output`` the 12x12 operator is returned as well.
    """
    model = model or PolarizationModel()
    u_sel = polarization_selective_unitary(model)
    mix = np.zeros((4, 4), dtype=complex)
    mix[POL_LEVELS["a'"], POL_LEVELS["b'"]] = 1.0
    mix[POL_LEVELS["b'"], POL_LEVELS["a'"]] = 1.0
    mid = np.kron(propagator(-mix, np.pi / 4), np.eye(3))
    full = u_sel.conj().T @ mid @ u_sel
    idx = _logical_pol()
    if full_output:
        return full[np.ix_(idx, idx)], full
    return full[np.ix_(idx, idx)]


def polarization_joint_state(alpha, beta, psi_a, psi_b):
    """alpha |a,0>|psi_a> + beta |b,0>|psi_b> as a (12, 2^k) array."""
    psi_a = np.asarray(getattr(psi_a, 'amplitudes', psi_a), dtype=complex)
    psi_b = np.asarray(getattr(psi_b, 'amplitudes', psi_b), dtype=complex)
    if psi_a.shape != psi_b.shape:
        raise ModelError('photonic branches differ in size')
    joint = np.zeros((12, psi_a.size), dtype=complex)
    joint[_pol('a', '0')] = alpha * psi_a
    joint[_pol('b', '0')] = beta * psi_b
    nrm = linalg.norm(joint)
    if nrm == 0:
        raise ModelError('zero joint state')
    return joint / nrm


def polarization_decoupling(joint, model=None, full_output=False):
    """Map the atomic qubit onto a last polarization photon.

    Parameters
    ----------
    joint : array_like
        (12, 2^k) atom-cavity x photons state alpha|a,0>|psi_a> +
        beta|b,0>|psi_b>, e.g. from :func:`polarization_joint_state`.
    model : PolarizationModel, optional

    Returns
    -------
    photons : PureState
        alpha |psi_a>|0> + beta |psi_b>|1> with the new photon last.
    purity : float, only if ``full_output``
        purity of the atom-cavity state before the photon is read out.
    """
    model = model or PolarizationModel()
    joint = np.array(joint, dtype=complex).reshape(12, -1)
    allowed = [_pol('a', '0'), _pol('b', '0')]
    outside = np.delete(joint, allowed, axis=0)
    if float(np.sum(np.abs(outside)**2)) > 1e-12:
        raise ModelError('input is not of the form alpha|a,0>.. + beta|b,0>..')

    # |a> -> -i|a'>, |b> -> -i|b'> (and back for the primed levels)
    relabel = np.zeros((4, 4), dtype=complex)
    relabel[POL_LEVELS["a'"], POL_LEVELS['a']] = -1j
    relabel[POL_LEVELS["b'"], POL_LEVELS['b']] = -1j
    relabel[POL_LEVELS['a'], POL_LEVELS["a'"]] = -1j
    relabel[POL_LEVELS['b'], POL_LEVELS["b'"]] = -1j
    a_to_b = np.eye(4, dtype=complex)
    a_to_b[np.ix_([0, 1], [0, 1])] = X

    steps = [np.kron(relabel, np.eye(3)),
             polarization_selective_unitary(replace(model, omega_b=0.0)),
             np.kron(a_to_b, np.eye(3)),
             polarization_selective_unitary(model)]
    for u in steps:
        joint = u @ joint

    atom_cavity = joint.reshape(4, 3, -1)
    rho = np.einsum('lpk,mpk->lm', atom_cavity, atom_cavity.conj())
    purity = float(np.real(np.trace(rho @ rho)))
    if purity < 1.0 - 1e-10 or abs(rho[POL_LEVELS['b'], POL_LEVELS['b']]
                                   - 1.0) > 1e-10:
        raise PhysicsError('atom did not decouple in |b> (purity %.12f)'
                           % purity)
    photon = atom_cavity[POL_LEVELS['b'], 1:]
    k = joint.shape[1]
    out = photon.T.reshape(k, 2).ravel()
    n = int(round(np.log2(k))) + 1
    photons = PureState(out, (2,) * n, normalize=True)
    if full_output:
        return photons, purity
    return photons
