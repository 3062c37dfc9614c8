__doc__ = """
Dense states and open-boundary matrix-product states.

Site 1 is the first generated qubit and the slowest varying index of the
amplitude vector. A site tensor is stored as an array of shape
``(d, r_k, r_{k-1})`` so that ``A[i]`` maps bond k-1 to bond k and

    psi[i_1, ..., i_n] = conj(phi_F) . A_n[i_n] ... A_1[i_1] . phi_I

Usage:

>>> psi = random_state(6, rng=np.random.default_rng(7))
>>> mps = mps_from_dense(psi, tol=0.0)
>>> mps.bond_profile.dims
(1, 2, 4, 8, 4, 2, 1)
>>> fidelity(mps_to_dense(mps), psi)        # 1.0 within 1e-10

"""

import logging
from functools import reduce

import numpy as np
from scipy import linalg

from .errors import InputError

logger = logging.getLogger(__name__)

# norm tolerance of a PureState
STATE_TOL = 1e-12
# relative floor below which singular values are numerical zeros
SVD_FLOOR = 1e-14


class StateError(InputError):
    pass


# ==============================================================================
#                                 PURE STATES
# ==============================================================================
class PureState:
    """Normalized amplitude vector over an ordered register of qudits.

    Parameters
    ----------
    amplitudes : array_like
        complex amplitudes in register order (site 1 slowest).
    dims : sequence of int, optional
        local dimension of each site. Defaults to qubits.
    normalize : bool, optional
        rescale the amplitudes to unit norm instead of rejecting an
        unnormalized vector. A zero vector is always rejected.

    Notes
    -----
    The amplitude array is read-only; operations return new states.
    """

    def __init__(self, amplitudes, dims=None, normalize=False):
        amps = np.array(amplitudes, dtype=complex).ravel()
        if dims is None:
            n = int(round(np.log2(max(amps.size, 1))))
            if 2**n != amps.size or n == 0:
                raise StateError('cannot infer a qubit register from %d '
                                 'amplitudes' % amps.size)
            dims = (2,) * n
        dims = tuple(int(d) for d in dims)
        if len(dims) == 0 or min(dims) < 1:
            raise StateError('invalid local dimensions %s' % (dims,))
        if amps.size != int(np.prod(dims)):
            raise StateError('%d amplitudes do not fit dims %s'
                             % (amps.size, dims))
        norm = linalg.norm(amps)
        if not np.isfinite(norm) or norm == 0.0:
            raise StateError('zero-norm state')
        if normalize:
            amps = amps / norm
        elif abs(norm - 1.0) > STATE_TOL:
            raise StateError('state norm %.16g deviates from 1' % norm)
        amps.setflags(write=False)
        self._amps = amps
        self._dims = dims

    @property
    def amplitudes(self):
        return self._amps

    @property
    def dims(self):
        return self._dims

    @property
    def n_sites(self):
        return len(self._dims)

    def tensor(self):
        """Amplitudes reshaped to one axis per site."""
        return self._amps.reshape(self._dims)

    def inner(self, other):
        """<self|other>."""
        _check_same_register(self, other)
        return complex(np.vdot(self._amps, other._amps))

    def __len__(self):
        return self._amps.size

    def __repr__(self):
        return '<PureState n=%d dims=%s>' % (self.n_sites, self._dims)


def _check_same_register(a, b):
    if a.dims != b.dims:
        raise StateError('register mismatch: %s vs %s' % (a.dims, b.dims))


def fidelity(a, b):
    """|<a|b>|^2, clipped to [0, 1]."""
    _check_same_register(a, b)
    f = abs(np.vdot(a.amplitudes, b.amplitudes))**2
    return float(min(max(f, 0.0), 1.0))


def product_state(bits, dims=None):
    """Computational basis state |bits>."""
    bits = [int(b) for b in bits]
    if dims is None:
        dims = (2,) * len(bits)
    amps = np.zeros(int(np.prod(dims)), dtype=complex)
    amps[np.ravel_multi_index(bits, dims)] = 1.0
    return PureState(amps, dims)


def random_state(n, rng=None, dims=None):
    """Normalized complex Gaussian vector on n sites."""
    rng = np.random.default_rng(rng)
    if dims is None:
        dims = (2,) * n
    size = int(np.prod(dims))
    amps = rng.standard_normal(size) + 1j * rng.standard_normal(size)
    return PureState(amps, dims, normalize=True)


def local_expectation(state, operators):
    """<state| prod_k O_k |state> for single-site operators.

    ``operators`` maps a 0-based site index to a (d, d) matrix.
    """
    psi = state.tensor()
    phi = psi
    for site, op in operators.items():
        phi = np.tensordot(np.asarray(op, dtype=complex), phi,
                           axes=([1], [site]))
        phi = np.moveaxis(phi, 0, site)
    return complex(np.vdot(psi.ravel(), phi.ravel()))


# ==============================================================================
#                            MATRIX-PRODUCT STATES
# ==============================================================================
class BondProfile:
    """Bond dimensions r_0 ... r_n of an open-boundary MPS."""

    def __init__(self, dims):
        self.dims = tuple(int(r) for r in dims)
        if len(self.dims) < 2 or min(self.dims) < 1:
            raise StateError('invalid bond profile %s' % (self.dims,))

    @property
    def internal(self):
        return self.dims[1:-1]

    @property
    def max_dim(self):
        return max(self.dims)

    def within_exact_bound(self, local_dims):
        """True if r_k <= min(prod d_<=k, prod d_>k) for every cut."""
        n = len(local_dims)
        for k in range(1, n):
            left = int(np.prod(local_dims[:k]))
            right = int(np.prod(local_dims[k:]))
            if self.dims[k] > min(left, right):
                return False
        return True

    def __eq__(self, other):
        if isinstance(other, BondProfile):
            return self.dims == other.dims
        return self.dims == tuple(other)

    def __iter__(self):
        return iter(self.dims)

    def __repr__(self):
        return 'BondProfile(%s)' % (list(self.dims),)


class MatrixProductState:
    """Open-boundary MPS with arbitrary (not necessarily isometric) maps.

    Parameters
    ----------
    site_tensors : list of array_like
        tensor of site k with shape (d_k, r_k, r_{k-1}).
    phi_I : array_like
        initial boundary vector of length r_0.
    phi_F : array_like
        final boundary vector of length r_n; enters conjugated.
    """

    def __init__(self, site_tensors, phi_I, phi_F):
        tensors = [np.array(a, dtype=complex) for a in site_tensors]
        if not tensors:
            raise StateError('an MPS needs at least one site')
        phi_I = np.array(phi_I, dtype=complex).ravel()
        phi_F = np.array(phi_F, dtype=complex).ravel()
        right = phi_I.size
        for k, a in enumerate(tensors):
            if a.ndim != 3:
                raise StateError('site %d tensor must have 3 axes, got %d'
                                 % (k + 1, a.ndim))
            if a.shape[2] != right:
                raise StateError('bond mismatch at site %d: expected %d '
                                 'columns, got %d' % (k + 1, right, a.shape[2]))
            right = a.shape[1]
        if phi_F.size != right:
            raise StateError('phi_F has length %d, last bond is %d'
                             % (phi_F.size, right))
        self.site_tensors = tensors
        self.phi_I = phi_I
        self.phi_F = phi_F

    @property
    def n_sites(self):
        return len(self.site_tensors)

    @property
    def local_dims(self):
        return tuple(a.shape[0] for a in self.site_tensors)

    @property
    def bond_profile(self):
        return BondProfile([self.phi_I.size] +
                           [a.shape[1] for a in self.site_tensors])

    def __repr__(self):
        return '<MatrixProductState n=%d bonds=%s>' % (
            self.n_sites, list(self.bond_profile.dims))


def _cutoff(s, tol):
    return max(tol, SVD_FLOOR) * s[0]


def _phase_gauge(u, vh):
    """Make the first nonzero entry of every column of u real-positive."""
    for j in range(u.shape[1]):
        col = u[:, j]
        nz = np.flatnonzero(np.abs(col) > 1e-12)
        if nz.size == 0:
            continue
        phase = col[nz[0]] / abs(col[nz[0]])
        u[:, j] = col * np.conj(phase)
        vh[j, :] = vh[j, :] * phase
    return u, vh


def mps_from_dense(state, tol=1e-12):
    """Left-canonical MPS of a dense state by a sweep of SVDs.

    Parameters
    ----------
    state : PureState
        normalized input state.
    tol : float
        singular values at or below ``tol * sigma_max`` are dropped at
        every cut (never less than the numerical floor).

    Returns
    -------
    mps : MatrixProductState
        every site tensor satisfies sum_i A[i] A[i]^dagger = 1, phi_I = (1)
        and phi_F carries the norm and phase of the last split.
    """
    if tol < 0:
        raise StateError('tol must be non-negative, got %g' % tol)
    dims = state.dims
    rest = state.amplitudes.reshape(1, -1)
    tensors = []
    for k, d in enumerate(dims):
        r_left = rest.shape[0]
        mat = rest.reshape(r_left * d, -1)
        u, s, vh = linalg.svd(mat, full_matrices=False, lapack_driver='gesvd')
        if s[0] == 0.0:
            raise StateError('zero-norm state')
        keep = max(1, int(np.count_nonzero(s > _cutoff(s, tol))))
        u, vh = _phase_gauge(u[:, :keep].copy(), vh[:keep].copy())
        tensors.append(u.reshape(r_left, d, keep).transpose(1, 2, 0))
        rest = s[:keep, None] * vh
        if keep < s.size:
            logger.debug('cut %d: dropped %d singular values (largest %.3e)',
                         k + 1, s.size - keep, s[keep])
    mps = MatrixProductState(tensors, [1.0], np.conj(rest[:, 0]))
    logger.debug('mps_from_dense: bonds %s', list(mps.bond_profile.dims))
    return mps


def mps_to_dense(mps, return_norm=False):
    """Contract an MPS into a normalized PureState.

    With ``return_norm`` the raw norm of the contraction is returned
    as well, ``(state, norm)``.
    """
    acc = mps.phi_I[None, :]
    for a in mps.site_tensors:
        acc = np.einsum('iba,pa->pib', a, acc).reshape(-1, a.shape[1])
    amps = acc @ np.conj(mps.phi_F)
    norm = float(linalg.norm(amps))
    if norm < SVD_FLOOR:
        raise StateError('MPS contracts to a zero vector')
    state = PureState(amps / norm, mps.local_dims, normalize=True)
    if return_norm:
        return state, norm
    return state


def schmidt_values(state, cut):
    """Singular values of the amplitude matrix split after ``cut`` sites."""
    if not 0 < cut < state.n_sites:
        raise StateError('cut %d out of range for %d sites'
                         % (cut, state.n_sites))
    left = int(np.prod(state.dims[:cut]))
    return linalg.svd(state.amplitudes.reshape(left, -1), compute_uv=False,
                      lapack_driver='gesvd')


def schmidt_rank_at_cut(state, cut, tol=1e-12):
    """Number of Schmidt values above ``tol * sigma_max`` at a cut."""
    s = schmidt_values(state, cut)
    return int(np.count_nonzero(s > _cutoff(s, tol)))


def schmidt_profile(state, tol=1e-12):
    """Schmidt ranks at all cuts, padded with the trivial boundary bonds."""
    ranks = [schmidt_rank_at_cut(state, k, tol)
             for k in range(1, state.n_sites)]
    return BondProfile([1] + ranks + [1])


def random_mps(n, D, rng=None, d=2):
    """Random open-boundary MPS with bonds min(D, d^k, d^(n-k))."""
    if n < 1 or D < 1:
        raise StateError('need n >= 1 and D >= 1')
    rng = np.random.default_rng(rng)
    bonds = [min(D, d**k, d**(n - k)) for k in range(n + 1)]
    tensors = []
    for k in range(1, n + 1):
        shape = (d, bonds[k], bonds[k - 1])
        tensors.append(rng.standard_normal(shape) +
                       1j * rng.standard_normal(shape))
    phi_I = rng.standard_normal(bonds[0]) + 1j * rng.standard_normal(bonds[0])
    phi_F = rng.standard_normal(bonds[n]) + 1j * rng.standard_normal(bonds[n])
    return MatrixProductState(tensors, phi_I, phi_F)


def kron(*ops):
    return reduce(np.kron, ops)
