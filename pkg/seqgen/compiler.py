__doc__ = """
Compilation of an MPS into a deterministic sequential-generation plan.

A plan is a list of isometries V_[1] ... V_[n], each (d D) x D, acting
on a D-level ancilla that starts in phi_I. Step k emits qubit k:

    |phi_I> -> sum_i V_[k]^i |alpha> |i>,   V^i[gamma, alpha] = V[gamma*d + i, alpha]

(ancilla-major row index). Compilation is the backward induction

    (M_[k+1] x 1) A_[k] = V'_[k] M_[k],   M_[n+1] = <phi_F|

with every V'_[k] the left factor of an SVD, truncated to the rank
schedule of :func:`isometry_dims` and embedded into (d D) x D.

Usage:

>>> mps = mps_from_dense(psi)
>>> plan = compile_plan(mps)
>>> verify_plan(plan, psi)                   # fidelity, raises if not decoupled

"""

import logging

import numpy as np
from scipy import linalg

from .errors import InputError, SeqgenError
from .mps import SVD_FLOOR, PureState

logger = logging.getLogger(__name__)

ISOMETRY_TOL = 1e-12
# completion candidates shorter than this after projection are skipped
_GS_TOL = 1e-6


class CompileError(SeqgenError):
    pass


class DecouplingError(SeqgenError):
    pass


class PlanShapeError(InputError):
    pass


#===============================================================================
# types
#===============================================================================
class Isometry:
    """Complex matrix with orthonormal columns.

    Parameters
    ----------
    matrix : array_like
        rows x cols with rows >= cols.
    step_index : int, optional
        generation step (site) this isometry emits.
    check : bool
        reject matrices whose W^dagger W deviates from the identity by
        more than ``ISOMETRY_TOL``. Plans read back from disk are loaded
        unchecked so that residuals can be reported.
    """

    def __init__(self, matrix, step_index=None, check=True):
        w = np.array(matrix, dtype=complex)
        if w.ndim != 2:
            raise CompileError('isometry must be a matrix, got %d axes'
                               % w.ndim)
        if w.shape[0] < w.shape[1]:
            raise CompileError('isometry with %d rows < %d columns'
                               % w.shape)
        w.setflags(write=False)
        self.matrix = w
        self.step_index = step_index
        if check and self.residual > ISOMETRY_TOL:
            raise CompileError('step %s is not isometric (residual %.3e)'
                               % (step_index, self.residual))

    @property
    def shape(self):
        return self.matrix.shape

    @property
    def residual(self):
        """max |W^dagger W - 1|."""
        w = self.matrix
        return float(np.max(np.abs(w.conj().T @ w - np.eye(w.shape[1]))))

    def blocks(self, d=2):
        """The maps V^i as an array of shape (d, rows // d, cols)."""
        rows, cols = self.matrix.shape
        return self.matrix.reshape(rows // d, d, cols).transpose(1, 0, 2)

    def __repr__(self):
        return '<Isometry step=%s %dx%d>' % ((self.step_index,) + self.shape)


class GenerationPlan:
    """Ordered isometries plus the ancilla boundary states.

    Parameters
    ----------
    steps : list of Isometry or array_like
        step k emits site k; every step is (d D) x D.
    phi_I : array_like
        initial ancilla state, length D.
    phi_F : array_like or None
        expected final ancilla state. Plans induced from physical
        unitaries may leave it unset.
    ancilla_dim : int, optional
        D; inferred from the steps when omitted.
    d : int
        dimension of the emitted qudits.
    declared_fidelity : float
        fidelity promised by the compiler (1 unless weight was dropped).
    schedule : list of (int, int), optional
        pre-embedding shapes, in step order.
    norm : float, optional
        norm of M_[1] phi_I before normalization (compiled plans).
    """

    def __init__(self, steps, phi_I, phi_F=None, ancilla_dim=None, d=2,
                 declared_fidelity=1.0, schedule=None, norm=None, check=True):
        steps = [s if isinstance(s, Isometry) else
                 Isometry(s, step_index=k + 1, check=check)
                 for k, s in enumerate(steps)]
        if not steps:
            raise CompileError('a plan needs at least one step')
        if ancilla_dim is None:
            ancilla_dim = steps[0].shape[1]
        D = int(ancilla_dim)
        for k, s in enumerate(steps):
            if s.shape != (d * D, D):
                raise PlanShapeError('step %d has shape %s, expected %s'
                                     % (k + 1, s.shape, (d * D, D)))
        phi_I = np.array(phi_I, dtype=complex).ravel()
        if phi_I.size != D:
            raise PlanShapeError('phi_I has length %d, D = %d'
                                 % (phi_I.size, D))
        if abs(linalg.norm(phi_I) - 1.0) > ISOMETRY_TOL:
            raise CompileError('phi_I is not normalized')
        if phi_F is not None:
            phi_F = np.array(phi_F, dtype=complex).ravel()
            if phi_F.size != D:
                raise PlanShapeError('phi_F has length %d, D = %d'
                                     % (phi_F.size, D))
        self.steps = steps
        self.phi_I = phi_I
        self.phi_F = phi_F
        self.ancilla_dim = D
        self.d = int(d)
        self.declared_fidelity = float(declared_fidelity)
        self.schedule = list(schedule) if schedule is not None else None
        self.norm = norm

    @property
    def n_sites(self):
        return len(self.steps)

    def residuals(self):
        return [s.residual for s in self.steps]

    def __repr__(self):
        return '<GenerationPlan n=%d D=%d>' % (self.n_sites, self.ancilla_dim)


#===============================================================================
# compilation
#===============================================================================
def isometry_dims(n, D, d=2):
    """Pre-embedding isometry shapes, listed for k = 0 ... n-1.

    Entry k belongs to step n-k and is (d min[D, d^k], min[D, d^(k+1)]).
    """
    return [(d * min(D, d**k), min(D, d**(k + 1))) for k in range(n)]


def embed_isometry(v, D, d=2):
    """Embed an r x c isometry into a (d D) x D isometry.

    The input is the top-left block; the remaining columns are completed
    by Gram-Schmidt over the canonical basis in index order.
    """
    if not isinstance(v, Isometry):
        v = Isometry(v)
    r, c = v.shape
    if r > d * D or c > D:
        raise CompileError('cannot embed %dx%d into %dx%d'
                           % (r, c, d * D, D))
    w = np.zeros((d * D, D), dtype=complex)
    w[:r, :c] = v.matrix
    col = c
    for j in range(d * D):
        if col == D:
            break
        e = np.zeros(d * D, dtype=complex)
        e[j] = 1.0
        # project twice for stability
        for _ in range(2):
            e -= w[:, :col] @ (w[:, :col].conj().T @ e)
        nrm = linalg.norm(e)
        if nrm > _GS_TOL:
            e /= nrm
            e -= w[:, :col] @ (w[:, :col].conj().T @ e)
            w[:, col] = e / linalg.norm(e)
            col += 1
    return Isometry(w, step_index=v.step_index)


def compile_plan(mps, tol=1e-12, ancilla_dim=None):
    """Compile an MPS into a sequential generation plan.

    Parameters
    ----------
    mps : MatrixProductState
        target; bond dimensions must not exceed the ancilla dimension.
    tol : float
        relative singular-value cutoff used to count the rank of every
        intermediate product.
    ancilla_dim : int, optional
        D. Defaults to the largest bond dimension of ``mps``.

    Returns
    -------
    plan : GenerationPlan
        steps embedded into (d D) x D, phi_F = e_0 and the pre-embedding
        shapes in ``plan.schedule``.
    """
    d_set = set(mps.local_dims)
    if len(d_set) != 1:
        raise CompileError('mixed local dimensions %s' % (mps.local_dims,))
    d = d_set.pop()
    n = mps.n_sites
    D = int(ancilla_dim) if ancilla_dim else mps.bond_profile.max_dim
    cutoff_rel = max(tol, SVD_FLOOR)

    m = np.conj(mps.phi_F)[None, :]
    raw = [None] * n
    kept_weight = 1.0
    for k in range(n - 1, -1, -1):
        a = mps.site_tensors[k]
        lhs = np.einsum('cb,iba->cia', m, a).reshape(m.shape[0] * d, -1)
        u, s, _ = linalg.svd(lhs, full_matrices=True, lapack_driver='gesvd')
        if s.size == 0 or s[0] == 0.0:
            raise CompileError('site %d: intermediate product vanishes'
                               % (k + 1))
        rank = int(np.count_nonzero(s > cutoff_rel * s[0]))
        if rank > D:
            raise CompileError('site %d: rank %d exceeds ancilla dimension %d'
                               % (k + 1, rank, D))
        ncols = min(D, lhs.shape[0])
        v = u[:, :ncols]
        dropped = float(np.sum(s[ncols:]**2))
        if dropped > 0.0:
            kept_weight *= 1.0 - dropped / float(np.sum(s**2))
        raw[k] = Isometry(v, step_index=k + 1)
        m = v.conj().T @ lhs
        logger.debug('step %d: %dx%d, rank %d', k + 1, v.shape[0], ncols,
                     rank)

    phi = m @ mps.phi_I
    norm = float(linalg.norm(phi))
    if norm < SVD_FLOOR:
        raise CompileError('M_[1] annihilates phi_I')
    phi_I = np.zeros(D, dtype=complex)
    phi_I[:phi.size] = phi / norm
    phi_F = np.zeros(D, dtype=complex)
    phi_F[0] = 1.0
    steps = [embed_isometry(v, D, d) for v in raw]
    plan = GenerationPlan(steps, phi_I, phi_F, ancilla_dim=D, d=d,
                          declared_fidelity=kept_weight,
                          schedule=[v.shape for v in raw], norm=norm)
    logger.info('compiled %d sites into a D=%d plan', n, D)
    return plan


def verify_plan(plan, target, full_output=False):
    """Run a plan and compare its qubits with a target state.

    Returns the fidelity; with ``full_output`` also the overlap
    |<phi_F|ancilla_out>|^2 (None when the plan has no phi_F) and the
    per-step isometry residuals.

    Raises
    ------
    DecouplingError
        the ancilla is still entangled with the emitted qubits.
    PlanShapeError
        plan and target registers differ.
    """
    from .generation import run_plan

    if not isinstance(target, PureState):
        raise PlanShapeError('target must be a PureState')
    if target.dims != (plan.d,) * plan.n_sites:
        raise PlanShapeError('plan emits %d qudits of dimension %d, target '
                             'has dims %s' % (plan.n_sites, plan.d,
                                              target.dims))
    qubits, ancilla_out, decoupled = run_plan(plan)
    if not decoupled:
        raise DecouplingError('ancilla is not decoupled after step %d'
                              % plan.n_sites)
    f = qubits.inner(target)
    f = float(min(abs(f)**2, 1.0))
    overlap = None
    if plan.phi_F is not None:
        overlap = float(abs(np.vdot(plan.phi_F, ancilla_out))**2)
        logger.info('final ancilla overlap with phi_F: %.12f', overlap)
    if full_output:
        return f, overlap, plan.residuals()
    return f
