__doc__ = """
Readers and writers for the seqgen file formats.

Complex numbers are stored as [re, im] pairs so that every entry is
written at full double precision (json uses repr for floats).

state:  {"n": int, "dims": [int], "amps": [[re, im], ...]}
mps:    {"n": int, "site_tensors": [nested [[re, im]]], "phi_I": [...],
         "phi_F": [...]}
plan:   {"D": int, "d": int, "steps": [[[re, im], ...], ...],
         "phi_I": [...], "phi_F": [...] or null, "declared_fidelity": float,
         "schedule": [[rows, cols], ...] or null}

Usage:

>>> write_state('w4.json', target_w_state(WParams.uniform(4)))
>>> psi = read_state('w4.json')
>>> plan = read_plan('w4.plan.json', check=False)

"""

import csv
import json
import logging

import numpy as np

from .compiler import GenerationPlan, Isometry
from .errors import InputError
from .mps import MatrixProductState, PureState

logger = logging.getLogger(__name__)


class ParserError(InputError):
    pass


#-------------------------------------------------------------------------------
# complex arrays
#-------------------------------------------------------------------------------
def encode_complex(arr):
    """Nested lists with a trailing [re, im] axis."""
    arr = np.asarray(arr, dtype=complex)
    return np.stack([arr.real, arr.imag], axis=-1).tolist()


def decode_complex(data, name='array'):
    try:
        arr = np.asarray(data, dtype=float)
    except (TypeError, ValueError):
        raise ParserError('%s is not a numeric array' % name)
    if arr.ndim == 0 or arr.shape[-1] != 2:
        raise ParserError('%s must hold [re, im] pairs' % name)
    return arr[..., 0] + 1j * arr[..., 1]


def _field(data, key, what):
    if not isinstance(data, dict):
        raise ParserError('%s must be a JSON object' % what)
    if key not in data:
        raise ParserError('%s lacks the "%s" field' % (what, key))
    return data[key]


def _int(value, name):
    # bool is an int subclass
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParserError('%s must be an integer, got %r' % (name, value))
    return value


def _list(value, name):
    if not isinstance(value, list):
        raise ParserError('%s must be a list, got %r' % (name, value))
    return value


def _int_list(value, name):
    return [_int(v, name) for v in _list(value, name)]


#===============================================================================
# dict conversion
#===============================================================================
def state_to_dict(state):
    return {'n': state.n_sites,
            'dims': list(state.dims),
            'amps': encode_complex(state.amplitudes)}


def state_from_dict(data):
    amps = decode_complex(_field(data, 'amps', 'state'), 'amps')
    dims = _int_list(_field(data, 'dims', 'state'), 'dims')
    n = _int(_field(data, 'n', 'state'), 'n')
    if len(dims) != n:
        raise ParserError('state declares n = %d but %d dims' % (n, len(dims)))
    return PureState(amps, dims)


def mps_to_dict(mps):
    return {'n': mps.n_sites,
            'site_tensors': [encode_complex(a) for a in mps.site_tensors],
            'phi_I': encode_complex(mps.phi_I),
            'phi_F': encode_complex(mps.phi_F)}


def mps_from_dict(data):
    tensors = [decode_complex(a, 'site tensor %d' % (k + 1)) for k, a in
               enumerate(_list(_field(data, 'site_tensors', 'mps'),
                               'site_tensors'))]
    n = _int(_field(data, 'n', 'mps'), 'n')
    if len(tensors) != n:
        raise ParserError('mps declares n = %d but holds %d tensors'
                          % (n, len(tensors)))
    return MatrixProductState(tensors,
                              decode_complex(_field(data, 'phi_I', 'mps')),
                              decode_complex(_field(data, 'phi_F', 'mps')))


def plan_to_dict(plan):
    phi_F = None if plan.phi_F is None else encode_complex(plan.phi_F)
    schedule = (None if plan.schedule is None
                else [list(s) for s in plan.schedule])
    return {'D': plan.ancilla_dim,
            'd': plan.d,
            'steps': [encode_complex(s.matrix) for s in plan.steps],
            'phi_I': encode_complex(plan.phi_I),
            'phi_F': phi_F,
            'declared_fidelity': plan.declared_fidelity,
            'schedule': schedule}


def _step(data, k):
    w = decode_complex(data, 'step %d' % k)
    if w.ndim != 2:
        raise ParserError('step %d must be a matrix, got %d axes' % (k, w.ndim))
    return w


def plan_from_dict(data, check=True):
    """Rebuild a GenerationPlan; ``check=False`` keeps non-isometric steps."""
    D = _int(_field(data, 'D', 'plan'), 'D')
    d = _int(data.get('d', 2), 'd')
    if D < 1 or d < 1:
        raise ParserError('plan needs D >= 1 and d >= 1, got D = %d, d = %d'
                          % (D, d))
    steps = [Isometry(_step(s, k + 1), step_index=k + 1, check=check)
             for k, s in enumerate(_list(_field(data, 'steps', 'plan'),
                                         'steps'))]
    phi_F = data.get('phi_F')
    if phi_F is not None:
        phi_F = decode_complex(phi_F, 'phi_F')
    schedule = data.get('schedule')
    if schedule is not None:
        schedule = [tuple(_int_list(s, 'schedule'))
                    for s in _list(schedule, 'schedule')]
    declared = data.get('declared_fidelity', 1.0)
    if isinstance(declared, bool) or not isinstance(declared, (int, float)):
        raise ParserError('declared_fidelity must be a number, got %r'
                          % (declared,))
    return GenerationPlan(steps, decode_complex(_field(data, 'phi_I', 'plan'),
                                                'phi_I'),
                          phi_F, ancilla_dim=D, d=d,
                          declared_fidelity=declared,
                          schedule=schedule, check=check)


#===============================================================================
# files
#===============================================================================
def read_json(fn):
    try:
        with open(fn) as fp:
            return json.load(fp)
    except OSError as e:
        raise ParserError('cannot read %s: %s' % (fn, e.strerror))
    except ValueError as e:
        raise ParserError('%s is not valid JSON: %s' % (fn, e))


def write_json(fn, data):
    """Write with sorted keys so identical data gives identical bytes."""
    with open(fn, 'w') as fp:
        json.dump(data, fp, indent=1, sort_keys=True)
        fp.write('\n')
    logger.debug('wrote %s', fn)


def read_state(fn):
    return state_from_dict(read_json(fn))


def write_state(fn, state):
    write_json(fn, state_to_dict(state))


def read_mps(fn):
    return mps_from_dict(read_json(fn))


def write_mps(fn, mps):
    write_json(fn, mps_to_dict(mps))


def read_plan(fn, check=True):
    return plan_from_dict(read_json(fn), check=check)


def write_plan(fn, plan):
    write_json(fn, plan_to_dict(plan))


def write_csv(fn, columns, rows):
    """Rows are dicts keyed by ``columns``; floats keep full precision."""
    with open(fn, 'w', newline='') as fp:
        writer = csv.DictWriter(fp, fieldnames=columns, lineterminator='\n')
        writer.writeheader()
        for row in rows:
            writer.writerow({c: (repr(float(v)) if isinstance(v, float)
                                 else v) for c, v in row.items()})
    logger.debug('wrote %d rows to %s', len(rows), fn)


def read_csv(fn):
    try:
        with open(fn, newline='') as fp:
            return list(csv.DictReader(fp))
    except OSError as e:
        raise ParserError('cannot read %s: %s' % (fn, e.strerror))
