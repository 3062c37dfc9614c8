"""Run reports written next to every command output."""

import hashlib
import logging
import os
import time
from contextlib import contextmanager

from .errors import InputError
from .parser import write_json

logger = logging.getLogger(__name__)

# fidelities may overshoot 1 by rounding
_FIDELITY_SLACK = 1e-12


class RunReport:
    """Summary of one command run.

    Parameters
    ----------
    command : str
        name of the command that produced the report.

    Attributes
    ----------
    inputs_digest : str
        sha256 over the bytes of all input files, in the order added.
    fidelities : dict
        named fidelities, each in [0, 1].
    bond_profile : list of int or None
    decoupled : bool or None
    timings : dict
        milliseconds per named phase; only written on request.
    extra : dict
        command specific values.
    """

    def __init__(self, command):
        self.command = command
        self._sha = hashlib.sha256()
        self.fidelities = {}
        self.bond_profile = None
        self.decoupled = None
        self.timings = {}
        self.extra = {}

    @property
    def inputs_digest(self):
        return self._sha.hexdigest()

    def add_input(self, fn):
        try:
            with open(fn, 'rb') as fp:
                self._sha.update(fp.read())
        except OSError as e:
            raise InputError('cannot read %s: %s' % (fn, e.strerror))

    def add_fidelity(self, name, value):
        f = float(value)
        if not -_FIDELITY_SLACK <= f <= 1.0 + _FIDELITY_SLACK:
            raise InputError('fidelity %s = %.16g outside [0, 1]' % (name, f))
        self.fidelities[name] = min(max(f, 0.0), 1.0)

    @contextmanager
    def timer(self, name):
        start = time.perf_counter()
        try:
            yield
        finally:
            self.timings[name] = 1e3 * (time.perf_counter() - start)

    def to_dict(self, timings=False):
        data = {'command': self.command,
                'inputs_digest': self.inputs_digest,
                'fidelities': dict(self.fidelities),
                'bond_profile': (None if self.bond_profile is None
                                 else [int(r) for r in self.bond_profile]),
                'decoupled': (None if self.decoupled is None
                              else bool(self.decoupled)),
                'extra': dict(self.extra)}
        if timings:
            data['timings'] = dict(self.timings)
        return data

    def write(self, fn, timings=False):
        write_json(fn, self.to_dict(timings))
        logger.info('report written to %s', fn)


def report_path(fn):
    """``<stem>.report.json`` next to an output file."""
    return os.path.splitext(fn)[0] + '.report.json'
