#!/usr/bin/env python

"""Run a stored plan and compare the emitted qubits with a state file."""

import argparse
import os

from seqgen.compiler import ISOMETRY_TOL, verify_plan
from seqgen.generation import SimulationError
from seqgen.parser import read_plan, read_state
from seqgen.report import RunReport, report_path
from seqgen.scripts.common import (_tee, add_common_options, output_path,
                                   run_command)


# ==============================================================================
#                      COMMAND LINE OPTIONS AND MAIN
# ==============================================================================
def parse_options(argv=None):

    parser = argparse.ArgumentParser(description='Checks every step of a '
            'plan for the isometry condition, runs it and reports the '
            'fidelity with a target state and the ancilla decoupling.')

    parser.add_argument('-p', '--plan',
                        metavar='plan',
                        dest='planfn',
                        help='Plan file (JSON).',
                        required=True)
    parser.add_argument('-s', '--state',
                        metavar='state',
                        dest='statefn',
                        help='Target state file (JSON).',
                        required=True)
    parser.add_argument('-o', '--out',
                        metavar='report',
                        dest='outfn',
                        help='Report file. Default is '
                        '<plan>.verify.report.json',
                        default=None)
    parser.add_argument('--tol',
                        metavar='tol',
                        type=float,
                        help='Largest accepted isometry residual. Default '
                        'is 1e-12.',
                        default=ISOMETRY_TOL)
    add_common_options(parser)
    return parser.parse_args(argv)


def _verify(args, out):
    report = RunReport('verify')
    report.add_input(args.planfn)
    report.add_input(args.statefn)
    outfn = args.outfn or report_path(
        os.path.splitext(args.planfn)[0] + '.verify.json')
    outfn = output_path(outfn)

    plan = read_plan(args.planfn, check=False)
    state = read_state(args.statefn)

    residuals = plan.residuals()
    report.extra['residuals'] = residuals
    for k, r in enumerate(residuals):
        flag = '  <-- not isometric' if r > args.tol else ''
        _tee(out, ' step %3d: residual %.3e%s' % (k + 1, r, flag))
    bad = [k + 1 for k, r in enumerate(residuals) if r > args.tol]
    if bad:
        report.extra['failed_steps'] = bad
        report.write(outfn, timings=args.timings)
        raise SimulationError('isometry condition violated at step(s) %s'
                              % ', '.join(str(k) for k in bad))

    with report.timer('run'):
        f, overlap, _ = verify_plan(plan, state, full_output=True)
    report.add_fidelity('target', f)
    report.decoupled = True
    report.extra['phi_F_overlap'] = overlap
    report.write(outfn, timings=args.timings)

    _tee(out, ' Fidelity with target: %.15f' % f)
    _tee(out, ' Ancilla decoupled: yes')
    if overlap is not None:
        _tee(out, ' Overlap with phi_F: %.15f' % overlap)


def main(argv=None):
    args = parse_options(argv)
    return run_command(_verify, args)


def entry_point(argv=None):
    raise SystemExit(main(argv))


if __name__ == '__main__':
    entry_point()
