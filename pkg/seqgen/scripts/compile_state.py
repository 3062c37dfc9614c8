#!/usr/bin/env python

"""Compile a state file into a sequential generation plan."""

import argparse
import os

from seqgen.compiler import compile_plan, isometry_dims, verify_plan
from seqgen.mps import mps_from_dense, schmidt_profile
from seqgen.parser import read_state, write_plan
from seqgen.report import RunReport, report_path
from seqgen.scripts.common import (_tee, add_common_options, output_path,
                                   run_command)


# ==============================================================================
#                      COMMAND LINE OPTIONS AND MAIN
# ==============================================================================
def parse_options(argv=None):

    parser = argparse.ArgumentParser(description='Compiles a pure state '
            'given as JSON into a plan of isometries acting on a single '
            'ancilla, runs the plan and reports the roundtrip fidelity.')

    parser.add_argument('-s', '--state',
                        metavar='state',
                        dest='statefn',
                        help='Input state file (JSON).',
                        required=True)
    parser.add_argument('-o', '--out',
                        metavar='plan',
                        dest='outfn',
                        help='Output plan file. Default is <state>.plan.json',
                        default=None)
    parser.add_argument('--tol',
                        metavar='tol',
                        type=float,
                        help='Relative singular value cutoff. Default is '
                        '1e-12.',
                        default=1e-12)
    parser.add_argument('-D', '--ancilla-dim',
                        metavar='D',
                        dest='ancilla_dim',
                        type=int,
                        help='Ancilla dimension. Default is the largest '
                        'bond dimension of the state.',
                        default=None)
    add_common_options(parser)
    return parser.parse_args(argv)


def _compile(args, out):
    report = RunReport('compile')
    report.add_input(args.statefn)
    outfn = args.outfn or os.path.splitext(args.statefn)[0] + '.plan.json'
    outfn = output_path(outfn)

    with report.timer('read'):
        state = read_state(args.statefn)
    with report.timer('compile'):
        mps = mps_from_dense(state, tol=args.tol)
        plan = compile_plan(mps, tol=args.tol, ancilla_dim=args.ancilla_dim)
    with report.timer('verify'):
        f, overlap, residuals = verify_plan(plan, state, full_output=True)

    write_plan(outfn, plan)
    report.add_fidelity('roundtrip', f)
    report.add_fidelity('declared', plan.declared_fidelity)
    report.bond_profile = list(schmidt_profile(state, tol=args.tol))
    report.decoupled = True
    report.extra = {'D': plan.ancilla_dim,
                    'n': plan.n_sites,
                    'schedule': [list(s) for s in plan.schedule],
                    'isometry_dims': [list(s) for s in
                                      isometry_dims(plan.n_sites,
                                                    plan.ancilla_dim, plan.d)],
                    'max_residual': max(residuals),
                    'phi_F_overlap': overlap}
    report.write(report_path(outfn), timings=args.timings)

    _tee(out, ' Compiled %d sites with D = %d' % (plan.n_sites,
                                                   plan.ancilla_dim))
    _tee(out, ' Schedule (step order): %s' % ', '.join(
        '%dx%d' % s for s in plan.schedule))
    _tee(out, ' Roundtrip fidelity: %.15f' % f)
    _tee(out, ' Plan written to %s' % outfn)


def main(argv=None):
    args = parse_options(argv)
    return run_command(_compile, args)


def entry_point(argv=None):
    raise SystemExit(main(argv))


if __name__ == '__main__':
    entry_point()
