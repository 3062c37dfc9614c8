#!/usr/bin/env python

"""Write a named target state, its generation plan and a run report."""

import argparse
import os

import numpy as np

from seqgen.compiler import compile_plan, verify_plan
from seqgen.generation import measure_ancilla, run_qubit_chain
from seqgen.mps import (fidelity, mps_from_dense, mps_to_dense, random_mps,
                        schmidt_profile)
from seqgen.parser import write_plan, write_state
from seqgen.recipes import (RecipeError, WParams, adiabatic_ghz_target,
                            adiabatic_recipe, atomic_ghz_sequence,
                            atomic_w_cascade, atomic_w_post_state,
                            cluster_state, ghz_state, ghz_stabilizer_checks,
                            run_atomic_cluster, target_w_state,
                            w_source_plan)
from seqgen.report import RunReport, report_path
from seqgen.scripts.common import (_tee, add_common_options, output_path,
                                   run_command)

RECIPES = ('w', 'ghz', 'cluster', 'atomic-w', 'atomic-ghz', 'atomic-cluster',
           'random')
SEED = 20240611


# ---------------------
# One function per recipe, each returns (state, plans, report)
# ---------------------
def _w(args, report):
    if args.theta is None:
        params = WParams.uniform(args.n)
    else:
        params = WParams(_broadcast(args.theta, args.n - 1),
                         _broadcast(args.phi or [0.0], args.n - 1))
    state = target_w_state(params)
    source = w_source_plan(params)
    adiabatic = adiabatic_recipe('W', args.n, params.thetas,
                                 params.phis).plan()
    report.add_fidelity('source_plan', verify_plan(source, state))
    report.add_fidelity('adiabatic_plan', verify_plan(adiabatic, state))
    return state, {'plan': source, 'adiabatic.plan': adiabatic}


def _ghz(args, report):
    for name, values in (('theta', args.theta), ('phi', args.phi)):
        if values is not None and len(values) != 1:
            raise RecipeError('ghz takes a single %s, got %d values'
                              % (name, len(values)))
    theta = (args.theta or [np.pi / 4])[0]
    phi = (args.phi or [0.0])[0]
    state = adiabatic_ghz_target(args.n, theta, phi)
    plan = adiabatic_recipe('GHZ', args.n, theta, phi).plan()
    report.add_fidelity('adiabatic_plan', verify_plan(plan, state))
    return state, {'plan': plan}


def _cluster(args, report):
    thetas = np.pi / 4 if args.theta is None else _broadcast(args.theta,
                                                             args.n)
    phis = 0.0 if args.phi is None else _broadcast(args.phi, args.n)
    state = cluster_state(args.n, thetas, phis)
    plan = adiabatic_recipe('CLUSTER', args.n, thetas, phis).plan()
    report.add_fidelity('adiabatic_plan', verify_plan(plan, state))
    return state, {'plan': plan}


def _atomic_w(args, report):
    joint = atomic_w_cascade(args.n)
    basis = np.array([[1, 1], [1, -1]]) / np.sqrt(2.0)
    probs = []
    for k in range(2):
        p, post = measure_ancilla(joint, basis, k)
        probs.append(p)
        if k == args.outcome:
            state = post
    report.add_fidelity('closed_form', fidelity(
        state, atomic_w_post_state(args.n, args.outcome)))
    report.extra['probabilities'] = probs
    return state, {}


def _atomic_ghz(args, report):
    initial, layer = atomic_ghz_sequence(args.n)
    state = run_qubit_chain(args.n, [layer], initial)
    report.add_fidelity('closed_form', fidelity(state, ghz_state(args.n)))
    xx, zz = ghz_stabilizer_checks(state)
    report.extra['stabilizers'] = {'XX': xx, 'ZZ': zz}
    return state, {}


def _atomic_cluster(args, report):
    p, state = run_atomic_cluster(args.n, args.outcome)
    report.add_fidelity('closed_form', fidelity(state, cluster_state(args.n)))
    report.extra['probability'] = p
    return state, {}


def _random(args, report):
    mps = random_mps(args.n, args.bond, args.seed)
    state = mps_to_dense(mps)
    plan = compile_plan(mps_from_dense(state))
    report.add_fidelity('plan', verify_plan(plan, state))
    report.extra.update({'seed': args.seed, 'D': plan.ancilla_dim})
    return state, {'plan': plan}


_BUILDERS = {'w': _w,
             'ghz': _ghz,
             'cluster': _cluster,
             'atomic-w': _atomic_w,
             'atomic-ghz': _atomic_ghz,
             'atomic-cluster': _atomic_cluster,
             'random': _random}


def _broadcast(values, n):
    if len(values) == 1:
        return [values[0]] * n
    if len(values) != n:
        raise RecipeError('need 1 or %d angles, got %d' % (n, len(values)))
    return list(values)


# ==============================================================================
#                      COMMAND LINE OPTIONS AND MAIN
# ==============================================================================
def parse_options(argv=None):

    parser = argparse.ArgumentParser(description='Writes a named target '
            'state and, where the recipe is a plan, the generation plan. '
            'Available recipes: %s. Angles are in radians; the random '
            'recipe draws an MPS of bond dimension D from a seeded '
            'generator.'
            % ', '.join(RECIPES))

    parser.add_argument('name',
                        choices=RECIPES,
                        help='Recipe name.')
    parser.add_argument('-n',
                        metavar='n',
                        type=int,
                        help='Number of qubits (photons or atoms).',
                        required=True)
    parser.add_argument('--theta',
                        metavar='theta',
                        type=float,
                        nargs='+',
                        help='Mixing angles; one value broadcasts.',
                        default=None)
    parser.add_argument('--phi',
                        metavar='phi',
                        type=float,
                        nargs='+',
                        help='Phases; one value broadcasts.',
                        default=None)
    parser.add_argument('--outcome',
                        type=int,
                        choices=(0, 1),
                        help='Cavity measurement outcome for atomic-w and '
                        'atomic-cluster. Default is 0.',
                        default=0)
    parser.add_argument('-D', '--bond',
                        metavar='D',
                        type=int,
                        help='Bond dimension of the random recipe. Default '
                        'is 2.',
                        default=2)
    parser.add_argument('--seed',
                        metavar='seed',
                        type=int,
                        help='Seed of the PCG64 generator used by the random '
                        'recipe. Default is %d.' % SEED,
                        default=SEED)
    parser.add_argument('-o', '--out',
                        metavar='state',
                        dest='outfn',
                        help='Output state file. Default is <name>_<n>.json',
                        default=None)
    add_common_options(parser)
    return parser.parse_args(argv)


def _recipe(args, out):
    if args.n < 2:
        raise RecipeError('recipes need n >= 2, got %d' % args.n)
    report = RunReport('recipe')
    outfn = output_path(args.outfn or '%s_%d.json' % (args.name, args.n))
    stem = os.path.splitext(outfn)[0]

    with report.timer('build'):
        state, plans = _BUILDERS[args.name](args, report)
    profile = schmidt_profile(state)
    report.bond_profile = list(profile)
    report.extra.update({'recipe': args.name, 'n': args.n})
    if plans:
        report.decoupled = True

    write_state(outfn, state)
    for suffix, plan in sorted(plans.items()):
        write_plan('%s.%s.json' % (stem, suffix), plan)
    report.write(report_path(outfn), timings=args.timings)

    _tee(out, ' Recipe %s, n = %d' % (args.name, args.n))
    _tee(out, ' Bond profile: %s' % list(profile))
    for name, f in sorted(report.fidelities.items()):
        _tee(out, ' Fidelity (%s): %.15f' % (name, f))
    _tee(out, ' State written to %s' % outfn)


def main(argv=None):
    args = parse_options(argv)
    return run_command(_recipe, args)


def entry_point(argv=None):
    raise SystemExit(main(argv))


if __name__ == '__main__':
    entry_point()
