#!/usr/bin/env python

"""Selectivity of the cavity sqrt(ISWAP) pulse over a grid of detunings."""

import argparse
import os
from concurrent.futures import ProcessPoolExecutor

from seqgen.cavity import CavityModel, selectivity_error
from seqgen.errors import InputError
from seqgen.parser import write_csv, write_json
from seqgen.report import RunReport, report_path
from seqgen.scripts.common import (_tee, add_common_options, output_path,
                                   run_command)

COLUMNS = ['Delta_over_g', 'Omega_over_g', 'n_max', 'level', 'infidelity',
           'leakage']


def _sweep_point(point):
    model, level, subspace = point
    infid, leak = selectivity_error(model, level, subspace, full_output=True)
    return {'Delta_over_g': model.delta / model.g,
            'Omega_over_g': model.omega / model.g,
            'n_max': model.n_max,
            'level': level,
            'infidelity': infid,
            'leakage': leak}


def sweep(models, level='full', subspace='exchange', workers=1):
    """Rows in the order of ``models``, whatever the number of workers."""
    points = [(m, level, subspace) for m in models]
    if workers > 1 and len(points) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_sweep_point, points))
    return [_sweep_point(p) for p in points]


def is_monotone(rows):
    """Infidelity never grows with |Delta| at fixed Omega/g."""
    groups = {}
    for row in rows:
        groups.setdefault(row['Omega_over_g'], []).append(row)
    for grp in groups.values():
        grp = sorted(grp, key=lambda r: abs(r['Delta_over_g']))
        for lo, hi in zip(grp, grp[1:]):
            if hi['infidelity'] > lo['infidelity']:
                return False
    return True


# ==============================================================================
#                      COMMAND LINE OPTIONS AND MAIN
# ==============================================================================
def parse_options(argv=None):

    parser = argparse.ArgumentParser(description='Infidelity of the '
            'physical sqrt(ISWAP) pulse against the selective Hamiltonian '
            'over a grid of large detunings Delta and Rabi frequencies '
            'Omega, in units of the cavity coupling g.')

    parser.add_argument('--delta',
                        metavar='Delta',
                        type=float,
                        nargs='+',
                        help='Large detunings. Default is 50 100 200 400.',
                        default=[50.0, 100.0, 200.0, 400.0])
    parser.add_argument('--omega',
                        metavar='Omega',
                        type=float,
                        nargs='+',
                        help='Rabi frequencies. Default is 1.',
                        default=[1.0])
    parser.add_argument('--g',
                        metavar='g',
                        type=float,
                        help='Cavity coupling. Default is 1.',
                        default=1.0)
    parser.add_argument('--n-max',
                        metavar='n_max',
                        dest='n_max',
                        type=int,
                        help='Fock cutoff. Default is 4.',
                        default=4)
    parser.add_argument('--level',
                        choices=('full', 'adiabatic'),
                        help='Hamiltonian to propagate. Default is full.',
                        default='full')
    parser.add_argument('--subspace',
                        choices=('exchange', 'qubit'),
                        help='Scored subspace. Default is exchange.',
                        default='exchange')
    parser.add_argument('--workers',
                        metavar='N',
                        type=int,
                        help='Worker processes. Default is 1.',
                        default=1)
    parser.add_argument('--format',
                        choices=('csv', 'json'),
                        help='Output format. Default is csv.',
                        default='csv')
    parser.add_argument('-o', '--out',
                        metavar='out',
                        dest='outfn',
                        help='Output file. Default is sweep.<format>',
                        default=None)
    add_common_options(parser)
    return parser.parse_args(argv)


def _physics_sweep(args, out):
    if not args.delta or not args.omega:
        raise InputError('empty parameter grid')
    if args.workers < 1:
        raise InputError('--workers must be at least 1')
    models = [CavityModel(g=args.g, omega=omega, delta=delta,
                          n_max=args.n_max)
              for omega in args.omega for delta in args.delta]

    report = RunReport('physics-sweep')
    outfn = output_path(args.outfn or 'sweep.%s' % args.format)
    with report.timer('sweep'):
        rows = sweep(models, args.level, args.subspace, args.workers)
    if args.format == 'csv':
        write_csv(outfn, COLUMNS, rows)
    else:
        write_json(outfn, rows)

    monotone = is_monotone(rows)
    worst = max(r['infidelity'] for r in rows)
    report.add_fidelity('worst', 1.0 - worst)
    report.extra = {'level': args.level,
                    'subspace': args.subspace,
                    'points': len(rows),
                    'monotone': monotone,
                    'max_leakage': max(r['leakage'] for r in rows)}
    report.write(report_path(outfn), timings=args.timings)

    _tee(out, ' %12s %12s %10s' % ('Delta/g', 'Omega/g', 'infidelity'))
    for r in rows:
        _tee(out, ' %12g %12g %10.3e' % (r['Delta_over_g'], r['Omega_over_g'],
                                         r['infidelity']))
    _tee(out, ' Monotone in |Delta|: %s' % ('yes' if monotone else 'no'))
    _tee(out, ' Results written to %s' % os.path.abspath(outfn))


def main(argv=None):
    args = parse_options(argv)
    return run_command(_physics_sweep, args)


def entry_point(argv=None):
    raise SystemExit(main(argv))


if __name__ == '__main__':
    entry_point()
