"""Helpers shared by the command scripts."""

import logging
import os
import sys

from seqgen.errors import SeqgenError

logger = logging.getLogger('seqgen')


def setup_logging(verbose=False):
    logging.basicConfig(format='%(levelname)s %(name)s: %(message)s',
                        level=logging.DEBUG if verbose else logging.INFO)
    # basicConfig is a no-op once a handler exists
    logging.getLogger().setLevel(logging.DEBUG if verbose else logging.INFO)


def add_common_options(parser):
    parser.add_argument('--timings',
                        help='Include per-phase timings in the run report.',
                        default=False,
                        action='store_true')
    parser.add_argument('-l', '--log',
                        metavar='log',
                        dest='logfn',
                        help='Also write the printed results to this file.',
                        default=None)
    parser.add_argument('-v', '--verbose',
                        help='Debug output.',
                        default=False,
                        action='store_true')


def _tee(fp, s):
    if fp is not None:
        print(s, file=fp)
    print(s)


def output_path(fn):
    """Place an output file in $SEQGEN_OUTDIR when it is set."""
    outdir = os.environ.get('SEQGEN_OUTDIR')
    if outdir:
        os.makedirs(outdir, exist_ok=True)
        return os.path.join(outdir, os.path.basename(fn))
    parent = os.path.dirname(fn)
    if parent:
        os.makedirs(parent, exist_ok=True)
    return fn


def run_command(func, args):
    """Call ``func(args, out)`` and map seqgen errors to exit codes."""
    setup_logging(args.verbose)
    out = open(args.logfn, 'w') if args.logfn else None
    try:
        func(args, out)
    except SeqgenError as e:
        print('seqgen: error: %s' % e.s, file=sys.stderr)
        return e.exit_code
    finally:
        if out is not None:
            out.close()
    return 0
