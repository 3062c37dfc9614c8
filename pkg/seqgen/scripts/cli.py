#!/usr/bin/env python

# simple interface to the available scripts
from argparse import ArgumentParser, RawTextHelpFormatter, SUPPRESS
import sys

from seqgen import __version__


class SeqgenCli:

    def __init__(self, argv=None):
        argv = sys.argv[1:] if argv is None else list(argv)
        parser = ArgumentParser(
            prog='seqgen',
            description='''
    ---------------------------
    seqgen command line scripts
    ---------------------------

    Available commands are:
        compile        Compile a state file into a generation plan
        recipe         Write a named or seeded random state
        verify         Run a plan against a target state
        physics-sweep  Selectivity of the cavity sqrt(ISWAP) pulse''',
            formatter_class=RawTextHelpFormatter)

        parser.add_argument('--version', action='version',
                            version=__version__)
        parser.add_argument('command', help=SUPPRESS)
        # parse only the command; the rest belongs to the script
        args = parser.parse_args(argv[:1])
        method = args.command.replace('-', '_')
        if args.command.startswith('_') or not hasattr(self, method):
            print('Unrecognized command')
            parser.print_help()
            self.status = 2
            return
        # use dispatch pattern to invoke method with same name
        self.status = getattr(self, method)(argv[1:])

    def compile(self, argv):
        from seqgen.scripts import compile_state
        return compile_state.main(argv)

    def recipe(self, argv):
        from seqgen.scripts import make_recipe
        return make_recipe.main(argv)

    def verify(self, argv):
        from seqgen.scripts import verify_plan
        return verify_plan.main(argv)

    def physics_sweep(self, argv):
        from seqgen.scripts import physics_sweep
        return physics_sweep.main(argv)


def entry_point(argv=None):
    sys.exit(SeqgenCli(argv).status)


if __name__ == '__main__':
    entry_point()
