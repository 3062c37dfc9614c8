"""Exception base shared by all seqgen modules.

Each module derives its own error classes from :class:`SeqgenError`.
``exit_code`` is what the command line scripts return when the error
reaches them: 2 for bad input, 3 for numerical failures.
"""


class SeqgenError(Exception):
    exit_code = 3

    def __init__(self, s):
        self.s = s

    def __str__(self):
        return repr(self.s)


class InputError(SeqgenError):
    exit_code = 2
