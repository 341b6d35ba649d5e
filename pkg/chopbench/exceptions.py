# chopbench: Model checking workbench for PDL over language classes and FLC.
#
# Author: The chopbench developers
# Last Change: October 16, 2026

"""
The :mod:`chopbench.exceptions` module defines the exceptions raised by `chopbench`.

Every exception derives from :exc:`ChopbenchError` and carries the exit code
that the command line interface reports when the exception escapes:

=============================  =========
Exception                      Exit code
=============================  =========
:exc:`ChopbenchError`          1
:exc:`ParseError`              2
:exc:`InputError`              3
:exc:`ResourceError`           4
:exc:`BoundTooSmallError`      4
:exc:`DisagreementError`       5
=============================  =========
"""

# External dependencies.
from humanfriendly.text import compact

__all__ = (
    'BoundTooSmallError',
    'ChopbenchError',
    'DisagreementError',
    'InputError',
    'ParseError',
    'ResourceError',
)


class ChopbenchError(Exception):

    """Base class for exceptions raised by `chopbench`."""

    exit_code = 1


class InputError(ChopbenchError, ValueError):

    """
    Raised when an operation receives input it can't make sense of.

    Examples are unknown states, letters outside of an alphabet, languages
    whose alphabets don't match, unbound variables and unclassified letters.
    Because this is a subclass of :exc:`~exceptions.ValueError` callers that
    don't know about `chopbench` can still catch it.
    """

    exit_code = 3


class ParseError(InputError):

    """Raised when a text format or formula doesn't follow its grammar."""

    exit_code = 2

    def __init__(self, message, line=None, column=None, filename=None):
        """
        Initialize a :class:`ParseError` object.

        :param message: A description of the problem (a string).
        :param line: The one based line number of the problem (an integer or :data:`None`).
        :param column: The one based column number of the problem (an integer or :data:`None`).
        :param filename: The name of the file being parsed (a string or :data:`None`).
        """
        self.message = message
        self.line = line
        self.column = column
        self.filename = filename
        location = []
        if filename:
            location.append(filename)
        if line is not None:
            location.append('line %i' % line)
        if column is not None:
            location.append('column %i' % column)
        if location:
            message = "%s (%s)" % (message, ', '.join(location))
        super(ParseError, self).__init__(message)


class ResourceError(ChopbenchError):

    """Raised when a computation would exceed a configured resource limit."""

    exit_code = 4


class BoundTooSmallError(ResourceError):

    """
    Raised by :func:`~chopbench.automata.unary_slice()` when the bound is too small.

    The slice construction never guesses: when no threshold/period pair fits
    within the bound this exception is raised instead of a wrong answer.
    """

    exit_code = 4

    def __init__(self, letter, bound):
        """
        Initialize a :class:`BoundTooSmallError` object.

        :param letter: The letter of the unary slice (a string).
        :param bound: The bound that turned out to be too small (an integer).
        """
        self.letter = letter
        self.bound = bound
        super(BoundTooSmallError, self).__init__(compact("""
            No threshold/period pair (t, c) with t + c <= {bound} is
            consistent with the membership of {letter}^0 .. {letter}^{window}
            (try a larger slice bound).
        """, bound=bound, letter=letter, window=3 * bound))


class DisagreementError(ChopbenchError):

    """
    Raised when an experiment contradicts the claim it was meant to reproduce.

    A separation experiment that finds a distinguishing formula at a claimed
    state, or FLC verdicts other than (true, false), indicates a bug in the
    checkers rather than a counterexample to the theory.
    """

    exit_code = 5

    def __init__(self, report):
        """
        Initialize a :class:`DisagreementError` object.

        :param report: The :class:`~chopbench.lab.ExperimentReport` that failed.
        """
        self.report = report
        super(DisagreementError, self).__init__(compact("""
            Experiment {name} contradicts its claim: {count} disagreement(s),
            FLC verdicts {verdicts}.
        """, name=report.experiment, count=len(report.disagreements),
             verdicts=report.flc_verdicts))
