# chopbench: Model checking workbench for PDL over language classes and FLC.
#
# Author: The chopbench developers
# Last Change: October 16, 2026

"""The :mod:`chopbench.utils` module contains miscellaneous code."""

# Standard library modules.
import re

# External dependencies.
from humanfriendly import coerce_boolean
from humanfriendly.text import compact

# Modules included in our package.
from chopbench.exceptions import InputError

EMPTY_WORD_SYMBOL = u'ε'
"""The symbol used to render the empty word (a string)."""

TOKEN_PATTERN = re.compile(r'^[^\s#]+$')
"""Compiled regular expression that matches identifiers usable in the text formats."""


class Node(object):

    """
    Mixin for abstract syntax tree nodes based on :func:`~collections.namedtuple()`.

    Plain named tuples compare equal whenever their fields do, so two
    different node types with the same fields (for example a diamond and a
    box over the same letter) would be considered equal. This mixin makes
    the node type part of equality and hashing.
    """

    __slots__ = ()

    def __eq__(self, other):
        """Compare the node type and fields of two nodes."""
        return type(self) is type(other) and tuple(self) == tuple(other)

    def __ne__(self, other):
        """The inverse of :func:`__eq__()`."""
        return not self.__eq__(other)

    def __hash__(self):
        """Hash the node type together with the fields."""
        return hash((type(self).__name__,) + tuple(self))


def as_word(word):
    """
    Normalize a word to a tuple of letters.

    :param word: A string of one character letters, a sequence of letters
                 or a string of whitespace delimited letters.
    :returns: A tuple of strings.

    >>> from chopbench.utils import as_word
    >>> as_word('abb')
    ('a', 'b', 'b')
    >>> as_word('call ret')
    ('call', 'ret')
    >>> as_word('')
    ()
    """
    if isinstance(word, str):
        if any(c.isspace() for c in word):
            return tuple(word.split())
        return tuple(word)
    return tuple(word)


def format_word(word):
    """
    Render a word for human consumption.

    :param word: A sequence of letters.
    :returns: The letters joined together (space delimited when any letter
              is longer than one character) or ``ε`` for the empty word.
    """
    word = as_word(word)
    if not word:
        return EMPTY_WORD_SYMBOL
    if all(len(letter) == 1 for letter in word):
        return ''.join(word)
    return ' '.join(word)


def all_words(alphabet, max_length):
    """
    Generate all words over an alphabet up to a given length.

    :param alphabet: An iterable of letters.
    :param max_length: The maximum word length (an integer).
    :returns: A generator of tuples, shortest words first and words of the
              same length in lexicographic order.
    """
    letters = sorted(alphabet)
    layer = [()]
    for length in range(max_length + 1):
        for word in layer:
            yield word
        if length < max_length:
            layer = [word + (letter,) for word in layer for letter in letters]


def split_values(values):
    """
    Split comma and/or whitespace separated command line values.

    :param values: A string or a list of strings.
    :returns: A list of nonempty strings.

    >>> from chopbench.utils import split_values
    >>> split_values(['a,b', 'c'])
    ['a', 'b', 'c']
    """
    if isinstance(values, str):
        values = [values]
    tokens = []
    for value in values:
        tokens.extend(t for t in re.split(r'[\s,]+', value) if t)
    return tokens


def coerce_positive_integer(value, name, minimum=1):
    """
    Coerce a value to an integer of at least `minimum`.

    :param value: The value to coerce (a string or a number).
    :param name: A description of the value used in error messages.
    :param minimum: The smallest acceptable value (an integer, defaults to 1).
    :returns: An integer.
    :raises: :exc:`~chopbench.exceptions.InputError` when the value isn't
             an integer or is smaller than `minimum`.
    """
    try:
        number = int(value)
    except (TypeError, ValueError):
        raise InputError("Please provide an integer for the %s! (got %r)" % (name, value))
    if number < minimum:
        raise InputError(compact("""
            Please provide a {name} of at least {minimum}! (got {number})
        """, name=name, minimum=minimum, number=number))
    return number


def coerce_flag(value, name):
    """
    Coerce a configuration value to a boolean like :func:`humanfriendly.coerce_boolean()` does.

    :raises: :exc:`~chopbench.exceptions.InputError` when the value isn't
             recognized (`name` describes the option in the message).
    """
    try:
        return coerce_boolean(value)
    except ValueError:
        raise InputError("Please provide a boolean value for the %s! (got %r)" % (name, value))


def is_token(value):
    """Check whether :func:`str()` of the given value can be used as a token in the text formats."""
    return bool(TOKEN_PATTERN.match(str(value)))
