# chopbench: Model checking workbench for PDL over language classes and FLC.
#
# Author: The chopbench developers
# Last Change: October 16, 2026

"""
The :mod:`chopbench.pumping` module computes joint pumping constants.

A simultaneous transition profile of a list of finite automata records,
for a word ``w``, which pairs of states of the same automaton are connected
by a run over ``w``. States are tagged with the position of their automaton
in the list, so a profile is a relation over the disjoint union of the
state sets. Enumerating the profiles of ``a, a^2, a^3, ...`` must repeat
eventually; the first repetition yields a threshold ``m`` and a period
``k`` such that ``a^l`` and ``a^(l+j*k)`` are accepted by the same automata
for all ``l >= m + k``.
"""

# Standard library modules.
import collections
import logging

# External dependencies.
from humanfriendly.text import compact

# Modules included in our package.
from chopbench.exceptions import ChopbenchError, InputError

# Initialize a logger.
logger = logging.getLogger(__name__)


class PumpingConstants(collections.namedtuple('PumpingConstants', 'm, k')):

    """A threshold `m` and a positive period `k` (a :func:`~collections.namedtuple()`)."""

    __slots__ = ()

    def __new__(cls, m, k):
        """Validate the constants."""
        if k < 1:
            raise InputError("The pumping period must be positive! (got %r)" % (k,))
        if m < 0:
            raise InputError("The pumping threshold can't be negative! (got %r)" % (m,))
        return super(PumpingConstants, cls).__new__(cls, m, k)

    def __str__(self):
        """Render the constants as ``m=.. k=..``."""
        return 'm=%i k=%i' % (self.m, self.k)


class TransitionProfile(collections.namedtuple('TransitionProfile', 'pairs, fingerprint')):

    """
    A simultaneous transition profile (a :func:`~collections.namedtuple()`).

    `pairs` is a :class:`frozenset` of ``((i, q), (i, q'))`` tuples and
    `fingerprint` identifies the list of automata the profile belongs to.
    Equality is plain set equality on the pairs (plus the fingerprint), so
    profiles can be used as dictionary keys.
    """

    __slots__ = ()

    @property
    def canonical(self):
        """The pairs as a sorted list (sorted on their :func:`repr()`)."""
        return sorted(self.pairs, key=repr)

    def compose(self, other):
        """Shortcut for :func:`compose()`."""
        return compose(self, other)

    def relation_of(self, index):
        """Get the pairs of the automaton at `index` with the tags removed (a :class:`frozenset`)."""
        return frozenset((q, r) for (i, q), (j, r) in self.pairs if i == index)


def fingerprint_of(automata):
    """Compute the fingerprint of a list of automata (a tuple of state tuples)."""
    return tuple(tuple(nfa.states) for nfa in automata)


def check_automata(automata, letter):
    """Make sure the automaton list is nonempty and every automaton knows `letter`."""
    automata = list(automata)
    if not automata:
        raise InputError("Please provide at least one automaton!")
    for nfa in automata:
        if letter not in nfa.alphabet:
            raise InputError("Letter %r is not in the alphabet of %s!" % (letter, nfa.name))
    return automata


def profile_of(automata, letter):
    """
    Compute the transition profile of a single letter.

    :param automata: A nonempty list of :class:`~chopbench.automata.Nfa` objects.
    :param letter: A letter shared by all automata.
    :returns: A :class:`TransitionProfile`.
    :raises: :exc:`~chopbench.exceptions.InputError` when the list is empty
             or an automaton doesn't know the letter.
    """
    automata = check_automata(automata, letter)
    pairs = frozenset(
        ((i, source), (i, target))
        for i, nfa in enumerate(automata)
        for source, a, target in nfa.transitions
        if a == letter
    )
    return TransitionProfile(pairs, fingerprint_of(automata))


def identity_profile(automata):
    """Compute the transition profile of the empty word (the identity relation)."""
    automata = list(automata)
    pairs = frozenset(((i, q), (i, q)) for i, nfa in enumerate(automata) for q in nfa.states)
    return TransitionProfile(pairs, fingerprint_of(automata))


def compose(first, second):
    """
    Compose two transition profiles (the profile of a concatenation).

    :param first: The profile of a word ``u``.
    :param second: The profile of a word ``v``.
    :returns: The profile of ``uv``.
    :raises: :exc:`~chopbench.exceptions.InputError` when the profiles
             belong to different automaton lists.
    """
    if first.fingerprint != second.fingerprint:
        raise InputError("Can't compose transition profiles of different automaton lists!")
    successors = collections.defaultdict(list)
    for source, target in second.pairs:
        successors[source].append(target)
    pairs = frozenset((source, target) for source, middle in first.pairs for target in successors.get(middle, ()))
    return TransitionProfile(pairs, first.fingerprint)


def profile_of_word(automata, word):
    """Compute the transition profile of a word by composing letter profiles."""
    profile = identity_profile(automata)
    for letter in word:
        profile = compose(profile, profile_of(automata, letter))
    return profile


def pumping_constants(automata, letter):
    """
    Find joint pumping constants for the unary languages of some automata.

    :param automata: A nonempty list of :class:`~chopbench.automata.Nfa` objects.
    :param letter: The letter to pump.
    :returns: A :class:`PumpingConstants` tuple where `m` is the first
              exponent whose profile reappears and `k` the distance to its
              reappearance.
    :raises: :exc:`~chopbench.exceptions.InputError` as :func:`profile_of()` does.
    """
    automata = check_automata(automata, letter)
    step = profile_of(automata, letter)
    # No more than 2^(sum |Q_i|^2) different profiles exist.
    limit = 2 ** sum(len(nfa.states) ** 2 for nfa in automata) + 1
    seen = {}
    profile = step
    exponent = 1
    while profile.pairs not in seen:
        if exponent > limit:
            raise ChopbenchError(compact("""
                Profile enumeration of {letter} didn't terminate within the
                bound of {limit} exponents!
            """, letter=letter, limit=limit))
        seen[profile.pairs] = exponent
        profile = compose(profile, step)
        exponent += 1
    constants = PumpingConstants(m=seen[profile.pairs], k=exponent - seen[profile.pairs])
    logger.debug("Pumping constants of %i automata at %s: %s.", len(automata), letter, constants)
    return constants


def verify_pumping(automata, letter, constants, l_max, j_max):
    """
    Check pumping constants against direct membership tests.

    :param automata: A nonempty list of :class:`~chopbench.automata.Nfa` objects.
    :param letter: The pumped letter.
    :param constants: A :class:`PumpingConstants` tuple (or any ``(m, k)`` pair).
    :param l_max: The largest exponent l to check.
    :param j_max: The largest number of extra periods j to check.
    :returns: :data:`True` when ``letter^l`` and ``letter^(l + j*k)`` have the
              same membership in every language for all ``m + k <= l <= l_max``
              and ``0 <= j <= j_max``, :data:`False` otherwise.
    """
    automata = check_automata(automata, letter)
    m, k = constants
    largest = l_max + j_max * k
    for nfa in automata:
        memberships = []
        current = frozenset([nfa.initial])
        for _ in range(largest + 1):
            memberships.append(bool(current & nfa.accepting))
            current = nfa.step(current, letter)
        for power in range(m + k, l_max + 1):
            for j in range(j_max + 1):
                if memberships[power] != memberships[power + j * k]:
                    logger.debug(compact("""
                        Pumping constants {c} fail for {name}: {a}^{l} and
                        {a}^{l2} differ.
                    """, c=PumpingConstants(m, k), name=nfa.name, a=letter, l=power, l2=power + j * k))
                    return False
    return True

