# chopbench: Model checking workbench for PDL over language classes and FLC.
#
# Author: The chopbench developers
# Last Change: October 16, 2026

"""
The :mod:`chopbench.lts` module contains finite labelled transition systems.

The :class:`Lts` class stores states, letter labelled edges and a
proposition labelling, and answers path queries (:func:`Lts.reach_by_word()`
and :func:`Lts.words_from()`). The functions :func:`make_chain_b()`,
:func:`make_witness_diabox()` and :func:`make_witness_an_b_an()` generate the
structure families used by the separation experiments in :mod:`chopbench.lab`.
Generated states are named ``<index>_<row>`` (for example ``0_4``) plus the
junction states ``u`` and ``dn`` so that reports can be read side by side
with drawings of the structures.
"""

# Standard library modules.
import logging

# External dependencies.
from humanfriendly.text import compact, pluralize
from property_manager import PropertyManager, cached_property, mutable_property, required_property

# Modules included in our package.
from chopbench.exceptions import InputError
from chopbench.utils import as_word

# Initialize a logger.
logger = logging.getLogger(__name__)

GOAL_PROPOSITION = 'p'
"""The proposition that marks the ends of the generated chains (a string)."""


class Lts(PropertyManager):

    """
    A finite labelled transition system.

    Values of this class are treated as immutable: the constructor
    normalizes and validates its arguments and the derived indexes are
    computed once (on demand) using :class:`~property_manager.cached_property`.
    """

    def __init__(self, states, transitions=(), labelling=None, initial=None, alphabet=None, **options):
        """
        Initialize an :class:`Lts` object.

        :param states: An iterable of hashable state ids (order is preserved,
                       duplicates are ignored).
        :param transitions: An iterable of ``(source, letter, target)`` tuples.
        :param labelling: A dictionary mapping states to iterables of
                          proposition names (states that are missing get the
                          empty set).
        :param initial: The initial state or :data:`None`.
        :param alphabet: An iterable of letters (defaults to the letters
                         that occur in `transitions`).
        :param options: Any keyword arguments are passed on to the
                        initializer of :class:`~property_manager.PropertyManager`.
        :raises: :exc:`~chopbench.exceptions.InputError` when the
                 arguments are inconsistent.
        """
        ordered = []
        seen = set()
        for state in states:
            if state not in seen:
                seen.add(state)
                ordered.append(state)
        transitions = frozenset(tuple(t) for t in transitions)
        labelling = labelling or {}
        if alphabet is None:
            alphabet = set(letter for _, letter, _ in transitions)
        super(Lts, self).__init__(
            states=tuple(ordered),
            transitions=transitions,
            labelling=dict((s, frozenset(labelling.get(s, ()))) for s in ordered),
            initial=initial,
            alphabet=frozenset(alphabet),
            **options
        )
        unknown_labelled = [s for s in labelling if s not in seen]
        if unknown_labelled:
            raise InputError("Labelling refers to unknown state(s): %s" % ', '.join(map(str, unknown_labelled)))
        for source, letter, target in transitions:
            if source not in seen or target not in seen:
                raise InputError(compact("""
                    Transition ({source}, {letter}, {target}) has an endpoint
                    that is not a state!
                """, source=source, letter=letter, target=target))
            if letter not in self.alphabet:
                raise InputError("Transition letter %r is not in the alphabet!" % (letter,))
        if initial is not None and initial not in seen:
            raise InputError("The initial state %r is not a state!" % (initial,))

    @required_property
    def states(self):
        """The states of the transition system (a tuple, in construction order)."""

    @required_property
    def transitions(self):
        """The edges of the transition system (a :class:`frozenset` of ``(source, letter, target)`` tuples)."""

    @required_property
    def labelling(self):
        """A dictionary mapping every state to a :class:`frozenset` of proposition names."""

    @required_property
    def alphabet(self):
        """The letters of the transition system (a :class:`frozenset` of strings)."""

    @mutable_property
    def initial(self):
        """The initial state (:data:`None` when no initial state was given)."""

    @mutable_property
    def name(self):
        """A name for the transition system used in reports and logging (a string)."""
        return 'lts'

    @cached_property
    def state_index(self):
        """A dictionary mapping states to their position in :attr:`states`."""
        return dict((state, index) for index, state in enumerate(self.states))

    @cached_property
    def successors(self):
        """A dictionary mapping ``(state, letter)`` tuples to :class:`frozenset` objects of successors."""
        mapping = {}
        for source, letter, target in self.transitions:
            mapping.setdefault((source, letter), set()).add(target)
        return dict((key, frozenset(value)) for key, value in mapping.items())

    @cached_property
    def propositions(self):
        """The propositions that hold somewhere in the transition system (a :class:`frozenset`)."""
        return frozenset(p for labels in self.labelling.values() for p in labels)

    def check_state(self, state):
        """
        Make sure the given value is a state of the transition system.

        :raises: :exc:`~chopbench.exceptions.InputError` when it isn't.
        """
        if state not in self.state_index:
            raise InputError("Unknown state %r in transition system %s!" % (state, self.name))

    def check_word(self, word):
        """
        Normalize a word and make sure its letters are in the alphabet.

        :param word: Any value accepted by :func:`~chopbench.utils.as_word()`.
        :returns: A tuple of letters.
        :raises: :exc:`~chopbench.exceptions.InputError` when a letter is
                 not in the alphabet.
        """
        word = as_word(word)
        for letter in word:
            if letter not in self.alphabet:
                raise InputError("Letter %r is not in the alphabet of %s!" % (letter, self.name))
        return word

    def successors_of(self, state, letter):
        """Get the `letter` successors of `state` (a :class:`frozenset`)."""
        return self.successors.get((state, letter), frozenset())

    def reach_by_word(self, state, word):
        """
        Find the states reachable from `state` by a path labelled `word`.

        :param state: The source state.
        :param word: The word to follow (see :func:`~chopbench.utils.as_word()`).
        :returns: A :class:`frozenset` of states (``{state}`` for the empty word).
        :raises: :exc:`~chopbench.exceptions.InputError` for unknown states or letters.
        """
        self.check_state(state)
        current = frozenset([state])
        for letter in self.check_word(word):
            current = frozenset(t for s in current for t in self.successors_of(s, letter))
            if not current:
                break
        return current

    def words_from(self, state, max_length):
        """
        Enumerate all paths starting in `state` up to a given length.

        :param state: The source state.
        :param max_length: The maximum path length (a nonnegative integer).
        :returns: A :class:`set` of ``(word, target)`` tuples where `word` is
                  a tuple of letters.
        :raises: :exc:`~chopbench.exceptions.InputError` for unknown states
                 or a negative length.
        """
        self.check_state(state)
        if max_length < 0:
            raise InputError("Please provide a nonnegative maximum length!")
        letters = sorted(self.alphabet)
        frontier = set([((), state)])
        result = set(frontier)
        for _ in range(max_length):
            frontier = set(
                (word + (letter,), target)
                for word, source in frontier
                for letter in letters
                for target in self.successors_of(source, letter)
            )
            if not frontier:
                break
            result.update(frontier)
        return result

    def satisfying(self, proposition):
        """Get the states labelled with `proposition` (a :class:`frozenset`)."""
        return frozenset(s for s in self.states if proposition in self.labelling[s])

    def sorted_states(self, states):
        """Sort states according to their position in :attr:`states` (returns a list)."""
        return sorted(states, key=self.state_index.__getitem__)

    def to_nfa(self, start, accept, alphabet=None):
        """
        Read the transition system as a finite automaton.

        :param start: The state used as initial state of the automaton.
        :param accept: The state (or an iterable of states) used as accepting state(s).
        :param alphabet: The alphabet of the automaton (defaults to :attr:`alphabet`).
                         Edges with letters outside of this alphabet are dropped.
        :returns: An :class:`~chopbench.automata.Nfa` object accepting the
                  labels of the paths from `start` to `accept`.
        """
        from chopbench.automata import Nfa
        self.check_state(start)
        accepting = [accept] if accept in self.state_index else list(accept)
        for state in accepting:
            self.check_state(state)
        alphabet = self.alphabet if alphabet is None else frozenset(alphabet)
        return Nfa(
            states=self.states,
            alphabet=alphabet,
            transitions=[t for t in self.transitions if t[1] in alphabet],
            initial=start,
            accepting=accepting,
        )

    def describe(self):
        """Summarize the size of the transition system (a string)."""
        return "%s (%s, %s)" % (self.name, pluralize(len(self.states), "state"),
                                pluralize(len(self.transitions), "transition"))


class LtsBuilder(object):

    """Incrementally collect the states, edges and labels of a generated :class:`Lts`."""

    def __init__(self):
        """Initialize an empty builder."""
        self.states = []
        self.transitions = []
        self.labelling = {}

    def add_state(self, state, *propositions):
        """Add a state (and optional propositions) unless it already exists."""
        if state not in self.labelling:
            self.states.append(state)
            self.labelling[state] = set()
        self.labelling[state].update(propositions)
        return state

    def add_edge(self, source, letter, target):
        """Add an edge between two (existing) states."""
        self.transitions.append((source, letter, target))

    def add_chain(self, head, row, length, letter, goal=True):
        """
        Add a chain ``length_row -letter-> ... -letter-> 0_row``.

        :param head: The state that gets an extra `letter` edge into the top
                     of the chain (:data:`None` to omit it).
        :param row: The row suffix used in the state names (a string).
        :param length: The number of edges inside the chain (an integer).
        :param letter: The edge label (a string).
        :param goal: :data:`True` to label the last state with the goal proposition.
        :returns: The name of the top of the chain.
        """
        names = ['%i_%s' % (i, row) for i in range(length, -1, -1)]
        for name in names:
            self.add_state(name)
        if goal:
            self.add_state(names[-1], GOAL_PROPOSITION)
        if head is not None:
            self.add_edge(head, letter, names[0])
        for source, target in zip(names, names[1:]):
            self.add_edge(source, letter, target)
        return names[0]

    def build(self, initial, alphabet, name):
        """Construct the :class:`Lts`."""
        lts = Lts(states=self.states, transitions=self.transitions, labelling=self.labelling,
                  initial=initial, alphabet=alphabet, name=name)
        logger.debug("Generated %s.", lts.describe())
        return lts


def make_chain_b(length, alphabet=None):
    """
    Generate the b-chain ``length -b-> ... -b-> 0`` with the goal proposition at 0.

    :param length: The number of edges (a nonnegative integer).
    :param alphabet: The alphabet of the structure (defaults to ``{b}``; the
                     separation experiments widen it to the alphabet of the
                     languages involved).
    :returns: An :class:`Lts` whose states are the integers ``0..length`` and
              whose initial state is `length`.
    """
    if length < 0:
        raise InputError("Please provide a nonnegative chain length!")
    return Lts(
        states=range(length, -1, -1),
        transitions=[(i + 1, 'b', i) for i in range(length)],
        labelling={0: [GOAL_PROPOSITION]},
        initial=length,
        alphabet=alphabet or ['b'],
        name='chain-%i' % length,
    )


def check_witness_parameters(m, k, d):
    """Validate the (m, k, d) parameters of the witness generators."""
    for name, value in (('m', m), ('k', k), ('d', d)):
        if not isinstance(value, int) or value < 1:
            raise InputError("Please provide a positive integer for %s! (got %r)" % (name, value))


def add_diabox_junction(builder, head, length, k):
    """Add ``head -a-> dn`` and the two b-branches of length `length` + 1 and `length` + `k` + 1."""
    builder.add_state('dn')
    builder.add_edge(head, 'a', 'dn')
    builder.add_chain('dn', '2', length, 'b')
    builder.add_chain('dn', '3', length + k, 'b')


def make_witness_diabox(m, k, d, cross_edge=False, alphabet=('a', 'b')):
    """
    Generate the pair of structures that separates ``<a^n>[b^n]`` from PDL over CFL.

    :param m: The pumping threshold (a positive integer).
    :param k: The pumping period (a positive integer).
    :param d: The modal depth (a positive integer).
    :param cross_edge: :data:`True` to add the edge from ``0_4`` to a copy of
                       the ``dn`` junction inside the first structure.
    :param alphabet: The alphabet of both structures.
    :returns: A tuple of two :class:`Lts` objects.

    With l = (m + k) * d the first structure reads ``a^(l+1)`` from its
    initial state ``l_4`` into ``u`` and then ``b^(l+1)`` into ``0_1``
    (labelled p). The second structure reads ``a^(l+1)`` from ``l_5`` into
    ``dn``, which branches into ``b^(l+1)`` (ending in ``0_2``) and
    ``b^(l+k+1)`` (ending in ``0_3``), both labelled p.
    """
    check_witness_parameters(m, k, d)
    length = (m + k) * d
    first = LtsBuilder()
    bottom = '0_4'
    top = first.add_chain(None, '4', length, 'a', goal=False)
    first.add_state('u')
    first.add_edge(bottom, 'a', 'u')
    first.add_chain('u', '1', length, 'b')
    if cross_edge:
        add_diabox_junction(first, bottom, length, k)
    second = LtsBuilder()
    second.add_chain(None, '5', length, 'a', goal=False)
    add_diabox_junction(second, '0_5', length, k)
    suffix = '-cross' if cross_edge else ''
    return (first.build(top, alphabet, 'diabox-t1%s' % suffix),
            second.build('%i_5' % length, alphabet, 'diabox-t2%s' % suffix))


def add_anban_junction(builder, head, length, k):
    """Add ``head -a-> dn``, two b-edges and the a-chains of length `length` and `length` + `k`."""
    builder.add_state('dn')
    builder.add_edge(head, 'a', 'dn')
    builder.add_chain(None, '2', length, 'a')
    builder.add_edge('dn', 'b', '%i_2' % length)
    builder.add_chain(None, '3', length + k, 'a')
    builder.add_edge('dn', 'b', '%i_3' % (length + k))


def make_witness_an_b_an(m, k, d, cross_edge=False, alphabet=('a', 'b')):
    """
    Generate the pair of structures that separates ``<a^n>[b]<a^n>`` from PDL over CFL.

    :param m: The pumping threshold (a positive integer).
    :param k: The pumping period (a positive integer).
    :param d: The modal depth (a positive integer).
    :param cross_edge: :data:`True` to add the edge from ``0_4`` to a copy of
                       the ``dn`` junction inside the first structure.
    :param alphabet: The alphabet of both structures.
    :returns: A tuple of two :class:`Lts` objects.

    With l = (m + k) * d the left a-chains have l - 1 edges, so that
    ``a^l`` leads from the initial state into ``u`` (respectively ``dn``).
    From ``u`` a single b-edge leads into an a-chain of length l, from
    ``dn`` two b-edges lead into a-chains of length l and l + k. The ends of
    these chains are labelled p.
    """
    check_witness_parameters(m, k, d)
    length = (m + k) * d
    first = LtsBuilder()
    top = first.add_chain(None, '4', length - 1, 'a', goal=False)
    first.add_state('u')
    first.add_edge('0_4', 'a', 'u')
    first.add_chain(None, '1', length, 'a')
    first.add_edge('u', 'b', '%i_1' % length)
    if cross_edge:
        add_anban_junction(first, '0_4', length, k)
    second = LtsBuilder()
    second.add_chain(None, '5', length - 1, 'a', goal=False)
    add_anban_junction(second, '0_5', length, k)
    suffix = '-cross' if cross_edge else ''
    return (first.build(top, alphabet, 'anban-t1%s' % suffix),
            second.build('%i_5' % (length - 1), alphabet, 'anban-t2%s' % suffix))
