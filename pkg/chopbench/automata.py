# chopbench: Model checking workbench for PDL over language classes and FLC.
#
# Author: The chopbench developers
# Last Change: October 16, 2026

"""
The :mod:`chopbench.automata` module contains acceptors for REG, VPL and CFL.

Three acceptor types are defined here: :class:`Nfa` (finite automata),
:class:`Pda` (pushdown automata accepting by final state) and :class:`Vpa`
(visibly pushdown automata, which additionally require an empty stack when
they accept). Pushdown automata don't have epsilon transitions: every
transition reads a letter. A transition ``(q, a, X, push, q')`` replaces the
topmost stack symbol ``X`` by the symbols in ``push`` (the last of which
becomes the new top), a transition ``(q, a, BOTTOM, push, q')`` only applies
to the empty stack and pushes ``push``.

The module level functions implement membership (:func:`nfa_accepts()` and
:func:`pda_accepts()`), :func:`determinize()`, the derivative construction
(:func:`derivative()`), closure under :func:`union()` and
:func:`intersect_regular()`, the unary slices used for pumping
(:func:`unary_slice()`) and the shape check for visibly pushdown automata
(:func:`vpa_validate()`). Emptiness is decided by
:func:`chopbench.pushdown.pda_empty()`.
"""

# Standard library modules.
import collections
import logging

# External dependencies.
from humanfriendly.text import compact, concatenate, pluralize
from property_manager import PropertyManager, cached_property, mutable_property, required_property

# Modules included in our package.
from chopbench.exceptions import BoundTooSmallError, InputError
from chopbench.utils import as_word

# Initialize a logger.
logger = logging.getLogger(__name__)

BOTTOM = u'⊥'
"""The bottom-of-stack marker used in the ``pop`` field of pushdown transitions."""

LANGUAGE_CLASSES = ('REG', 'VPL', 'CFL')
"""The supported language classes (a tuple of strings)."""

PdaTransition = collections.namedtuple('PdaTransition', 'source, letter, pop, push, target')
"""A transition of a pushdown automaton (a :func:`~collections.namedtuple()`)."""


class Acceptor(PropertyManager):

    """Properties and validation shared by all acceptors."""

    @required_property
    def states(self):
        """The states of the automaton (a tuple, in construction order)."""

    @required_property
    def alphabet(self):
        """The input alphabet (a :class:`frozenset` of letters)."""

    @required_property
    def initial(self):
        """The initial state."""

    @required_property
    def accepting(self):
        """The accepting states (a :class:`frozenset`)."""

    @mutable_property
    def name(self):
        """A name used in error messages and reports (a string)."""
        return self.__class__.__name__.lower()

    @cached_property
    def state_set(self):
        """The states as a :class:`frozenset` (for fast membership tests)."""
        return frozenset(self.states)

    def check_states(self):
        """Make sure the initial and accepting states are states."""
        if self.initial not in self.state_set:
            raise InputError("The initial state %r of %s is not a state!" % (self.initial, self.name))
        unknown = [q for q in self.accepting if q not in self.state_set]
        if unknown:
            raise InputError("Accepting state(s) of %s are not states: %s" % (self.name, concatenate(map(repr, unknown))))

    def check_word(self, word):
        """
        Normalize a word and make sure its letters are in the alphabet.

        :returns: A tuple of letters.
        :raises: :exc:`~chopbench.exceptions.InputError` on foreign letters.
        """
        word = as_word(word)
        for letter in word:
            if letter not in self.alphabet:
                raise InputError("Letter %r is not in the alphabet of %s!" % (letter, self.name))
        return word

    def check_letter(self, letter):
        """Make sure `letter` is in the alphabet."""
        if letter not in self.alphabet:
            raise InputError("Letter %r is not in the alphabet of %s!" % (letter, self.name))


def unique(values):
    """Remove duplicates from an iterable, preserving order (returns a tuple)."""
    seen = set()
    result = []
    for value in values:
        if value not in seen:
            seen.add(value)
            result.append(value)
    return tuple(result)


class Nfa(Acceptor):

    """A nondeterministic finite automaton."""

    language_class = 'REG'

    def __init__(self, states, alphabet, transitions, initial, accepting, **options):
        """
        Initialize an :class:`Nfa` object.

        :param states: An iterable of hashable states.
        :param alphabet: An iterable of letters.
        :param transitions: An iterable of ``(source, letter, target)`` tuples.
        :param initial: The initial state.
        :param accepting: An iterable of accepting states.
        :raises: :exc:`~chopbench.exceptions.InputError` when the
                 components are inconsistent.
        """
        super(Nfa, self).__init__(
            states=unique(states),
            alphabet=frozenset(alphabet),
            transitions=frozenset(tuple(t) for t in transitions),
            initial=initial,
            accepting=frozenset(accepting),
            **options
        )
        self.check_states()
        for source, letter, target in self.transitions:
            if source not in self.state_set or target not in self.state_set:
                raise InputError("Transition %r of %s has an unknown endpoint!" % ((source, letter, target), self.name))
            self.check_letter(letter)

    @required_property
    def transitions(self):
        """The transition relation (a :class:`frozenset` of ``(source, letter, target)`` tuples)."""

    @cached_property
    def successors(self):
        """A dictionary mapping ``(state, letter)`` tuples to :class:`frozenset` objects of successors."""
        mapping = collections.defaultdict(set)
        for source, letter, target in self.transitions:
            mapping[source, letter].add(target)
        return dict((key, frozenset(value)) for key, value in mapping.items())

    def step(self, states, letter):
        """Compute the successors of a set of states on a letter (a :class:`frozenset`)."""
        return frozenset(t for s in states for t in self.successors.get((s, letter), ()))

    def accepts(self, word):
        """Shortcut for :func:`nfa_accepts()`."""
        return nfa_accepts(self, word)

    @cached_property
    def is_deterministic(self):
        """:data:`True` when every state has exactly one successor per letter, :data:`False` otherwise."""
        return all(len(self.successors.get((q, a), ())) == 1 for q in self.states for a in self.alphabet)

    def to_pda(self):
        """Convert the automaton to an equivalent :class:`Pda` that never touches its stack."""
        return Pda(
            states=self.states,
            alphabet=self.alphabet,
            stack_alphabet=(),
            transitions=[(s, a, BOTTOM, (), t) for s, a, t in self.transitions],
            initial=self.initial,
            accepting=self.accepting,
            name=self.name,
        )


class Pda(Acceptor):

    """A pushdown automaton that accepts by final state."""

    language_class = 'CFL'
    requires_empty_stack = False

    def __init__(self, states, alphabet, transitions, initial, accepting, stack_alphabet=None, **options):
        """
        Initialize a :class:`Pda` object.

        :param states: An iterable of hashable states.
        :param alphabet: An iterable of letters.
        :param transitions: An iterable of ``(source, letter, pop, push, target)``
                            tuples where `pop` is a stack symbol or :data:`BOTTOM`
                            and `push` is a sequence of stack symbols (a string
                            is taken to be a sequence of one character symbols).
        :param initial: The initial state.
        :param accepting: An iterable of accepting states.
        :param stack_alphabet: An iterable of stack symbols (defaults to the
                               symbols used by `transitions`).
        :raises: :exc:`~chopbench.exceptions.InputError` when the
                 components are inconsistent.
        """
        normalized = []
        for source, letter, pop, push, target in transitions:
            normalized.append(PdaTransition(source, letter, pop, tuple(push), target))
        if stack_alphabet is None:
            symbols = set(s for t in normalized for s in t.push)
            symbols.update(t.pop for t in normalized if t.pop != BOTTOM)
            stack_alphabet = symbols
        super(Pda, self).__init__(
            states=unique(states),
            alphabet=frozenset(alphabet),
            stack_alphabet=frozenset(stack_alphabet),
            transitions=frozenset(normalized),
            initial=initial,
            accepting=frozenset(accepting),
            **options
        )
        self.check_states()
        if BOTTOM in self.stack_alphabet:
            raise InputError("The bottom marker can't be used as a stack symbol!")
        overlap = self.alphabet & self.stack_alphabet
        if overlap:
            raise InputError(compact("""
                The input and stack alphabets of {name} must be disjoint
                (shared: {shared})!
            """, name=self.name, shared=concatenate(sorted(map(str, overlap)))))
        for t in self.transitions:
            if t.source not in self.state_set or t.target not in self.state_set:
                raise InputError("Transition %r of %s has an unknown endpoint!" % (tuple(t), self.name))
            self.check_letter(t.letter)
            if t.pop != BOTTOM and t.pop not in self.stack_alphabet:
                raise InputError("Transition %r pops an unknown stack symbol!" % (tuple(t),))
            if any(s not in self.stack_alphabet for s in t.push):
                raise InputError("Transition %r pushes an unknown stack symbol!" % (tuple(t),))

    @required_property
    def stack_alphabet(self):
        """The stack alphabet (a :class:`frozenset`, never contains :data:`BOTTOM`)."""

    @required_property
    def transitions(self):
        """The transitions (a :class:`frozenset` of :data:`PdaTransition` tuples)."""

    @cached_property
    def moves(self):
        """A dictionary mapping ``(state, letter, pop)`` tuples to tuples of ``(push, target)`` tuples."""
        mapping = collections.defaultdict(list)
        for t in self.transitions:
            mapping[t.source, t.letter, t.pop].append((t.push, t.target))
        return dict((key, tuple(value)) for key, value in mapping.items())

    @cached_property
    def transitions_from(self):
        """A dictionary mapping states to lists of outgoing :data:`PdaTransition` tuples."""
        mapping = collections.defaultdict(list)
        for t in self.transitions:
            mapping[t.source].append(t)
        return dict(mapping)

    def accepts(self, word):
        """Shortcut for :func:`pda_accepts()`."""
        return pda_accepts(self, word)

    def to_pda(self):
        """Get an equivalent :class:`Pda` that accepts by final state (this is the identity)."""
        return self


class Vpa(Pda):

    """
    A visibly pushdown automaton.

    The input alphabet is partitioned into call, return and internal
    letters. A run only accepts when it ends in an accepting state *and*
    with an empty stack. The shape rules that tie the stack action to the
    letter class are checked by :func:`vpa_validate()` rather than by the
    initializer, so that malformed automata can be loaded and reported.
    """

    language_class = 'VPL'
    requires_empty_stack = True

    def __init__(self, states, alphabet, transitions, initial, accepting,
                 calls=(), returns=(), internals=(), **options):
        """
        Initialize a :class:`Vpa` object.

        :param calls: An iterable of call letters.
        :param returns: An iterable of return letters.
        :param internals: An iterable of internal letters.

        The remaining arguments are the same as for :class:`Pda`.
        """
        super(Vpa, self).__init__(
            states=states,
            alphabet=alphabet,
            transitions=transitions,
            initial=initial,
            accepting=accepting,
            calls=frozenset(calls),
            returns=frozenset(returns),
            internals=frozenset(internals),
            **options
        )

    @required_property
    def calls(self):
        """The call letters (a :class:`frozenset`)."""

    @required_property
    def returns(self):
        """The return letters (a :class:`frozenset`)."""

    @required_property
    def internals(self):
        """The internal letters (a :class:`frozenset`)."""

    def to_pda(self):
        """
        Convert empty-stack acceptance into final-state acceptance.

        :returns: A :class:`Pda` accepting the same language.

        The states of the result are pairs ``(q, empty)`` where `empty`
        tells whether the stack is empty and the stack symbols are pairs
        ``(X, lowest)`` where `lowest` marks the symbol at the bottom of the
        stack, so popping it is known to empty the stack. A state ``(q,
        True)`` is accepting when `q` is.
        """
        transitions = []
        for t in self.transitions:
            if t.pop == BOTTOM:
                if t.push:
                    push = ((t.push[0], True),) + tuple((s, False) for s in t.push[1:])
                    transitions.append(((t.source, True), t.letter, BOTTOM, push, (t.target, False)))
                else:
                    transitions.append(((t.source, True), t.letter, BOTTOM, (), (t.target, True)))
            else:
                for lowest in (True, False):
                    if t.push:
                        push = ((t.push[0], lowest),) + tuple((s, False) for s in t.push[1:])
                        target = (t.target, False)
                    else:
                        push = ()
                        target = (t.target, lowest)
                    transitions.append(((t.source, False), t.letter, (t.pop, lowest), push, target))
        return Pda(
            states=[(q, flag) for q in self.states for flag in (True, False)],
            alphabet=self.alphabet,
            stack_alphabet=[(s, flag) for s in self.stack_alphabet for flag in (True, False)],
            transitions=transitions,
            initial=(self.initial, True),
            accepting=[(q, True) for q in self.accepting],
            name=self.name,
        )


class LanguageRef(PropertyManager):

    """A named language together with its class tag and acceptor."""

    def __init__(self, name, acceptor, language_class=None, **options):
        """
        Initialize a :class:`LanguageRef` object.

        :param name: The name of the language (a string).
        :param acceptor: An :class:`Nfa`, :class:`Pda` or :class:`Vpa` object.
        :param language_class: One of the strings in :data:`LANGUAGE_CLASSES`
                               (defaults to the class implied by the acceptor).
        :raises: :exc:`~chopbench.exceptions.InputError` when the class tag
                 doesn't match the acceptor.
        """
        if not name:
            raise InputError("Please provide a nonempty language name!")
        language_class = (language_class or acceptor.language_class).upper()
        if language_class not in LANGUAGE_CLASSES:
            raise InputError("Unknown language class %r! (expected one of %s)"
                             % (language_class, concatenate(LANGUAGE_CLASSES)))
        expected = dict(REG=(Nfa,), VPL=(Vpa,), CFL=(Pda,))[language_class]
        if not isinstance(acceptor, expected):
            raise InputError(compact("""
                Language {name} is tagged {tag} but its acceptor is a
                {kind} (expected {expected})!
            """, name=name, tag=language_class, kind=type(acceptor).__name__,
                 expected=' or '.join(c.__name__ for c in expected)))
        super(LanguageRef, self).__init__(name=name, acceptor=acceptor, language_class=language_class, **options)

    @required_property
    def name(self):
        """The name of the language (a string)."""

    @required_property
    def acceptor(self):
        """The acceptor of the language (an :class:`Nfa`, :class:`Pda` or :class:`Vpa`)."""

    @required_property
    def language_class(self):
        """The class tag (one of the strings in :data:`LANGUAGE_CLASSES`)."""

    @property
    def alphabet(self):
        """The alphabet of the acceptor."""
        return self.acceptor.alphabet

    @cached_property
    def pda(self):
        """The acceptor converted to a final-state :class:`Pda` (see :func:`as_pda()`)."""
        return as_pda(self.acceptor)

    def accepts(self, word):
        """Check whether `word` is a member of the language."""
        return self.acceptor.accepts(word)


def as_pda(acceptor):
    """
    Convert any acceptor to a :class:`Pda` that accepts by final state.

    :param acceptor: An :class:`Nfa`, :class:`Pda` or :class:`Vpa` object.
    :returns: A :class:`Pda` object (plain pushdown automata are returned as is).
    """
    return acceptor.to_pda()


def nfa_accepts(nfa, word):
    """
    Check whether a finite automaton accepts a word.

    :param nfa: An :class:`Nfa` object.
    :param word: The word (see :func:`~chopbench.utils.as_word()`).
    :returns: :data:`True` when an accepting run exists, :data:`False` otherwise.
    :raises: :exc:`~chopbench.exceptions.InputError` on foreign letters.
    """
    current = frozenset([nfa.initial])
    for letter in nfa.check_word(word):
        current = nfa.step(current, letter)
        if not current:
            return False
    return bool(current & nfa.accepting)


def determinize(nfa):
    """
    Apply the subset construction.

    :param nfa: An :class:`Nfa` object.
    :returns: A deterministic and complete :class:`Nfa` whose states are
              :class:`frozenset` objects of states of `nfa` (only subsets
              reachable from the initial subset are created).
    """
    letters = sorted(nfa.alphabet)
    start = frozenset([nfa.initial])
    states = [start]
    seen = set(states)
    transitions = []
    pending = collections.deque(states)
    while pending:
        subset = pending.popleft()
        for letter in letters:
            target = nfa.step(subset, letter)
            transitions.append((subset, letter, target))
            if target not in seen:
                seen.add(target)
                states.append(target)
                pending.append(target)
    logger.debug("Determinized %s: %s became %s.", nfa.name,
                 pluralize(len(nfa.states), "state"), pluralize(len(states), "state"))
    return Nfa(
        states=states,
        alphabet=nfa.alphabet,
        transitions=transitions,
        initial=start,
        accepting=[s for s in states if s & nfa.accepting],
        name='det(%s)' % nfa.name,
    )


def simulate(pda, word, horizon=None):
    """
    Compute the configurations a pushdown automaton can reach on a word.

    :param pda: A :class:`Pda` or :class:`Vpa` object.
    :param word: A tuple of letters.
    :param horizon: The length of the longest word whose acceptance matters
                    (defaults to the length of `word`). For automata that
                    accept with an empty stack, configurations whose stack
                    can't be emptied within the horizon are pruned (every
                    step removes at most one symbol).
    :returns: A generator of :class:`set` objects with ``(state, stack)``
              tuples, one before reading anything and one after each letter.
    """
    horizon = len(word) if horizon is None else horizon
    configurations = set([(pda.initial, ())])
    yield configurations
    for position, letter in enumerate(word, start=1):
        successors = set()
        for state, stack in configurations:
            top = stack[-1] if stack else BOTTOM
            for push, target in pda.moves.get((state, letter, top), ()):
                new_stack = stack[:-1] + push
                if pda.requires_empty_stack and len(new_stack) > horizon - position:
                    continue
                successors.add((target, new_stack))
        configurations = successors
        yield configurations


def is_accepting_configuration(pda, configuration):
    """Check whether a ``(state, stack)`` configuration is accepting."""
    state, stack = configuration
    return state in pda.accepting and not (pda.requires_empty_stack and stack)


def pda_accepts(pda, word):
    """
    Check whether a pushdown automaton accepts a word.

    :param pda: A :class:`Pda` or :class:`Vpa` object (the latter only
                accept with an empty stack).
    :param word: The word (see :func:`~chopbench.utils.as_word()`).
    :returns: :data:`True` when an accepting run exists, :data:`False` otherwise.
    :raises: :exc:`~chopbench.exceptions.InputError` on foreign letters.

    Because every transition reads a letter, the configurations reachable
    on a word form a finite set, which is computed letter by letter.
    """
    word = pda.check_word(word)
    configurations = set()
    for configurations in simulate(pda, word):
        if not configurations:
            return False
    return any(is_accepting_configuration(pda, c) for c in configurations)


def unary_memberships(pda, letter, max_power):
    """
    Decide the membership of ``letter^0 .. letter^max_power`` in one pass.

    :returns: A list of booleans (index n is the membership of ``letter^n``).
    """
    result = []
    for configurations in simulate(pda, (letter,) * max_power):
        result.append(any(is_accepting_configuration(pda, c) for c in configurations))
    result.extend([False] * (max_power + 1 - len(result)))
    return result


def empty_pda(alphabet, name='empty'):
    """Create a :class:`Pda` that accepts nothing."""
    return Pda(states=['q0'], alphabet=alphabet, transitions=[], initial='q0', accepting=[],
               stack_alphabet=[], name=name)


def first_step_automaton(pda, first):
    """
    Build the automaton that continues a run of `pda` after its first transition.

    :param pda: A :class:`Pda` accepting by final state.
    :param first: The :data:`PdaTransition` taken on the first letter (it
                  leaves the initial state and sees the empty stack).
    :returns: A :class:`Pda` accepting ``{w | pda has a run over aw that starts with first}``.

    After `first` the automaton is in state ``q`` with stack ``push``. The
    result gets a fresh initial state with an empty stack whose transitions
    behave like the transitions of ``q`` on that stack: when ``push`` is
    empty they are copies of the bottom transitions of ``q``, otherwise
    every transition of ``q`` that pops the top ``Y`` of ``push`` becomes a
    bottom transition that pushes the rest of ``push`` followed by its own
    push string.
    """
    start = ('start',)
    transitions = [(('q', t.source), t.letter, t.pop, t.push, ('q', t.target)) for t in pda.transitions]
    if first.push:
        rest, top = first.push[:-1], first.push[-1]
        for t in pda.transitions_from.get(first.target, ()):
            if t.pop == top:
                transitions.append((start, t.letter, BOTTOM, rest + t.push, ('q', t.target)))
    else:
        for t in pda.transitions_from.get(first.target, ()):
            if t.pop == BOTTOM:
                transitions.append((start, t.letter, BOTTOM, t.push, ('q', t.target)))
    accepting = [('q', q) for q in pda.accepting]
    if first.target in pda.accepting:
        accepting.append(start)
    return Pda(
        states=[start] + [('q', q) for q in pda.states],
        alphabet=pda.alphabet,
        stack_alphabet=pda.stack_alphabet,
        transitions=transitions,
        initial=start,
        accepting=accepting,
    )


def derivative(pda, letter):
    """
    Compute the derivative of a context-free language with respect to a letter.

    :param pda: An :class:`Nfa`, :class:`Pda` or :class:`Vpa` object.
    :param letter: A letter of the alphabet.
    :returns: A :class:`Pda` accepting ``{w | letter + w in L(pda)}``.
    :raises: :exc:`~chopbench.exceptions.InputError` when `letter` is not
             in the alphabet.

    The result is the union of one automaton per possible first
    transition (see :func:`first_step_automaton()`). When no transition
    leaves the initial state on `letter` the result accepts nothing.
    """
    base = as_pda(pda)
    base.check_letter(letter)
    firsts = sorted((t for t in base.transitions
                     if t.source == base.initial and t.letter == letter and t.pop == BOTTOM), key=repr)
    logger.debug("Derivative of %s by %s: %s.", base.name, letter, pluralize(len(firsts), "first transition"))
    components = [first_step_automaton(base, t) for t in firsts]
    if not components:
        result = empty_pda(base.alphabet)
    elif len(components) == 1:
        result = components[0]
    else:
        result = union(*components)
    result.name = 'd%s(%s)' % (letter, base.name)
    return result


def union(first, second, *others):
    """
    Build a pushdown automaton for the union of two or more languages.

    :param first: An :class:`Nfa`, :class:`Pda` or :class:`Vpa` object.
    :param second: Another acceptor over the same alphabet.
    :param others: Any further acceptors over the same alphabet.
    :returns: A :class:`Pda` whose states are ``(index, state)`` tuples plus
              a fresh initial state that copies the bottom transitions of
              the initial states of all components.
    :raises: :exc:`~chopbench.exceptions.InputError` when the alphabets differ.
    """
    components = [as_pda(p) for p in (first, second) + others]
    alphabet = components[0].alphabet
    for component in components[1:]:
        if component.alphabet != alphabet:
            raise InputError(compact("""
                Can't build the union of {a} and {b} because their alphabets differ!
            """, a=components[0].name, b=component.name))
    start = ('union',)
    states = [start]
    transitions = []
    accepting = []
    stack_alphabet = set()
    for index, component in enumerate(components):
        states.extend((index, q) for q in component.states)
        accepting.extend((index, q) for q in component.accepting)
        # Stack symbols are tagged too, so that components can't interfere.
        stack_alphabet.update((index, s) for s in component.stack_alphabet)
        for t in component.transitions:
            pop = t.pop if t.pop == BOTTOM else (index, t.pop)
            push = tuple((index, s) for s in t.push)
            transitions.append(((index, t.source), t.letter, pop, push, (index, t.target)))
            if t.source == component.initial and t.pop == BOTTOM:
                transitions.append((start, t.letter, BOTTOM, push, (index, t.target)))
        if component.initial in component.accepting:
            accepting.append(start)
    return Pda(
        states=states,
        alphabet=alphabet,
        stack_alphabet=stack_alphabet,
        transitions=transitions,
        initial=start,
        accepting=accepting,
        name=' | '.join(c.name for c in components),
    )


def intersect_regular(pda, nfa):
    """
    Intersect a pushdown language with a regular language.

    :param pda: An :class:`Nfa`, :class:`Pda` or :class:`Vpa` object.
    :param nfa: An :class:`Nfa` over the same alphabet.
    :returns: A :class:`Pda` whose states are the ``(pda state, nfa state)``
              pairs reachable in the control graph of the product.
    :raises: :exc:`~chopbench.exceptions.InputError` when the alphabets differ.
    """
    base = as_pda(pda)
    if base.alphabet != nfa.alphabet:
        raise InputError(compact("""
            Can't intersect {pda} with {nfa} because their alphabets differ!
        """, pda=base.name, nfa=nfa.name))
    start = (base.initial, nfa.initial)
    states = [start]
    seen = set(states)
    transitions = []
    pending = collections.deque(states)
    while pending:
        q, r = pending.popleft()
        for t in base.transitions_from.get(q, ()):
            for r2 in nfa.successors.get((r, t.letter), ()):
                target = (t.target, r2)
                transitions.append(((q, r), t.letter, t.pop, t.push, target))
                if target not in seen:
                    seen.add(target)
                    states.append(target)
                    pending.append(target)
    return Pda(
        states=states,
        alphabet=base.alphabet,
        stack_alphabet=base.stack_alphabet,
        transitions=transitions,
        initial=start,
        accepting=[(q, r) for q, r in states if q in base.accepting and r in nfa.accepting],
        name='%s & %s' % (base.name, nfa.name),
    )


def letter_universe(alphabet, letter):
    """Create an :class:`Nfa` over `alphabet` that accepts exactly the words ``letter^n``."""
    return Nfa(states=['u'], alphabet=alphabet, transitions=[('u', letter, 'u')],
               initial='u', accepting=['u'], name='%s*' % letter)


def lasso_nfa(letter, memberships, threshold, period):
    """
    Build the lasso automaton for an ultimately periodic unary language.

    :param letter: The only letter of the automaton.
    :param memberships: The membership of ``letter^n`` for at least
                        ``threshold + period`` values of n.
    :param threshold: Where the cycle starts (a nonnegative integer).
    :param period: The length of the cycle (a positive integer).
    :returns: An :class:`Nfa` with states ``0 .. threshold + period - 1``.
    """
    size = threshold + period
    transitions = [(i, letter, i + 1) for i in range(size - 1)]
    transitions.append((size - 1, letter, threshold))
    return Nfa(
        states=range(size),
        alphabet=[letter],
        transitions=transitions,
        initial=0,
        accepting=[i for i in range(size) if memberships[i]],
    )


def unary_slice(pda, letter, bound):
    """
    Compute an automaton for the words of a language that only use one letter.

    :param pda: An :class:`Nfa`, :class:`Pda` or :class:`Vpa` object.
    :param letter: A letter of the alphabet.
    :param bound: The largest acceptable threshold plus period (a positive integer).
    :returns: An :class:`Nfa` over ``{letter}`` accepting ``{letter^n | letter^n in L(pda)}``.
    :raises: :exc:`~chopbench.exceptions.BoundTooSmallError` when no
             threshold/period pair within `bound` explains the membership of
             ``letter^0 .. letter^(3 * bound)``.

    The language is intersected with ``letter*``, the membership of the
    powers of `letter` is decided up to ``3 * bound`` and the smallest period
    (and then the smallest threshold) consistent with the whole window is
    selected.
    """
    if bound < 1:
        raise InputError("Please provide a positive slice bound!")
    acceptor = pda if isinstance(pda, (Pda, Nfa)) else pda.acceptor
    acceptor.check_letter(letter)
    product = intersect_regular(acceptor, letter_universe(acceptor.alphabet, letter))
    window = 3 * bound
    memberships = unary_memberships(product, letter, window)
    for period in range(1, bound + 1):
        for threshold in range(0, bound - period + 1):
            if all(memberships[n] == memberships[n + period] for n in range(threshold, window - period + 1)):
                logger.debug("Slice of %s at %s: threshold %i, period %i.", acceptor.name, letter, threshold, period)
                result = lasso_nfa(letter, memberships, threshold, period)
                result.name = '%s & %s*' % (acceptor.name, letter)
                return result
    raise BoundTooSmallError(letter, bound)


def vpa_validate(vpa):
    """
    Check the shape rules of a visibly pushdown automaton.

    :param vpa: A :class:`Vpa` object.
    :returns: :data:`True` when the call, return and internal letters
              partition the alphabet and every transition obeys the rule of
              its letter, :data:`False` otherwise.

    With a topmost symbol ``X`` a call replaces ``X`` by two symbols (it
    pushes one), a return replaces ``X`` by nothing and an internal letter
    replaces ``X`` by one symbol. On the empty stack a call pushes one
    symbol, an internal letter pushes nothing and a return isn't allowed.
    """
    if not isinstance(vpa, Vpa):
        return False
    classes = (vpa.calls, vpa.returns, vpa.internals)
    if (vpa.calls & vpa.returns) or (vpa.calls & vpa.internals) or (vpa.returns & vpa.internals):
        logger.debug("The letter classes of %s overlap.", vpa.name)
        return False
    if frozenset().union(*classes) != vpa.alphabet:
        logger.debug("The letter classes of %s don't cover the alphabet.", vpa.name)
        return False
    for t in vpa.transitions:
        on_bottom = (t.pop == BOTTOM)
        if t.letter in vpa.calls:
            valid = len(t.push) == (1 if on_bottom else 2)
        elif t.letter in vpa.returns:
            valid = not on_bottom and not t.push
        else:
            valid = len(t.push) == (0 if on_bottom else 1)
        if not valid:
            logger.debug("Transition %r of %s violates the shape rules.", tuple(t), vpa.name)
            return False
    return True
