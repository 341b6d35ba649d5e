# chopbench: Model checking workbench for PDL over language classes and FLC.
#
# Author: The chopbench developers
# Last Change: October 16, 2026

"""
The :mod:`chopbench.pdl` module implements PDL whose modalities are indexed by languages.

Formulas are trees of :class:`Prop`, :class:`Not`, :class:`Or`,
:class:`And`, :class:`Diamond` and :class:`Box` nodes. Modalities refer to
languages by name; the names are resolved against a table of
:class:`~chopbench.automata.LanguageRef` objects when a formula is
evaluated by a :class:`PdlChecker`.

Conjunction is interpreted as intersection. (Reading it as union would
make ``&`` and ``|`` coincide and collapse ``tt`` and ``ff``.)
"""

# Standard library modules.
import collections
import logging

# External dependencies.
from humanfriendly.text import compact, concatenate
from property_manager import PropertyManager, cached_property, required_property

# Modules included in our package.
from chopbench.automata import Nfa
from chopbench.exceptions import InputError
from chopbench.pushdown import PushdownReachability
from chopbench.utils import Node

# Initialize a logger.
logger = logging.getLogger(__name__)

TRUTH_PROPOSITION = 'tt'
"""The reserved proposition used to express ``tt`` and ``ff`` (a string)."""

DEPTH_MEASURES = ('strict', 'modal')
"""
The supported modal depth measures (a tuple of strings).

``strict`` counts negations like modalities, ``modal`` only counts diamonds
and boxes.
"""


class Prop(Node, collections.namedtuple('Prop', 'name')):
    """A proposition."""

    __slots__ = ()


class Not(Node, collections.namedtuple('Not', 'child')):
    """A negation."""

    __slots__ = ()


class Or(Node, collections.namedtuple('Or', 'left, right')):
    """A disjunction."""

    __slots__ = ()


class And(Node, collections.namedtuple('And', 'left, right')):
    """A conjunction."""

    __slots__ = ()


class Diamond(Node, collections.namedtuple('Diamond', 'language, child')):
    """``<L>child``: some word of the language leads to a state satisfying `child`."""

    __slots__ = ()


class Box(Node, collections.namedtuple('Box', 'language, child')):
    """``[L]child``: every word of the language leads to states satisfying `child`."""

    __slots__ = ()


TT = Or(Prop(TRUTH_PROPOSITION), Not(Prop(TRUTH_PROPOSITION)))
"""The formula ``tt``, expressed as ``q | ~q`` over :data:`TRUTH_PROPOSITION`."""

FF = And(Prop(TRUTH_PROPOSITION), Not(Prop(TRUTH_PROPOSITION)))
"""The formula ``ff``, expressed as ``q & ~q`` over :data:`TRUTH_PROPOSITION`."""


def format_pdl(formula):
    """
    Render a formula in the PDL text syntax.

    :param formula: A PDL formula.
    :returns: A string that :func:`chopbench.formats.parse_pdl()` maps back to `formula`.
    """
    if formula == TT:
        return 'tt'
    if formula == FF:
        return 'ff'
    if isinstance(formula, Prop):
        return formula.name
    if isinstance(formula, Not):
        return '~' + format_pdl(formula.child)
    if isinstance(formula, Or):
        return '(%s | %s)' % (format_pdl(formula.left), format_pdl(formula.right))
    if isinstance(formula, And):
        return '(%s & %s)' % (format_pdl(formula.left), format_pdl(formula.right))
    if isinstance(formula, Diamond):
        return '<%s>%s' % (formula.language, format_pdl(formula.child))
    if isinstance(formula, Box):
        return '[%s]%s' % (formula.language, format_pdl(formula.child))
    raise InputError("Not a PDL formula: %r" % (formula,))


def children(formula):
    """Get the direct subformulas of a formula (a tuple)."""
    if isinstance(formula, Prop):
        return ()
    if isinstance(formula, (Or, And)):
        return (formula.left, formula.right)
    return (formula.child,)


def modal_depth(formula, measure='strict'):
    """
    Compute the modal depth of a formula.

    :param formula: A PDL formula.
    :param measure: One of the strings in :data:`DEPTH_MEASURES`. With
                    ``strict`` (the default) a negation adds one to the depth
                    of its operand, with ``modal`` it doesn't.
    :returns: A nonnegative integer.

    >>> from chopbench.pdl import Diamond, Not, Or, Prop, modal_depth
    >>> modal_depth(Prop('p'))
    0
    >>> modal_depth(Or(Diamond('L', Prop('p')), Prop('q')))
    1
    >>> modal_depth(Not(Diamond('L', Prop('p'))))
    2
    >>> modal_depth(Not(Diamond('L', Prop('p'))), measure='modal')
    1
    """
    if measure not in DEPTH_MEASURES:
        raise InputError("Unknown depth measure %r! (expected one of %s)" % (measure, concatenate(DEPTH_MEASURES)))
    if isinstance(formula, Prop):
        return 0
    if isinstance(formula, (Or, And)):
        return max(modal_depth(formula.left, measure), modal_depth(formula.right, measure))
    increment = 0 if (isinstance(formula, Not) and measure == 'modal') else 1
    return increment + modal_depth(formula.child, measure)


def modal_only_depth(formula):
    """Compute the modal depth without counting negations (see :func:`modal_depth()`)."""
    return modal_depth(formula, measure='modal')


def formula_size(formula):
    """Count the nodes of a formula (a modality and its operand count as two nodes)."""
    return 1 + sum(formula_size(c) for c in children(formula))


def language_names(formula):
    """Collect the names of the languages used in a formula (a :class:`set`)."""
    names = set()
    if isinstance(formula, (Diamond, Box)):
        names.add(formula.language)
    for child in children(formula):
        names.update(language_names(child))
    return names


def check_languages(formula, languages):
    """
    Make sure the languages used in a formula exist and share an alphabet.

    :param formula: A PDL formula.
    :param languages: A dictionary mapping names to :class:`~chopbench.automata.LanguageRef` objects.
    :raises: :exc:`~chopbench.exceptions.InputError` on dangling names or
             differing alphabets.
    """
    names = sorted(language_names(formula))
    dangling = [n for n in names if n not in languages]
    if dangling:
        raise InputError("Unknown language name(s) in formula: %s" % concatenate(dangling))
    alphabets = set(languages[n].alphabet for n in names)
    if len(alphabets) > 1:
        raise InputError(compact("""
            The languages {names} used in a single formula must share
            their alphabet!
        """, names=concatenate(names)))


def regular_reach_targets(nfa, lts, source):
    """Find the states reachable from `source` by a word accepted by `nfa` (product search)."""
    start = (nfa.initial, source)
    seen = set([start])
    pending = [start]
    letters = sorted(nfa.alphabet)
    while pending:
        q, s = pending.pop()
        for letter in letters:
            for q2 in nfa.successors.get((q, letter), ()):
                for s2 in lts.successors_of(s, letter):
                    if (q2, s2) not in seen:
                        seen.add((q2, s2))
                        pending.append((q2, s2))
    return frozenset(s for q, s in seen if q in nfa.accepting)


def reach_relation(lts, language):
    """
    Compute the pairs of states connected by a word of a language.

    :param lts: An :class:`~chopbench.lts.Lts` object.
    :param language: A :class:`~chopbench.automata.LanguageRef` or an acceptor.
    :returns: A :class:`frozenset` of ``(source, target)`` tuples.
    :raises: :exc:`~chopbench.exceptions.InputError` when the alphabet of
             the language isn't contained in the alphabet of `lts`.

    Regular languages are handled with a product search. Pushdown languages
    are handled by :class:`~chopbench.pushdown.PushdownReachability`, which
    computes pop summaries of the product once and then searches from every
    source state; a pair is included exactly when the intersection of the
    language with the paths from source to target is nonempty.
    """
    acceptor = getattr(language, 'acceptor', language)
    if not acceptor.alphabet <= lts.alphabet:
        raise InputError(compact("""
            The alphabet of {language} isn't contained in the alphabet of {lts}!
        """, language=acceptor.name, lts=lts.name))
    if isinstance(acceptor, Nfa):
        return frozenset((s, t) for s in lts.states for t in regular_reach_targets(acceptor, lts, s))
    return PushdownReachability(acceptor, lts).relation()


class PdlChecker(PropertyManager):

    """
    Evaluate PDL formulas on a fixed transition system.

    Reachability relations are cached per language name and results are
    memoized per subformula, so evaluating many formulas over the same
    languages (as the separation experiments do) is cheap. A checker is
    meant to be used by a single evaluation context.
    """

    @required_property
    def lts(self):
        """The :class:`~chopbench.lts.Lts` on which formulas are evaluated."""

    @required_property
    def languages(self):
        """A dictionary mapping language names to :class:`~chopbench.automata.LanguageRef` objects."""

    @cached_property
    def relations(self):
        """A dictionary mapping language names to dictionaries that map sources to :class:`frozenset` objects of targets."""
        return {}

    @cached_property
    def results(self):
        """A dictionary with memoized results (formulas mapped to :class:`frozenset` objects of states)."""
        return {}

    @cached_property
    def all_states(self):
        """The states of :attr:`lts` (a :class:`frozenset`)."""
        return frozenset(self.lts.states)

    def successors(self, name):
        """Get the reachability relation of a language as a dictionary of target sets."""
        if name not in self.relations:
            if name not in self.languages:
                raise InputError("Unknown language %r!" % (name,))
            logger.debug("Computing reachability relation of %s on %s ..", name, self.lts.name)
            mapping = collections.defaultdict(set)
            for source, target in reach_relation(self.lts, self.languages[name]):
                mapping[source].add(target)
            self.relations[name] = dict((s, frozenset(t)) for s, t in mapping.items())
        return self.relations[name]

    def evaluate(self, formula):
        """
        Compute the states that satisfy a formula.

        :param formula: A PDL formula.
        :returns: A :class:`frozenset` of states.
        :raises: :exc:`~chopbench.exceptions.InputError` on unknown
                 language names or differing alphabets.
        """
        if formula not in self.results:
            check_languages(formula, self.languages)
            self.results[formula] = self.compute(formula)
        return self.results[formula]

    def compute(self, formula):
        """Apply the semantic clause of the topmost operator of `formula`."""
        if isinstance(formula, Prop):
            return self.lts.satisfying(formula.name)
        if isinstance(formula, Not):
            return self.all_states - self.evaluate(formula.child)
        if isinstance(formula, Or):
            return self.evaluate(formula.left) | self.evaluate(formula.right)
        if isinstance(formula, And):
            return self.evaluate(formula.left) & self.evaluate(formula.right)
        if isinstance(formula, (Diamond, Box)):
            targets = self.evaluate(formula.child)
            relation = self.successors(formula.language)
            if isinstance(formula, Diamond):
                return frozenset(s for s in self.lts.states if relation.get(s, frozenset()) & targets)
            return frozenset(s for s in self.lts.states if relation.get(s, frozenset()) <= targets)
        raise InputError("Not a PDL formula: %r" % (formula,))

    def holds(self, state, formula):
        """Check whether `state` satisfies `formula`."""
        self.lts.check_state(state)
        return state in self.evaluate(formula)


def eval_pdl(lts, formula, languages):
    """
    Compute the states of a transition system that satisfy a formula.

    :param lts: An :class:`~chopbench.lts.Lts` object.
    :param formula: A PDL formula.
    :param languages: A dictionary mapping language names to
                      :class:`~chopbench.automata.LanguageRef` objects (or
                      anything with a ``languages`` attribute holding such a
                      dictionary, like a :class:`~chopbench.formats.Manifest`).
    :returns: A :class:`frozenset` of states.
    """
    languages = getattr(languages, 'languages', languages)
    return PdlChecker(lts=lts, languages=languages).evaluate(formula)


def enumerate_formulas(languages, propositions, depth, size_cap, depth_measure='strict'):
    """
    Enumerate formulas of bounded modal depth and size.

    :param languages: An iterable of language names (or
                      :class:`~chopbench.automata.LanguageRef` objects).
    :param propositions: An iterable of proposition names.
    :param depth: The maximum modal depth (an integer).
    :param size_cap: The maximum number of nodes (a positive integer).
    :param depth_measure: One of the strings in :data:`DEPTH_MEASURES`.
    :returns: A generator of formulas, ordered by size and then by a
              canonical generation order (so runs are reproducible).

    Conjunctions and disjunctions are only generated with their operands
    in canonical order and negations are never stacked directly, which
    removes logically redundant duplicates only.
    """
    if size_cap < 1:
        raise InputError("Please provide a size cap of at least 1!")
    names = sorted(set(getattr(n, 'name', n) for n in languages))
    layers = {}
    for size in range(1, size_cap + 1):
        if size == 1:
            candidates = [Prop(p) for p in sorted(set(propositions))]
        else:
            candidates = []
            for formula in layers[size - 1]:
                if not isinstance(formula, Not):
                    candidates.append(Not(formula))
                for name in names:
                    candidates.append(Diamond(name, formula))
                    candidates.append(Box(name, formula))
            for left_size in range(1, size - 1):
                right_size = size - 1 - left_size
                if left_size > right_size:
                    break
                for index, left in enumerate(layers[left_size]):
                    rights = layers[right_size][index:] if left_size == right_size else layers[right_size]
                    for right in rights:
                        candidates.append(And(left, right))
                        candidates.append(Or(left, right))
        layer = []
        for formula in candidates:
            if modal_depth(formula, depth_measure) <= depth:
                layer.append(formula)
                yield formula
        layers[size] = layer
