# chopbench: Model checking workbench for PDL over language classes and FLC.
#
# Author: The chopbench developers
# Last Change: October 16, 2026

"""
The :mod:`chopbench.flc` module implements Fixpoint Logic with Chop.

FLC formulas denote monotone predicate transformers: functions from sets of
states to sets of states. Sequential composition (chop, written ``;``) is
function composition, ``tau`` is the identity, modalities are the one step
transformers and ``mu`` / ``nu`` bind least and greatest fixpoints in the
pointwise ordered lattice of transformers. A state satisfies a closed
formula when it's contained in the image of the full state set.

Two evaluation strategies are available through :class:`FlcEvaluator`:

``tabulated``
  Every transformer is tabulated over all subsets of the state set and
  fixpoints are computed by iterating on complete tables. This is simple and
  obviously correct but exponential, so it refuses to run on transformation
  systems with more states than :attr:`FlcEvaluator.state_cap`.

``demand``
  Transformers are only evaluated on the arguments that are actually
  queried. Fixpoints are solved locally: the body is re-evaluated in rounds
  on the set of queried arguments until neither the values nor the set of
  arguments change. The results are the same as in the tabulated mode.

State sets are represented internally as integer bit masks indexed by the
position of a state in :attr:`Lts.states <chopbench.lts.Lts.states>`.
"""

# Standard library modules.
import collections
import logging
import os
import random

# External dependencies.
from humanfriendly.text import compact, concatenate, pluralize
from property_manager import PropertyManager, cached_property, mutable_property, required_property, set_property

# Modules included in our package.
from chopbench.exceptions import ChopbenchError, InputError, ResourceError
from chopbench.utils import Node

# Initialize a logger.
logger = logging.getLogger(__name__)

TRUTH_PROPOSITION = 'tt'
"""The reserved proposition used to express ``tt`` and ``ff`` (a string)."""

DEFAULT_STATE_CAP = 14
"""The default maximum number of states accepted by the tabulated mode (an integer)."""

STATE_CAP_VARIABLE = 'CHOPBENCH_FLC_STATE_CAP'
"""The environment variable that overrides :data:`DEFAULT_STATE_CAP` (a string)."""

EVALUATION_MODES = ('demand', 'tabulated')
"""The supported evaluation strategies (a tuple of strings)."""


class Atom(Node, collections.namedtuple('Atom', 'name')):
    """A proposition (a constant transformer)."""

    __slots__ = ()


class NegAtom(Node, collections.namedtuple('NegAtom', 'name')):
    """A negated proposition (a constant transformer)."""

    __slots__ = ()


class Var(Node, collections.namedtuple('Var', 'name')):
    """A fixpoint variable."""

    __slots__ = ()


class Tau(Node, collections.namedtuple('Tau', '')):
    """The identity transformer."""

    __slots__ = ()


class Diamond(Node, collections.namedtuple('Diamond', 'letter')):
    """The one step existential transformer ``<a>``."""

    __slots__ = ()


class Box(Node, collections.namedtuple('Box', 'letter')):
    """The one step universal transformer ``[a]``."""

    __slots__ = ()


class Or(Node, collections.namedtuple('Or', 'left, right')):
    """Pointwise union."""

    __slots__ = ()


class And(Node, collections.namedtuple('And', 'left, right')):
    """Pointwise intersection."""

    __slots__ = ()


class Mu(Node, collections.namedtuple('Mu', 'variable, body')):
    """The least fixpoint of `body` in `variable`."""

    __slots__ = ()


class Nu(Node, collections.namedtuple('Nu', 'variable, body')):
    """The greatest fixpoint of `body` in `variable`."""

    __slots__ = ()


class Chop(Node, collections.namedtuple('Chop', 'left, right')):
    """Sequential composition: `left` is applied to the result of `right`."""

    __slots__ = ()


TT = Or(Atom(TRUTH_PROPOSITION), NegAtom(TRUTH_PROPOSITION))
"""The formula ``tt``, expressed as ``q | !q`` over :data:`TRUTH_PROPOSITION`."""

FF = And(Atom(TRUTH_PROPOSITION), NegAtom(TRUTH_PROPOSITION))
"""The formula ``ff``, expressed as ``q & !q`` over :data:`TRUTH_PROPOSITION`."""


def chop(*formulas):
    """Combine one or more formulas with right associative chop."""
    result = formulas[-1]
    for formula in reversed(formulas[:-1]):
        result = Chop(formula, result)
    return result


def format_flc(formula):
    """
    Render a formula in the FLC text syntax.

    :param formula: An FLC formula.
    :returns: A string that :func:`chopbench.formats.parse_flc()` maps back to `formula`.

    >>> from chopbench.flc import Atom, Diamond, Mu, Or, Var, chop, format_flc
    >>> format_flc(chop(Mu('Z', Or(Diamond('a'), chop(Diamond('a'), Var('Z')))), Atom('p')))
    'mu Z . (<a> | <a> ; Z) ; p'
    """
    if formula == TT:
        return 'tt'
    if formula == FF:
        return 'ff'
    if isinstance(formula, (Atom, Var)):
        return formula.name
    if isinstance(formula, NegAtom):
        return '!' + formula.name
    if isinstance(formula, Tau):
        return 'tau'
    if isinstance(formula, Diamond):
        return '<%s>' % formula.letter
    if isinstance(formula, Box):
        return '[%s]' % formula.letter
    if isinstance(formula, Or):
        return '(%s | %s)' % (format_flc(formula.left), format_flc(formula.right))
    if isinstance(formula, And):
        return '(%s & %s)' % (format_flc(formula.left), format_flc(formula.right))
    if isinstance(formula, (Mu, Nu)):
        keyword = 'mu' if isinstance(formula, Mu) else 'nu'
        body = format_flc(formula.body)
        if isinstance(formula.body, Chop):
            body = '(%s)' % body
        return '%s %s . %s' % (keyword, formula.variable, body)
    if isinstance(formula, Chop):
        left = format_flc(formula.left)
        if isinstance(formula.left, Chop):
            left = '(%s)' % left
        return '%s ; %s' % (left, format_flc(formula.right))
    raise InputError("Not an FLC formula: %r" % (formula,))


def subformulas(formula):
    """Get the direct subformulas of a formula (a tuple)."""
    if isinstance(formula, (Or, And, Chop)):
        return (formula.left, formula.right)
    if isinstance(formula, (Mu, Nu)):
        return (formula.body,)
    return ()


def free_variables(formula):
    """Get the variables that occur free in a formula (a :class:`frozenset`)."""
    if isinstance(formula, Var):
        return frozenset([formula.name])
    if isinstance(formula, (Mu, Nu)):
        return free_variables(formula.body) - set([formula.variable])
    result = frozenset()
    for child in subformulas(formula):
        result |= free_variables(child)
    return result


def letters_of(formula):
    """Get the letters used by the modalities of a formula (a :class:`frozenset`)."""
    if isinstance(formula, (Diamond, Box)):
        return frozenset([formula.letter])
    result = frozenset()
    for child in subformulas(formula):
        result |= letters_of(child)
    return result


def default_state_cap():
    """Get the state cap of the tabulated mode, taking :data:`STATE_CAP_VARIABLE` into account."""
    value = os.environ.get(STATE_CAP_VARIABLE)
    if value:
        try:
            return int(value)
        except ValueError:
            raise InputError("Invalid value for $%s: %r (expected an integer)" % (STATE_CAP_VARIABLE, value))
    return DEFAULT_STATE_CAP


class StateSpace(object):

    """Bit mask encoding of the state set of an :class:`~chopbench.lts.Lts`."""

    def __init__(self, lts):
        """
        Initialize a :class:`StateSpace` object.

        :param lts: The :class:`~chopbench.lts.Lts` to encode.
        """
        self.lts = lts
        self.states = lts.states
        self.size = len(self.states)
        self.full = (1 << self.size) - 1
        self.fingerprint = (lts.name, self.states)
        self.successor_masks = {}
        for letter in lts.alphabet:
            self.successor_masks[letter] = [
                self.to_mask(lts.successors_of(state, letter)) for state in self.states
            ]
        self.proposition_masks = {}

    def to_mask(self, states):
        """Convert an iterable of states to a bit mask."""
        mask = 0
        for state in states:
            mask |= 1 << self.lts.state_index[state]
        return mask

    def from_mask(self, mask):
        """Convert a bit mask to a :class:`frozenset` of states."""
        return frozenset(state for index, state in enumerate(self.states) if mask >> index & 1)

    def proposition(self, name):
        """Get the bit mask of the states labelled with a proposition."""
        if name not in self.proposition_masks:
            self.proposition_masks[name] = self.to_mask(self.lts.satisfying(name))
        return self.proposition_masks[name]

    def diamond(self, letter, mask):
        """Get the states with a `letter` successor in `mask`."""
        result = 0
        for index, successors in enumerate(self.successor_masks.get(letter, ())):
            if successors & mask:
                result |= 1 << index
        return result

    def box(self, letter, mask):
        """Get the states whose `letter` successors are all in `mask`."""
        successor_masks = self.successor_masks.get(letter)
        if successor_masks is None:
            return self.full
        result = 0
        for index, successors in enumerate(successor_masks):
            if not successors & ~mask:
                result |= 1 << index
        return result


class PredicateTransformer(PropertyManager):

    """
    A function from sets of states to sets of states.

    Transformers are callable: they map an iterable of states to a
    :class:`frozenset` of states. The complete table over all subsets is
    available as :attr:`table`, subject to :attr:`state_cap`.
    """

    @required_property
    def space(self):
        """The :class:`StateSpace` of the transformer."""

    @required_property
    def function(self):
        """A callable that maps a bit mask to a bit mask."""

    @mutable_property
    def state_cap(self):
        """The maximum number of states for which :attr:`table` can be computed (an integer)."""
        return default_state_cap()

    @property
    def fingerprint(self):
        """The fingerprint of the state universe of the transformer."""
        return self.space.fingerprint

    @cached_property
    def table(self):
        """
        The complete table of the transformer.

        :returns: A tuple with the image of every subset, indexed by bit mask.
        :raises: :exc:`~chopbench.exceptions.ResourceError` when the state
                 space is larger than :attr:`state_cap`.
        """
        if self.space.size > self.state_cap:
            raise ResourceError(compact("""
                Refusing to tabulate a transformer over {states} (the state
                cap is {cap}, see ${variable})!
            """, states=pluralize(self.space.size, "state"), cap=self.state_cap, variable=STATE_CAP_VARIABLE))
        return tuple(self.function(mask) for mask in range(1 << self.space.size))

    def __call__(self, states):
        """Apply the transformer to an iterable of states (returns a :class:`frozenset`)."""
        return self.space.from_mask(self.function(self.space.to_mask(states)))

    def apply_mask(self, mask):
        """Apply the transformer to a bit mask (returns a bit mask)."""
        return self.function(mask)

    def sample_pairs(self, samples, seed):
        """Generate `samples` pairs of bit masks ``(smaller, larger)`` with ``smaller`` a subset of ``larger``."""
        generator = random.Random(seed)
        full = self.space.full
        yield 0, full
        for _ in range(samples - 1):
            larger = generator.getrandbits(self.space.size) if self.space.size else 0
            yield larger & generator.getrandbits(max(self.space.size, 1)) & full, larger

    def is_monotone(self, samples=200, seed=0):
        """
        Check monotonicity on sampled pairs of nested subsets.

        :param samples: The number of pairs to check (an integer).
        :param seed: The seed of the random number generator (so that a run
                     can be reproduced).
        :returns: :data:`True` when ``f(T)`` is a subset of ``f(T')`` for
                  every sampled pair with ``T`` a subset of ``T'``.
        """
        for smaller, larger in self.sample_pairs(samples, seed):
            if self.function(smaller) & ~self.function(larger):
                logger.debug("Transformer isn't monotone on %s and %s.",
                             sorted(self.space.from_mask(smaller)), sorted(self.space.from_mask(larger)))
                return False
        return True

    def is_below(self, other, samples=200, seed=0):
        """
        Check pointwise inclusion in another transformer on sampled subsets.

        :param other: A :class:`PredicateTransformer` over the same states.
        :param samples: The number of subsets to check (an integer).
        :param seed: The seed of the random number generator.
        :returns: :data:`True` when ``self(T)`` is a subset of ``other(T)``
                  for every sampled subset ``T``.
        """
        if other.fingerprint != self.fingerprint:
            raise InputError("Can't compare transformers over different state sets!")
        for smaller, larger in self.sample_pairs(samples, seed):
            for mask in (smaller, larger):
                if self.function(mask) & ~other.function(mask):
                    return False
        return True


class Environment(dict):

    """
    A mapping of variable names to :class:`PredicateTransformer` objects.

    All transformers in an environment must share their state universe.
    """

    def bind(self, name, transformer):
        """Create a copy of the environment with one additional (or replaced) binding."""
        result = Environment(self)
        result[name] = transformer
        return result

    def check_space(self, space):
        """Make sure the bound transformers are defined over `space`."""
        for name, transformer in self.items():
            if transformer.fingerprint != space.fingerprint:
                raise InputError(compact("""
                    The transformer bound to {name} is defined over a
                    different state set!
                """, name=name))


class ConstantTerm(object):

    """A compiled constant transformer (used for propositions)."""

    def __init__(self, mask):
        """Initialize a term that ignores its argument."""
        self.mask = mask

    def apply(self, mask):
        """Apply the term to a bit mask."""
        return self.mask


class IdentityTerm(object):

    """A compiled ``tau``."""

    def apply(self, mask):
        """Apply the term to a bit mask."""
        return mask


class ModalTerm(object):

    """A compiled ``<a>`` or ``[a]``."""

    def __init__(self, space, letter, universal):
        """Initialize a modal term (`universal` is :data:`True` for boxes)."""
        self.space = space
        self.letter = letter
        self.universal = universal

    def apply(self, mask):
        """Apply the term to a bit mask."""
        if self.universal:
            return self.space.box(self.letter, mask)
        return self.space.diamond(self.letter, mask)


class BinaryTerm(object):

    """A compiled disjunction, conjunction or chop."""

    def __init__(self, operator, left, right):
        """Initialize a binary term (`operator` is one of ``or``, ``and`` and ``chop``)."""
        self.operator = operator
        self.left = left
        self.right = right

    def apply(self, mask):
        """Apply the term to a bit mask."""
        if self.operator == 'chop':
            return self.left.apply(self.right.apply(mask))
        if self.operator == 'or':
            return self.left.apply(mask) | self.right.apply(mask)
        return self.left.apply(mask) & self.right.apply(mask)


class TransformerTerm(object):

    """A compiled reference to a transformer from the environment."""

    def __init__(self, transformer):
        """Initialize a term that delegates to a :class:`PredicateTransformer`."""
        self.transformer = transformer

    def apply(self, mask):
        """Apply the term to a bit mask."""
        return self.transformer.apply_mask(mask)


class VariableTerm(object):

    """A compiled reference to the variable of an enclosing fixpoint."""

    def __init__(self, binder):
        """Initialize a term that looks up the approximation of `binder`."""
        self.binder = binder

    def apply(self, mask):
        """Apply the term to a bit mask."""
        return self.binder.lookup(mask)


class FixpointTerm(object):

    """
    A compiled fixpoint that is solved on demand.

    :attr:`solved` maps the arguments queried so far to their exact values,
    given the current values of the free variables. Enclosing fixpoints
    call :func:`reset()` whenever the approximation of a variable that
    occurs free in this fixpoint changes.
    """

    def __init__(self, space, variable, greatest):
        """Initialize a fixpoint term (the body is compiled afterwards)."""
        self.space = space
        self.variable = variable
        self.greatest = greatest
        self.start = space.full if greatest else 0
        self.body = None
        self.dependents = []
        self.solved = {}
        self.view = None
        self.added = None
        self.max_rounds = (space.size + 1) * (1 << min(space.size, 60)) + 2

    def reset(self):
        """Forget the solved arguments."""
        self.solved.clear()

    def lookup(self, mask):
        """Get the value of the variable in the current round (unknown arguments are queued)."""
        if mask in self.view:
            return self.view[mask]
        if mask in self.solved:
            return self.solved[mask]
        self.added.add(mask)
        return self.start

    def apply(self, mask):
        """Apply the term to a bit mask."""
        if mask not in self.solved:
            self.solve(mask)
        return self.solved[mask]

    def solve(self, mask):
        """Iterate the body on the queried arguments until the values and the arguments are stable."""
        current = {mask: self.start}
        rounds = 0
        while True:
            rounds += 1
            if rounds > self.max_rounds:
                raise ChopbenchError("Fixpoint iteration of %s did not stabilize!" % self.variable)
            for term in self.dependents:
                term.reset()
            self.view = current
            self.added = set()
            updated = dict((argument, self.body.apply(argument)) for argument in current)
            for argument in self.added:
                updated.setdefault(argument, self.start)
            stable = not self.added and updated == current
            current = updated
            if stable:
                break
        self.view = None
        self.added = None
        logger.debug("Solved %s fixpoint %s on %s in %s.", 'greatest' if self.greatest else 'least',
                      self.variable, pluralize(len(current), "argument"), pluralize(rounds, "round"))
        self.solved.update(current)


class FlcEvaluator(PropertyManager):

    """
    Evaluate FLC formulas on a fixed transition system.

    Results of closed formulas are cached per evaluator (and mode), so a single
    evaluator should be used for all formulas that are checked on the same
    transition system.
    """

    @required_property
    def lts(self):
        """The :class:`~chopbench.lts.Lts` on which formulas are evaluated."""

    @mutable_property
    def mode(self):
        """The evaluation strategy (one of the strings in :data:`EVALUATION_MODES`, defaults to ``demand``)."""
        return 'demand'

    @mode.setter
    def mode(self, value):
        """Validate the evaluation strategy."""
        if value not in EVALUATION_MODES:
            raise InputError("Please provide a valid evaluation mode! (one of %s)" % concatenate(EVALUATION_MODES))
        set_property(self, 'mode', value)

    @mutable_property
    def state_cap(self):
        """The maximum number of states accepted in the tabulated mode (an integer, see :func:`default_state_cap()`)."""
        return default_state_cap()

    @cached_property
    def space(self):
        """The :class:`StateSpace` of :attr:`lts`."""
        return StateSpace(self.lts)

    @cached_property
    def closed_results(self):
        """A dictionary mapping pairs of an evaluation mode and a closed formula to their transformers."""
        return {}

    def transformer(self, function):
        """Wrap a bit mask function in a :class:`PredicateTransformer`."""
        return PredicateTransformer(space=self.space, function=function, state_cap=self.state_cap)

    def evaluate(self, formula, environment=None):
        """
        Compute the transformer denoted by a formula.

        :param formula: An FLC formula.
        :param environment: An :class:`Environment` (or dictionary) that
                            binds the free variables of `formula`.
        :returns: A :class:`PredicateTransformer`.
        :raises: :exc:`~chopbench.exceptions.InputError` when a free variable
                 is unbound, :exc:`~chopbench.exceptions.ResourceError` when
                 the tabulated mode is used on a structure larger than
                 :attr:`state_cap`.
        """
        environment = Environment(environment or {})
        unbound = sorted(free_variables(formula) - set(environment))
        if unbound:
            raise InputError("Unbound variable(s) in formula: %s" % concatenate(unbound))
        environment.check_space(self.space)
        if self.mode == 'tabulated' and self.space.size > self.state_cap:
            raise ResourceError(compact("""
                The tabulated mode refuses to run on {lts} because it has
                more than {cap} states (see ${variable} or use the demand
                driven mode)!
            """, lts=self.lts.describe(), cap=self.state_cap, variable=STATE_CAP_VARIABLE))
        # Only closed formulas evaluated without bindings are cached.
        closed = not environment and not free_variables(formula)
        if closed and (self.mode, formula) in self.closed_results:
            return self.closed_results[self.mode, formula]
        if self.mode == 'tabulated':
            tables = dict((name, t.table) for name, t in environment.items())
            transformer = self.transformer(self.tabulate(formula, tables).__getitem__)
        else:
            term = self.compile(formula, dict((name, TransformerTerm(t)) for name, t in environment.items()), [])
            transformer = self.transformer(term.apply)
        if closed:
            self.closed_results[self.mode, formula] = transformer
        return transformer

    def satisfying(self, formula, environment=None):
        """Get the states where a formula holds (the image of the full state set, a :class:`frozenset`)."""
        transformer = self.evaluate(formula, environment)
        return self.space.from_mask(transformer.apply_mask(self.space.full))

    def holds(self, state, formula):
        """Check whether `state` satisfies the closed formula `formula`."""
        self.lts.check_state(state)
        return state in self.satisfying(formula)

    def compile(self, formula, scope, binders):
        """
        Translate a formula into a tree of terms that can be applied to bit masks.

        :param formula: An FLC formula.
        :param scope: A dictionary mapping variable names to terms.
        :param binders: The list of enclosing :class:`FixpointTerm` objects
                        (innermost last).
        :returns: A term object with an ``apply(mask)`` method.
        """
        if isinstance(formula, Atom):
            return ConstantTerm(self.space.proposition(formula.name))
        if isinstance(formula, NegAtom):
            return ConstantTerm(self.space.full & ~self.space.proposition(formula.name))
        if isinstance(formula, Var):
            return scope[formula.name]
        if isinstance(formula, Tau):
            return IdentityTerm()
        if isinstance(formula, (Diamond, Box)):
            return ModalTerm(self.space, formula.letter, isinstance(formula, Box))
        if isinstance(formula, (Or, And, Chop)):
            operator = {Or: 'or', And: 'and', Chop: 'chop'}[type(formula)]
            return BinaryTerm(operator, self.compile(formula.left, scope, binders),
                              self.compile(formula.right, scope, binders))
        if isinstance(formula, (Mu, Nu)):
            term = FixpointTerm(self.space, formula.variable, isinstance(formula, Nu))
            free = free_variables(formula)
            for binder in binders:
                if binder.variable in free and scope.get(binder.variable) is not None \
                        and getattr(scope[binder.variable], 'binder', None) is binder:
                    binder.dependents.append(term)
            inner_scope = dict(scope)
            inner_scope[formula.variable] = VariableTerm(term)
            term.body = self.compile(formula.body, inner_scope, binders + [term])
            return term
        raise InputError("Not an FLC formula: %r" % (formula,))

    def tabulate(self, formula, tables):
        """
        Compute the complete table of a formula.

        :param formula: An FLC formula.
        :param tables: A dictionary mapping variable names to tables.
        :returns: A list with the image of every bit mask.
        """
        space = self.space
        count = 1 << space.size
        if isinstance(formula, Atom):
            return [space.proposition(formula.name)] * count
        if isinstance(formula, NegAtom):
            return [space.full & ~space.proposition(formula.name)] * count
        if isinstance(formula, Var):
            return tables[formula.name]
        if isinstance(formula, Tau):
            return list(range(count))
        if isinstance(formula, Diamond):
            return [space.diamond(formula.letter, mask) for mask in range(count)]
        if isinstance(formula, Box):
            return [space.box(formula.letter, mask) for mask in range(count)]
        if isinstance(formula, (Or, And, Chop)):
            left = self.tabulate(formula.left, tables)
            right = self.tabulate(formula.right, tables)
            if isinstance(formula, Or):
                return [a | b for a, b in zip(left, right)]
            if isinstance(formula, And):
                return [a & b for a, b in zip(left, right)]
            return [left[b] for b in right]
        if isinstance(formula, (Mu, Nu)):
            current = [space.full if isinstance(formula, Nu) else 0] * count
            limit = space.size * count + 1
            for iteration in range(1, limit + 1):
                inner = dict(tables)
                inner[formula.variable] = current
                updated = self.tabulate(formula.body, inner)
                if updated == current:
                    logger.debug("Fixpoint %s stabilized after %s.", formula.variable,
                                 pluralize(iteration, "iteration"))
                    return current
                current = updated
            raise ChopbenchError("Fixpoint iteration of %s did not stabilize!" % formula.variable)
        raise InputError("Not an FLC formula: %r" % (formula,))


def eval_flc(lts, formula, environment=None, mode='demand', state_cap=None):
    """
    Compute the predicate transformer denoted by a formula.

    :param lts: An :class:`~chopbench.lts.Lts` object.
    :param formula: An FLC formula.
    :param environment: An :class:`Environment` binding the free variables
                        of `formula` (optional).
    :param mode: One of the strings in :data:`EVALUATION_MODES`.
    :param state_cap: Overrides :attr:`FlcEvaluator.state_cap` (optional).
    :returns: A :class:`PredicateTransformer`.
    """
    options = dict(lts=lts, mode=mode)
    if state_cap is not None:
        options['state_cap'] = state_cap
    return FlcEvaluator(**options).evaluate(formula, environment)


def holds(lts, state, formula, mode='demand', state_cap=None):
    """
    Check whether a state satisfies a closed formula.

    :param lts: An :class:`~chopbench.lts.Lts` object.
    :param state: A state of `lts`.
    :param formula: A closed FLC formula.
    :param mode: One of the strings in :data:`EVALUATION_MODES`.
    :param state_cap: Overrides :attr:`FlcEvaluator.state_cap` (optional).
    :returns: :data:`True` when `state` is in the image of the full state
              set under the transformer of `formula`.
    """
    options = dict(lts=lts, mode=mode)
    if state_cap is not None:
        options['state_cap'] = state_cap
    return FlcEvaluator(**options).holds(state, formula)


class AlphabetPartition(collections.namedtuple('AlphabetPartition', 'calls, returns, internals')):

    """A partition of an alphabet into call, return and internal letters."""

    __slots__ = ()

    def __new__(cls, calls=(), returns=(), internals=()):
        """Normalize the three letter classes to frozen sets and make sure they're disjoint."""
        calls, returns, internals = frozenset(calls), frozenset(returns), frozenset(internals)
        overlap = (calls & returns) | (calls & internals) | (returns & internals)
        if overlap:
            raise InputError("Letter(s) in more than one class: %s" % concatenate(sorted(overlap)))
        return super(AlphabetPartition, cls).__new__(cls, calls, returns, internals)

    @classmethod
    def from_vpa(cls, vpa):
        """Get the partition of a :class:`~chopbench.automata.Vpa`."""
        return cls(vpa.calls, vpa.returns, vpa.internals)

    def kind(self, letter):
        """
        Classify a letter.

        :returns: One of the strings ``call``, ``return`` and ``internal``.
        :raises: :exc:`~chopbench.exceptions.InputError` for unclassified letters.
        """
        if letter in self.calls:
            return 'call'
        if letter in self.returns:
            return 'return'
        if letter in self.internals:
            return 'internal'
        raise InputError("Letter %r isn't classified as call, return or internal!" % (letter,))


def flatten_chop(formula):
    """Flatten a tree of chops into the list of its operands (chop is associative)."""
    if isinstance(formula, Chop):
        return flatten_chop(formula.left) + flatten_chop(formula.right)
    return [formula]


def is_vpflc(formula, partition):
    """
    Check whether a formula belongs to the visibly pushdown fragment of FLC.

    :param formula: An FLC formula.
    :param partition: An :class:`AlphabetPartition` (or a tuple of calls,
                      returns and internals).
    :returns: :data:`True` or :data:`False`.
    :raises: :exc:`~chopbench.exceptions.InputError` when a letter of
             `formula` isn't classified by `partition`.

    The fragment is generated by propositions, negated propositions,
    variables, disjunction, conjunction and fixpoints together with the
    guarded compositions ``<i>;F``, ``<c>;<r>``, ``<c>;<r>;F``,
    ``<c>;F;<r>`` and ``<c>;F;<r>;G`` (boxes may take the place of diamonds)
    where ``i`` is internal, ``c`` a call and ``r`` a return letter.
    Because chop is associative the chain of composed operands is matched
    as a whole. A closed formula ``F;P`` where `P` is a propositional
    constant is accepted as well, since that's the form in which
    transformers are applied to state predicates.
    """
    if not isinstance(partition, AlphabetPartition):
        partition = AlphabetPartition(*partition)
    for letter in letters_of(formula):
        partition.kind(letter)
    if vp_sequence(flatten_chop(formula), partition):
        return True
    items = flatten_chop(formula)
    return (len(items) > 1 and is_propositional_constant(items[-1])
            and not free_variables(formula) and vp_sequence(items[:-1], partition))


def is_propositional_constant(formula):
    """Check whether a formula is built from (negated) propositions with disjunction and conjunction."""
    if isinstance(formula, (Atom, NegAtom)):
        return True
    if isinstance(formula, (Or, And)):
        return is_propositional_constant(formula.left) and is_propositional_constant(formula.right)
    return False


def modality_kind(formula, partition):
    """Get the letter class of a modality (or :data:`None` for other formulas)."""
    if isinstance(formula, (Diamond, Box)):
        return partition.kind(formula.letter)
    return None


def vp_sequence(items, partition):
    """Check whether a list of composed operands matches one of the productions of the fragment."""
    if len(items) == 1:
        return vp_item(items[0], partition)
    first = modality_kind(items[0], partition)
    if first == 'internal':
        return vp_sequence(items[1:], partition)
    if first == 'call':
        for index in range(1, len(items)):
            if modality_kind(items[index], partition) == 'return':
                middle = items[1:index]
                tail = items[index + 1:]
                if (not middle or vp_sequence(middle, partition)) and (not tail or vp_sequence(tail, partition)):
                    return True
    return False


def vp_item(formula, partition):
    """Check whether a formula that isn't a chop belongs to the fragment."""
    if isinstance(formula, (Atom, NegAtom, Var)):
        return True
    if isinstance(formula, (Or, And)):
        return (vp_sequence(flatten_chop(formula.left), partition)
                and vp_sequence(flatten_chop(formula.right), partition))
    if isinstance(formula, (Mu, Nu)):
        return vp_sequence(flatten_chop(formula.body), partition)
    return modality_kind(formula, partition) == 'internal'
