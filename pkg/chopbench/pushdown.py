# chopbench: Model checking workbench for PDL over language classes and FLC.
#
# Author: The chopbench developers
# Last Change: October 16, 2026

"""
The :mod:`chopbench.pushdown` module contains pushdown analyses.

:class:`PdaGrammar` converts a pushdown automaton to a context-free
grammar using the triple construction, which decides emptiness
(:func:`pda_empty()`) and produces a shortest member
(:func:`pda_witness()`). :class:`PushdownReachability` computes, for a
pushdown automaton running in lockstep with a transition system, which
pairs of states are connected by a word of the language; it is used by
:func:`chopbench.pdl.reach_relation()`.

Nonterminals of the grammar are tuples whose first element names their kind:

``('S',)``
  The start symbol.
``('E', p)``
  The stack is empty, the automaton is in state p and eventually accepts.
``('G', p, X)``
  In state p with X on top the automaton accepts before X is popped.
``('H', p, seq)``
  In state p with stack seq (on top of the empty stack) the automaton
  eventually accepts.
``('K', p, seq)``
  Like H but acceptance has to happen before seq is popped completely.
``('P', p, X, q)``
  In state p with X on top the automaton pops X and arrives in q.
``('C', p, seq, q)``
  In state p the automaton pops seq completely and arrives in q.

Every production is a ``(word, nonterminals)`` tuple where `word` is empty
or a single letter.
"""

# Standard library modules.
import collections
import logging

# External dependencies.
from humanfriendly.text import pluralize
from property_manager import PropertyManager, cached_property, required_property

# Modules included in our package.
from chopbench.automata import BOTTOM, as_pda

# Initialize a logger.
logger = logging.getLogger(__name__)

START_SYMBOL = ('S',)
"""The start symbol of every :class:`PdaGrammar`."""


class PdaGrammar(PropertyManager):

    """The grammar of a pushdown automaton (generated lazily from the start symbol)."""

    def __init__(self, pda, **options):
        """
        Initialize a :class:`PdaGrammar` object.

        :param pda: An :class:`~chopbench.automata.Nfa`,
                    :class:`~chopbench.automata.Pda` or
                    :class:`~chopbench.automata.Vpa` object.
        """
        super(PdaGrammar, self).__init__(pda=as_pda(pda), **options)

    @required_property
    def pda(self):
        """The :class:`~chopbench.automata.Pda` (accepting by final state) the grammar describes."""

    def expand(self, nonterminal):
        """
        Generate the productions of a nonterminal.

        :param nonterminal: A nonterminal tuple (see the module documentation).
        :returns: A list of ``(word, nonterminals)`` tuples.
        """
        pda = self.pda
        kind = nonterminal[0]
        moves = pda.transitions_from
        productions = []
        if kind == 'S':
            productions.append(((), (('E', pda.initial),)))
        elif kind == 'E':
            p = nonterminal[1]
            if p in pda.accepting:
                productions.append(((), ()))
            for t in moves.get(p, ()):
                if t.pop == BOTTOM:
                    follow = ('H', t.target, t.push) if t.push else ('E', t.target)
                    productions.append(((t.letter,), (follow,)))
        elif kind in ('H', 'K'):
            p, seq = nonterminal[1:]
            productions.append(((), (('G', p, seq[-1]),)))
            for r in pda.states:
                if len(seq) > 1:
                    productions.append(((), (('P', p, seq[-1], r), (kind, r, seq[:-1]))))
                elif kind == 'H':
                    productions.append(((), (('P', p, seq[-1], r), ('E', r))))
        elif kind == 'G':
            p, symbol = nonterminal[1:]
            if p in pda.accepting:
                productions.append(((), ()))
            for t in moves.get(p, ()):
                if t.pop == symbol and t.push:
                    productions.append(((t.letter,), (('K', t.target, t.push),)))
        elif kind == 'P':
            p, symbol, q = nonterminal[1:]
            for t in moves.get(p, ()):
                if t.pop == symbol:
                    if not t.push:
                        if t.target == q:
                            productions.append(((t.letter,), ()))
                    else:
                        productions.append(((t.letter,), (('C', t.target, t.push, q),)))
        elif kind == 'C':
            p, seq, q = nonterminal[1:]
            if len(seq) == 1:
                productions.append(((), (('P', p, seq[0], q),)))
            else:
                for r in pda.states:
                    productions.append(((), (('P', p, seq[-1], r), ('C', r, seq[:-1], q))))
        return productions

    @cached_property
    def productions(self):
        """A dictionary mapping every nonterminal reachable from :data:`START_SYMBOL` to its productions."""
        result = {}
        pending = [START_SYMBOL]
        while pending:
            nonterminal = pending.pop()
            if nonterminal not in result:
                result[nonterminal] = self.expand(nonterminal)
                for _, body in result[nonterminal]:
                    pending.extend(n for n in body if n not in result)
        logger.debug("Grammar of %s has %s.", self.pda.name, pluralize(len(result), "nonterminal"))
        return result

    @cached_property
    def shortest_lengths(self):
        """
        A dictionary mapping productive nonterminals to the length of their shortest derivable word.

        Nonterminals that don't derive any word are missing from the
        dictionary. The lengths are computed as a least fixed point, which
        also decides productivity.
        """
        lengths = {}
        changed = True
        while changed:
            changed = False
            for nonterminal, productions in self.productions.items():
                for word, body in productions:
                    if all(n in lengths for n in body):
                        length = len(word) + sum(lengths[n] for n in body)
                        if length < lengths.get(nonterminal, length + 1):
                            lengths[nonterminal] = length
                            changed = True
        return lengths

    def is_empty(self):
        """:data:`True` when the start symbol derives nothing, :data:`False` otherwise."""
        return START_SYMBOL not in self.shortest_lengths

    def witness(self):
        """
        Find a shortest word of the language.

        :returns: A tuple of letters or :data:`None` when the language is empty.
        """
        if self.is_empty():
            return None
        lengths = self.shortest_lengths
        letters = []
        pending = [START_SYMBOL]
        while pending:
            nonterminal = pending.pop()
            for word, body in self.productions[nonterminal]:
                if all(n in lengths for n in body) and \
                        len(word) + sum(lengths[n] for n in body) == lengths[nonterminal]:
                    letters.extend(word)
                    pending.extend(reversed(body))
                    break
        return tuple(letters)


def pda_empty(pda):
    """
    Decide whether an automaton accepts nothing.

    :param pda: An :class:`~chopbench.automata.Nfa`,
                :class:`~chopbench.automata.Pda` or
                :class:`~chopbench.automata.Vpa` object.
    :returns: :data:`True` when the language is empty, :data:`False` otherwise.
    """
    return PdaGrammar(pda).is_empty()


def pda_witness(pda):
    """
    Find a shortest member of the language of an automaton.

    :param pda: Any acceptor accepted by :func:`pda_empty()`.
    :returns: A tuple of letters or :data:`None` when the language is empty.
    """
    return PdaGrammar(pda).witness()


class PushdownReachability(PropertyManager):

    """
    Saturation based reachability for a pushdown automaton reading paths of a transition system.

    The product of the automaton with the transition system is a pushdown
    system whose control nodes are ``(automaton state, system state)``
    pairs. Pop summaries record which nodes can be reached by popping a
    given symbol; with those, reachable ``(node, topmost symbol)`` pairs
    are found by a plain graph search per source state.
    """

    def __init__(self, pda, lts, **options):
        """
        Initialize a :class:`PushdownReachability` object.

        :param pda: Any acceptor (converted with :func:`~chopbench.automata.as_pda()`).
        :param lts: An :class:`~chopbench.lts.Lts` object.
        """
        super(PushdownReachability, self).__init__(pda=as_pda(pda), lts=lts, **options)

    @required_property
    def pda(self):
        """The :class:`~chopbench.automata.Pda` (accepting by final state)."""

    @required_property
    def lts(self):
        """The :class:`~chopbench.lts.Lts`."""

    @cached_property
    def product_moves(self):
        """A dictionary mapping control nodes to lists of ``(pop, push, target node)`` tuples."""
        by_letter = collections.defaultdict(list)
        for t in self.pda.transitions:
            by_letter[t.letter].append(t)
        moves = collections.defaultdict(list)
        for source, letter, target in self.lts.transitions:
            for t in by_letter.get(letter, ()):
                moves[t.source, source].append((t.pop, t.push, (t.target, target)))
        return dict(moves)

    @cached_property
    def summaries(self):
        """A dictionary mapping ``(node, symbol)`` tuples to the :class:`set` of nodes reached by popping `symbol`."""
        summaries = collections.defaultdict(set)
        rounds = 0
        changed = True
        while changed:
            changed = False
            rounds += 1
            for node, moves in self.product_moves.items():
                for pop, push, target in moves:
                    if pop != BOTTOM:
                        reached = self.pop_sequence(summaries, target, push)
                        entry = summaries[node, pop]
                        if not reached <= entry:
                            entry.update(reached)
                            changed = True
        logger.debug("Pop summaries of %s on %s stabilized after %s.",
                     self.pda.name, self.lts.name, pluralize(rounds, "round"))
        return dict(summaries)

    def pop_sequence(self, summaries, node, sequence):
        """Find the nodes reached from `node` by popping every symbol in `sequence` (topmost last)."""
        current = set([node])
        for symbol in reversed(sequence):
            current = set(r for n in current for r in summaries.get((n, symbol), ()))
            if not current:
                break
        return current

    @cached_property
    def configuration_graph(self):
        """A dictionary mapping ``(node, top)`` pairs to lists of successor pairs (`top` may be :data:`BOTTOM`)."""
        summaries = self.summaries
        graph = collections.defaultdict(list)
        for node, moves in self.product_moves.items():
            for pop, push, target in moves:
                successors = graph[node, pop]
                if not push:
                    if pop == BOTTOM:
                        successors.append((target, BOTTOM))
                    continue
                successors.append((target, push[-1]))
                for i in range(len(push) - 1, 0, -1):
                    for r in self.pop_sequence(summaries, target, push[i:]):
                        successors.append((r, push[i - 1]))
                if pop == BOTTOM:
                    for r in self.pop_sequence(summaries, target, push):
                        successors.append((r, BOTTOM))
        return dict(graph)

    def reachable_nodes(self, source):
        """Find the control nodes reachable from the empty stack configuration at `source` (a :class:`set`)."""
        start = ((self.pda.initial, source), BOTTOM)
        seen = set([start])
        pending = [start]
        graph = self.configuration_graph
        while pending:
            current = pending.pop()
            for successor in graph.get(current, ()):
                if successor not in seen:
                    seen.add(successor)
                    pending.append(successor)
        return set(node for node, _ in seen)

    def targets(self, source):
        """Find the states `t` such that some word of the language labels a path from `source` to `t`."""
        accepting = self.pda.accepting
        return frozenset(t for q, t in self.reachable_nodes(source) if q in accepting)

    def relation(self):
        """Compute the complete reachability relation (a :class:`frozenset` of ``(source, target)`` tuples)."""
        return frozenset((s, t) for s in self.lts.states for t in self.targets(s))
