# chopbench: Model checking workbench for PDL over language classes and FLC.
#
# Author: The chopbench developers
# Last Change: October 16, 2026

"""
The :mod:`chopbench.tests` module contains the automated tests for `chopbench`.

The test suite is written to be compatible with the :mod:`unittest` module
but it's meant to be run using pytest_ (see ``tox.ini``). Randomized checks
of the model checkers against independent oracles use hypothesis_.

.. _pytest: https://docs.pytest.org/
.. _hypothesis: https://hypothesis.readthedocs.io/
"""

# Standard library modules.
import itertools
import json
import logging
import os
import random

# External dependencies.
import coloredlogs
from humanfriendly.testing import PatchedAttribute, PatchedItem, TemporaryDirectory, TestCase, run_cli
from humanfriendly.text import dedent
from hypothesis import given, settings, strategies as st

# Modules included in our package.
from chopbench import flc, pdl, pumping
from chopbench.automata import (
    BOTTOM,
    LanguageRef,
    Nfa,
    Vpa,
    derivative,
    determinize,
    intersect_regular,
    unary_slice,
    union,
    vpa_validate,
)
from chopbench.cli import main
from chopbench.exceptions import BoundTooSmallError, ChopbenchError, InputError, ParseError, ResourceError
from chopbench.flc import (
    STATE_CAP_VARIABLE,
    AlphabetPartition,
    Environment,
    FlcEvaluator,
    PredicateTransformer,
    StateSpace,
    eval_flc,
    format_flc,
    holds,
    is_vpflc,
)
from chopbench.formats import (
    Manifest,
    parse_automaton,
    parse_flc,
    parse_lts,
    parse_pdl,
    serialize_automaton,
    serialize_lts,
)
from chopbench.lab import DISCLAIMER, SeparationLab
from chopbench.lts import Lts, make_chain_b, make_witness_an_b_an, make_witness_diabox
from chopbench.pdl import (
    PdlChecker,
    enumerate_formulas,
    eval_pdl,
    format_pdl,
    formula_size,
    modal_depth,
    modal_only_depth,
    reach_relation,
)
from chopbench.properties import (
    PROPERTY_NAMES,
    build_property,
    builtin_languages,
    make_anban,
    make_anbn,
    make_even_b,
    make_star,
)
from chopbench.pumping import (
    PumpingConstants,
    TransitionProfile,
    compose,
    identity_profile,
    profile_of,
    pumping_constants,
    verify_pumping,
)
from chopbench.pushdown import PushdownReachability, pda_empty, pda_witness
from chopbench.utils import all_words

# Initialize a logger.
logger = logging.getLogger(__name__)

# The parameters of the witness instances that are checked exhaustively.
WITNESS_PARAMETERS = [(1, 1, 1), (1, 2, 1), (2, 2, 2)]


def setUpModule():
    """Enable verbose logging for the test suite."""
    coloredlogs.install()
    coloredlogs.increase_verbosity()


@st.composite
def transition_systems(draw, max_states=6):
    """Generate small random transition systems over the alphabet ``{a, b}``."""
    size = draw(st.integers(min_value=1, max_value=max_states))
    states = list(range(size))
    edges = draw(st.sets(st.tuples(st.sampled_from(states), st.sampled_from(['a', 'b']), st.sampled_from(states)),
                         max_size=3 * size))
    goal = draw(st.sets(st.sampled_from(states)))
    return Lts(states=states, transitions=edges, labelling=dict((s, ['p']) for s in goal),
               initial=0, alphabet=['a', 'b'], name='random')


def random_lts(seed, size=5, edges=10):
    """Generate a reproducible random transition system over ``{a, b}``."""
    generator = random.Random(seed)
    states = list(range(size))
    transitions = [(generator.choice(states), generator.choice('ab'), generator.choice(states))
                   for _ in range(edges)]
    goal = [s for s in states if generator.random() < 0.4]
    return Lts(states=states, transitions=transitions, labelling=dict((s, ['p']) for s in goal),
               initial=0, alphabet=['a', 'b'], name='random-%i' % seed)


def make_word_chain(word, name='path'):
    """Create a transition system that consists of a single path labelled `word` ending in p."""
    states = ['s%i' % i for i in range(len(word) + 1)]
    return Lts(states=states,
               transitions=[(states[i], letter, states[i + 1]) for i, letter in enumerate(word)],
               labelling={states[-1]: ['p']}, initial=states[0], alphabet=['a', 'b'], name=name)


def make_cycle(letter, length, name):
    """Create a finite automaton of ``(letter^length)*``."""
    return Nfa(states=range(length), alphabet=[letter],
               transitions=[(i, letter, (i + 1) % length) for i in range(length)],
               initial=0, accepting=[0], name=name)


def post(lts, states, letter):
    """Compute the `letter` successors of a set of states."""
    return frozenset(t for s in states for t in lts.successors_of(s, letter))


def pre_diamond(lts, letter, targets):
    """Compute the states with a `letter` successor in `targets`."""
    return frozenset(s for s in lts.states if lts.successors_of(s, letter) & targets)


def pre_box(lts, letter, targets, guarded=False):
    """Compute the states whose `letter` successors are all in `targets` (and exist, when `guarded`)."""
    return frozenset(s for s in lts.states
                     if lts.successors_of(s, letter) <= targets
                     and (lts.successors_of(s, letter) or not guarded))


def exists_power(lts, state, first, advance, test):
    """
    Decide ``exists n >= 1: test(A_n, X_n)`` where ``A_n`` is the set reached by ``a^n``.

    The pairs ``(A_n, X_n)`` evolve deterministically, so the search stops
    as soon as a pair repeats.
    """
    current = (post(lts, [state], 'a'), first)
    seen = set()
    while current not in seen:
        seen.add(current)
        if test(*current):
            return True
        current = (post(lts, current[0], 'a'), advance(current[1]))
    return False


def oracle(lts, name, guarded=False):
    """Compute the states satisfying one of the builtin properties without any fixpoint machinery."""
    goal = lts.satisfying('p')
    if name == 'game_iter':
        current = frozenset()
        while True:
            updated = pre_diamond(lts, 'a', pre_box(lts, 'b', goal | current))
            if updated == current:
                return current
            current = updated
    if name == 'dia_anbn':
        first = pre_diamond(lts, 'b', goal)
        advance = diamond_step(lts, 'b')
        test = lambda reached, targets: bool(reached & targets)  # noqa: E731
    elif name == 'dia_anban':
        first = pre_diamond(lts, 'a', goal)
        advance = diamond_step(lts, 'a')
        test = lambda reached, targets: bool(reached & pre_diamond(lts, 'b', targets))  # noqa: E731
    elif name == 'dia_an_box_bn':
        first = pre_box(lts, 'b', goal, guarded)
        advance = lambda targets: pre_box(lts, 'b', targets, guarded)  # noqa: E731
        test = lambda reached, targets: bool(reached & targets)  # noqa: E731
    else:
        first = pre_diamond(lts, 'a', goal)
        advance = diamond_step(lts, 'a')
        test = lambda reached, targets: bool(reached & pre_box(lts, 'b', targets, guarded))  # noqa: E731
    return frozenset(s for s in lts.states if exists_power(lts, s, first, advance, test))


def diamond_step(lts, letter):
    """Get a function that maps a set of states to its `letter` predecessors."""
    return lambda targets: pre_diamond(lts, letter, targets)


def box_anbn_oracle(lts):
    """Compute ``[ANBN]p`` as the complement of the states with an ``a^n b^n`` path into a non-goal state."""
    bad = frozenset(lts.states) - lts.satisfying('p')
    first = pre_diamond(lts, 'b', bad)
    return frozenset(s for s in lts.states if not exists_power(
        lts, s, first, diamond_step(lts, 'b'), lambda reached, targets: bool(reached & targets),
    ))


class ChopbenchTestCase(TestCase):

    """:mod:`unittest` compatible container for the test suite of `chopbench`."""

    def create_lab(self, **options):
        """Create a :class:`~chopbench.lab.SeparationLab` that ignores configuration files and environment variables."""
        return SeparationLab(load_configuration_files=False, load_environment_variables=False, **options)

    # Transition systems.

    def test_reach_by_word(self):
        """Test following words through a transition system."""
        chain = make_chain_b(2)
        assert chain.reach_by_word(2, 'bb') == frozenset([0])
        assert chain.reach_by_word(2, '') == frozenset([2])
        assert chain.reach_by_word(2, 'bbb') == frozenset()
        self.assertRaises(InputError, chain.reach_by_word, 7, 'b')
        self.assertRaises(InputError, chain.reach_by_word, 2, 'a')

    def test_words_from(self):
        """Test exhaustive path enumeration."""
        chain = make_chain_b(2)
        assert chain.words_from(1, 1) == set([((), 1), (('b',), 0)])
        assert chain.words_from(2, 2) == set([((), 2), (('b',), 1), (('b', 'b'), 0)])
        lonely = Lts(states=['s'])
        assert lonely.words_from('s', 5) == set([((), 's')])
        self.assertRaises(InputError, chain.words_from, 2, -1)

    def test_chain_generator(self):
        """Test the b-chain generator."""
        single = make_chain_b(0)
        assert single.states == (0,)
        assert not single.transitions
        assert single.labelling[0] == frozenset(['p'])
        short = make_chain_b(2)
        assert len(short.states) == 3
        assert len(short.transitions) == 2
        assert short.satisfying('p') == frozenset([0])
        longer = make_chain_b(5)
        assert longer.initial == 5
        maximal = [word for word, target in longer.words_from(5, 10) if target == 0]
        assert maximal == [('b',) * 5]
        assert longer.name == 'chain-5'
        self.assertRaises(InputError, make_chain_b, -1)

    def test_diabox_witness(self):
        """Test the shape of the witness pair for ``<a^n>[b^n]``."""
        first, second = make_witness_diabox(1, 1, 1)
        assert len(first.states) == 7
        assert first.initial == '2_4'
        assert first.reach_by_word('2_4', 'aaa') == frozenset(['u'])
        assert first.reach_by_word('2_4', 'aaabbb') == frozenset(['0_1'])
        assert first.satisfying('p') == frozenset(['0_1'])
        assert len(second.states) == 11
        assert second.initial == '2_5'
        assert second.reach_by_word('2_5', 'aaa') == frozenset(['dn'])
        assert second.reach_by_word('dn', 'bbb') == frozenset(['0_2', '1_3'])
        assert second.reach_by_word('dn', 'bbbb') == frozenset(['0_3'])
        crossed, _ = make_witness_diabox(1, 1, 1, cross_edge=True)
        assert crossed.reach_by_word('2_4', 'aaa') == frozenset(['u', 'dn'])
        assert crossed.name == 'diabox-t1-cross'
        self.assertRaises(InputError, make_witness_diabox, 0, 1, 1)

    def test_anban_witness(self):
        """Test the shape of the witness pair for ``<a^n>[b]<a^n>``."""
        first, second = make_witness_an_b_an(1, 1, 1)
        assert first.initial == '1_4'
        assert first.reach_by_word('1_4', 'aa') == frozenset(['u'])
        assert first.reach_by_word('1_4', 'aabaa') == frozenset(['0_1'])
        assert second.initial == '1_5'
        assert second.reach_by_word('1_5', 'aabaa') == frozenset(['0_2', '1_3'])
        assert second.reach_by_word('1_5', 'aabaaa') == frozenset(['0_3'])
        self.assertRaises(InputError, make_witness_an_b_an, 1, 0, 1)

    # Automata.

    def test_finite_automata(self):
        """Test membership in finite automata and the subset construction."""
        even = make_even_b()
        assert even.accepts('bbbb')
        assert not even.accepts('bbb')
        self.assertRaises(InputError, even.accepts, 'bc')
        a_star_b = Nfa(states=['s', 't'], alphabet=['a', 'b'], transitions=[('s', 'a', 's'), ('s', 'b', 't')],
                       initial='s', accepting=['t'])
        assert a_star_b.accepts('aab')
        ends_in_b = Nfa(states=[0, 1], alphabet=['a', 'b'],
                        transitions=[(0, 'a', 0), (0, 'b', 0), (0, 'b', 1)],
                        initial=0, accepting=[1])
        deterministic = determinize(ends_in_b)
        assert deterministic.is_deterministic
        assert len(deterministic.states) <= 4
        for word in all_words('ab', 8):
            assert deterministic.accepts(word) == ends_in_b.accepts(word)
        unreachable = Nfa(states=[0, 1], alphabet=['a', 'b'], transitions=[(0, 'a', 0), (0, 'b', 0)],
                          initial=0, accepting=[1])
        assert not any(determinize(unreachable).accepts(w) for w in all_words('ab', 8))

    def test_pushdown_membership(self):
        """Test membership in the builtin pushdown languages."""
        anbn = make_anbn()
        assert anbn.accepts('aabb')
        assert anbn.accepts('ab')
        assert not anbn.accepts('')
        assert not anbn.accepts('aab')
        assert not anbn.accepts('abab')
        anban = make_anban()
        assert anban.accepts('aabaa')
        assert not anban.accepts('aaba')
        assert not anban.accepts('b')

    def test_derivative(self):
        """Test the derivative construction against the definition on all short words."""
        sigma_star = Nfa(states=['s'], alphabet=['a', 'b'], transitions=[('s', 'a', 's'), ('s', 'b', 's')],
                         initial='s', accepting=['s'], name='ALL')
        languages = list(builtin_languages().values()) + [LanguageRef('ALL', sigma_star)]
        for language in languages:
            for letter in 'ab':
                result = derivative(language.acceptor, letter)
                for word in all_words('ab', 7):
                    assert result.accepts(word) == language.accepts((letter,) + word), \
                        "%s by %s disagrees on %r" % (language.name, letter, word)
        assert not any(derivative(make_star('b', 'BSTAR'), 'a').accepts(w) for w in all_words('ab', 8))
        assert all(derivative(sigma_star, 'a').accepts(w) for w in all_words('ab', 6))
        self.assertRaises(InputError, derivative, make_anbn(), 'c')

    def test_union_and_intersection(self):
        """Test the union and the intersection with regular languages."""
        anbn, b_star = make_anbn(), make_star('b', 'BSTAR')
        either = union(anbn, b_star)
        for word in all_words('ab', 6):
            assert either.accepts(word) == (anbn.accepts(word) or b_star.accepts(word))
        a_star_b = Nfa(states=['s', 't'], alphabet=['a', 'b'], transitions=[('s', 'a', 's'), ('s', 'b', 't')],
                       initial='s', accepting=['t'])
        members = [w for w in all_words('ab', 8) if intersect_regular(anbn, a_star_b).accepts(w)]
        assert members == [('a', 'b')]
        assert not any(intersect_regular(anbn, b_star).accepts(w) for w in all_words('ab', 8))
        narrow = make_star('a', 'A', alphabet=['a'])
        self.assertRaises(InputError, intersect_regular, anbn, narrow)
        self.assertRaises(InputError, union, anbn, narrow)

    def test_emptiness(self):
        """Test the emptiness check and the shortest witnesses."""
        anbn = make_anbn()
        assert not pda_empty(anbn)
        assert pda_witness(anbn) == ('a', 'b')
        assert pda_witness(make_anban()) == ('a', 'b', 'a')
        assert pda_empty(intersect_regular(anbn, make_star('a', 'ASTAR')))
        assert pda_witness(intersect_regular(anbn, make_star('a', 'ASTAR'))) is None
        assert pda_empty(derivative(anbn, 'b'))
        nothing = Nfa(states=['s'], alphabet=['a', 'b'], transitions=[('s', 'a', 's')], initial='s', accepting=[])
        assert pda_empty(nothing)

    def test_unary_slices(self):
        """Test the computation of unary slices."""
        anbn = make_anbn()
        assert not any(unary_slice(anbn, 'b', 12).accepts(w) for w in all_words('b', 12))
        assert not any(unary_slice(anbn, 'a', 12).accepts(w) for w in all_words('a', 12))
        assert all(unary_slice(make_star('b', 'BSTAR'), 'b', 12).accepts(w) for w in all_words('b', 12))
        sevens = make_cycle('b', 7, 'SEVEN')
        self.assertRaises(BoundTooSmallError, unary_slice, sevens, 'b', 5)
        sliced = unary_slice(sevens, 'b', 12)
        assert sliced.accepts('b' * 7)
        assert sliced.accepts('b' * 14)
        assert not sliced.accepts('b' * 6)
        assert pumping_constants([sliced], 'b') == PumpingConstants(1, 7)

    def test_vpa_validation(self):
        """Test the shape rules of visibly pushdown automata."""
        assert vpa_validate(make_anbn())
        anbn = make_anbn()
        mislabelled = Vpa(states=anbn.states, alphabet=anbn.alphabet, transitions=anbn.transitions,
                          initial=anbn.initial, accepting=anbn.accepting, internals=['a'], returns=['b'])
        assert not vpa_validate(mislabelled)
        early_return = Vpa(states=['q0', 'q1'], alphabet=['a', 'b'],
                           transitions=[('q0', 'b', BOTTOM, '', 'q1')],
                           initial='q0', accepting=['q1'], calls=['a'], returns=['b'])
        assert not vpa_validate(early_return)
        assert not vpa_validate(make_anban())

    def test_language_references(self):
        """Test that class tags must match the acceptor."""
        assert LanguageRef('ANBN', make_anbn()).language_class == 'VPL'
        assert LanguageRef('EVENB', make_even_b(), 'reg').language_class == 'REG'
        self.assertRaises(InputError, LanguageRef, 'X', make_even_b(), 'VPL')
        self.assertRaises(InputError, LanguageRef, 'X', make_anban(), 'REG')
        self.assertRaises(InputError, LanguageRef, '', make_anban())

    # Pumping constants.

    def test_transition_profiles(self):
        """Test the composition of transition profiles."""
        even = make_even_b()
        step = profile_of([even], 'b')
        assert step.relation_of(0) == frozenset([('even', 'odd'), ('odd', 'even')])
        assert compose(step, step) == identity_profile([even])
        loops = Nfa(states=['x', 'y'], alphabet=['a'], transitions=[('x', 'a', 'x'), ('y', 'a', 'y')],
                    initial='x', accepting=['y'])
        assert profile_of([loops], 'a') == identity_profile([loops])
        self.assertRaises(InputError, profile_of, [even, loops], 'b')
        self.assertRaises(InputError, profile_of, [], 'b')
        self.assertRaises(InputError, compose, step, profile_of([loops], 'a'))

    def test_pumping_constants(self):
        """Test pumping constants and their verification against direct membership."""
        even = make_even_b()
        assert pumping_constants([even], 'b') == PumpingConstants(1, 2)
        assert str(pumping_constants([even], 'b')) == 'm=1 k=2'
        assert pumping_constants([make_star('b', 'BSTAR')], 'b') == PumpingConstants(1, 1)
        threes = [make_cycle('b', 3, 'THREE'), make_star('b', 'BSTAR')]
        constants = pumping_constants(threes, 'b')
        assert constants.k % 3 == 0
        assert verify_pumping([even], 'b', PumpingConstants(1, 2), 20, 5)
        assert not verify_pumping([even], 'b', PumpingConstants(1, 1), 20, 5)
        assert verify_pumping([make_star('b', 'BSTAR')], 'b', PumpingConstants(1, 1), 20, 5)
        slices = [unary_slice(make_anbn(), 'b', 12)]
        for automata in ([even], threes, slices):
            assert verify_pumping(automata, 'b', pumping_constants(automata, 'b'), 40, 5)
        self.assertRaises(InputError, PumpingConstants, 1, 0)

    def test_pumping_bound(self):
        """Test that a profile enumeration that exceeds its bound is reported as an error."""
        counter = itertools.count()

        def fresh_profile(first, second):
            return TransitionProfile(frozenset([next(counter)]), first.fingerprint)

        with PatchedAttribute(pumping, 'compose', fresh_profile):
            with self.assertRaises(ChopbenchError) as context:
                pumping_constants([make_star('b', 'BSTAR')], 'b')
        assert not isinstance(context.exception, InputError)
        assert "didn't terminate" in str(context.exception)

    # PDL.

    def test_modal_depth(self):
        """Test both depth measures."""
        p, q = pdl.Prop('p'), pdl.Prop('q')
        assert modal_depth(p) == 0
        assert modal_depth(pdl.Or(pdl.Diamond('L', p), q)) == 1
        assert modal_depth(pdl.Not(pdl.Diamond('L', p))) == 2
        assert modal_depth(pdl.Box('L', pdl.Not(p))) == 2
        assert modal_only_depth(pdl.Box('L', pdl.Not(p))) == 1
        self.assertRaises(InputError, modal_depth, p, 'other')

    def test_reach_relation(self):
        """Test the reachability relations of regular and pushdown languages."""
        chain = make_chain_b(3)
        twice = Nfa(states=[0, 1, 2], alphabet=['b'], transitions=[(0, 'b', 1), (1, 'b', 2)],
                    initial=0, accepting=[2], name='BB')
        assert reach_relation(chain, twice) == frozenset([(3, 1), (2, 0)])
        epsilon = Nfa(states=['e'], alphabet=['b'], transitions=[], initial='e', accepting=['e'])
        assert reach_relation(chain, epsilon) == frozenset((s, s) for s in chain.states)
        path = make_word_chain('aabb')
        assert reach_relation(path, make_anbn()) == frozenset([('s0', 's4'), ('s1', 's3')])
        self.assertRaises(InputError, reach_relation, chain, make_anbn())

    def test_saturation_matches_emptiness(self):
        """Test the saturation based relation against one emptiness check per pair of states."""
        looped = Lts(states=['x0', 'x1', 'x2', 'x3'],
                     transitions=[('x0', 'a', 'x1'), ('x1', 'a', 'x1'), ('x1', 'b', 'x2'),
                                  ('x2', 'b', 'x2'), ('x2', 'a', 'x3'), ('x3', 'a', 'x0')],
                     alphabet=['a', 'b'], name='looped')
        languages = builtin_languages()
        for lts in (looped, make_word_chain('aabb'), random_lts(1), random_lts(2)):
            for name in ('ANBN', 'ANBAN'):
                language = languages[name]
                expected = frozenset(
                    (s, t) for s in lts.states for t in lts.states
                    if not pda_empty(intersect_regular(language.pda, lts.to_nfa(s, t, alphabet=language.alphabet)))
                )
                assert PushdownReachability(language.acceptor, lts).relation() == expected

    def test_pdl_evaluation(self):
        """Test the semantics of PDL on small examples."""
        path = make_word_chain('aabb')
        languages = builtin_languages()
        p = pdl.Prop('p')
        assert eval_pdl(path, pdl.Diamond('ANBN', p), languages) == frozenset(['s0'])
        assert eval_pdl(path, pdl.Box('ANBN', p), languages) == frozenset(['s0', 's2', 's3', 's4'])
        assert eval_pdl(path, pdl.TT, languages) == frozenset(path.states)
        assert eval_pdl(path, pdl.FF, languages) == frozenset()
        assert eval_pdl(path, pdl.And(pdl.Diamond('ANBN', p), pdl.Not(p)), languages) == frozenset(['s0'])
        empty = LanguageRef('EMPTY', Nfa(states=['s'], alphabet=['a', 'b'], transitions=[],
                                         initial='s', accepting=[]))
        table = dict(EMPTY=empty)
        assert eval_pdl(path, pdl.Diamond('EMPTY', p), table) == frozenset()
        assert eval_pdl(path, pdl.Box('EMPTY', p), table) == frozenset(path.states)
        self.assertRaises(InputError, eval_pdl, path, pdl.Diamond('NOPE', p), languages)
        narrow = dict(A=LanguageRef('A', make_star('a', 'A', alphabet=['a'])), ANBN=languages['ANBN'])
        self.assertRaises(InputError, eval_pdl, path, pdl.And(pdl.Diamond('A', p), pdl.Diamond('ANBN', p)), narrow)

    def test_formula_enumeration(self):
        """Test the enumeration of formulas of bounded depth and size."""
        p = pdl.Prop('p')
        assert list(enumerate_formulas([], ['p'], 0, 3)) == [p, pdl.And(p, p), pdl.Or(p, p)]
        assert list(enumerate_formulas(['L'], ['p', 'q'], 1, 1)) == [p, pdl.Prop('q')]
        assert list(enumerate_formulas(['L'], ['p'], 1, 2)) == [p, pdl.Not(p), pdl.Diamond('L', p), pdl.Box('L', p)]
        formulas = list(enumerate_formulas(['L', 'M'], ['p'], 2, 5))
        assert len(set(formulas)) == len(formulas)
        assert all(modal_depth(f) <= 2 and formula_size(f) <= 5 for f in formulas)
        assert pdl.Diamond('L', pdl.Not(p)) in formulas
        assert pdl.Diamond('L', pdl.Not(p)) not in list(enumerate_formulas(['L'], ['p'], 1, 5))
        assert pdl.Diamond('L', pdl.Not(p)) in list(enumerate_formulas(['L'], ['p'], 1, 5, 'modal'))
        self.assertRaises(InputError, list, enumerate_formulas(['L'], ['p'], 1, 0))

    # FLC.

    def test_flc_basics(self):
        """Test the identity, the empty fixpoint and atom tables."""
        lts = random_lts(3)
        identity = eval_flc(lts, flc.Tau())
        for subset in ([], [0], [1, 3], lts.states):
            assert identity(subset) == frozenset(subset)
        assert eval_flc(lts, flc.Mu('X', flc.Var('X')))(lts.states) == frozenset()
        assert eval_flc(lts, flc.Nu('X', flc.Var('X')))([]) == frozenset(lts.states)
        evaluator = FlcEvaluator(lts=lts)
        assert evaluator.satisfying(flc.Or(flc.Atom('p'), flc.NegAtom('p'))) == frozenset(lts.states)
        assert evaluator.satisfying(flc.TT) == frozenset(lts.states)
        assert evaluator.satisfying(flc.FF) == frozenset()
        self.assertRaises(InputError, eval_flc, lts, flc.Var('X'))

    def test_flc_environment(self):
        """Test the evaluation of formulas with free variables."""
        chain = make_chain_b(2)
        goal = eval_flc(chain, flc.Atom('p'))
        transformer = eval_flc(chain, flc.chop(flc.Diamond('b'), flc.Var('X')), Environment(X=goal))
        assert transformer(chain.states) == frozenset([1])
        other = eval_flc(make_chain_b(3), flc.Atom('p'))
        self.assertRaises(InputError, eval_flc, chain, flc.Var('X'), Environment(X=other))

    def test_chain_unfolding(self):
        """Test ``<a^n b^n>p`` on single paths ``a^i b^j`` against the unfolding of the fixpoint."""
        formula = build_property('dia_anbn').flc
        for i in range(7):
            for j in range(7):
                path = make_word_chain('a' * i + 'b' * j)
                assert holds(path, path.initial, formula) == (i == j and i >= 1), (i, j)

    def test_evaluation_modes_agree(self):
        """Test that the demand driven and the tabulated evaluation agree."""
        for seed in range(5):
            lts = random_lts(seed, size=6)
            for name in PROPERTY_NAMES:
                for guarded in (False, True):
                    formula = build_property(name, guarded=guarded).flc
                    demand = FlcEvaluator(lts=lts, mode='demand').satisfying(formula)
                    tabulated = FlcEvaluator(lts=lts, mode='tabulated').satisfying(formula)
                    assert demand == tabulated, (seed, name, guarded)

    def test_state_cap(self):
        """Test that the tabulated mode respects the state cap."""
        chain = make_chain_b(14)
        self.assertRaises(ResourceError, FlcEvaluator(lts=chain, mode='tabulated').evaluate, flc.Atom('p'))
        assert FlcEvaluator(lts=chain, mode='demand').satisfying(flc.Atom('p')) == frozenset([0])
        assert FlcEvaluator(lts=chain, mode='tabulated', state_cap=20).satisfying(flc.Atom('p')) == frozenset([0])
        with PatchedItem(os.environ, STATE_CAP_VARIABLE, '20'):
            assert FlcEvaluator(lts=chain, mode='tabulated').satisfying(flc.Atom('p')) == frozenset([0])
        self.assertRaises(InputError, setattr, FlcEvaluator(lts=chain), 'mode', 'lazy')

    def test_closed_formula_cache(self):
        """Test that evaluators reuse the transformers of closed formulas."""
        path = make_word_chain('aabb')
        formula = build_property('dia_anbn').flc
        evaluator = FlcEvaluator(lts=path, mode='tabulated', state_cap=10)
        first = evaluator.evaluate(formula)
        assert evaluator.evaluate(formula) is first
        assert evaluator.evaluate(build_property('dia_anbn').flc) is first
        evaluator.mode = 'demand'
        demand = evaluator.evaluate(formula)
        assert demand is not first
        demand_states = evaluator.satisfying(formula)
        assert demand_states == FlcEvaluator(lts=path, mode='tabulated').satisfying(formula)
        assert path.initial in demand_states
        # The state cap is still enforced for cached formulas.
        evaluator.mode = 'tabulated'
        evaluator.state_cap = 2
        self.assertRaises(ResourceError, evaluator.evaluate, formula)
        # Formulas with bindings aren't cached.
        evaluator.state_cap = 10
        identity = evaluator.transformer(lambda mask: mask)
        bound = flc.chop(flc.Diamond('b'), flc.Var('X'))
        assert evaluator.evaluate(bound, {'X': identity}) is not evaluator.evaluate(bound, {'X': identity})
        assert all(key != bound for mode, key in evaluator.closed_results)

    def test_monotonicity(self):
        """Test that the transformers of all properties are monotone."""
        for seed in range(4):
            lts = random_lts(seed)
            for name in PROPERTY_NAMES:
                for guarded in (False, True):
                    formula = build_property(name, guarded=guarded).flc
                    for part in (formula, formula.left):
                        for mode in ('demand', 'tabulated'):
                            assert eval_flc(lts, part, mode=mode).is_monotone(samples=200), (seed, name, mode)
        space = StateSpace(random_lts(0))
        complement = PredicateTransformer(space=space, function=lambda mask: space.full & ~mask)
        assert not complement.is_monotone()

    def test_fixpoint_ordering(self):
        """Test that least fixpoints are below greatest fixpoints."""
        a, b, z = flc.Diamond('a'), flc.Diamond('b'), flc.Var('Z')
        body = flc.Or(flc.chop(a, b), flc.chop(a, z, b))
        for seed in range(3):
            lts = random_lts(seed)
            least = eval_flc(lts, flc.Mu('Z', body))
            greatest = eval_flc(lts, flc.Nu('Z', body))
            assert least.is_below(greatest, samples=200)
        lts = random_lts(0)
        empty = eval_flc(lts, flc.Mu('X', flc.Var('X')))
        full = eval_flc(lts, flc.Nu('X', flc.Var('X')))
        assert empty.is_below(full)
        assert not full.is_below(empty)

    def test_weak_equivalence(self):
        """Test that closed formulas hold at the same states as their composition with ``tt``."""
        lts = random_lts(4)
        evaluator = FlcEvaluator(lts=lts)
        for name in PROPERTY_NAMES:
            formula = build_property(name).flc
            assert evaluator.satisfying(formula) == evaluator.satisfying(flc.chop(formula, flc.TT))

    def test_diabox_separation(self):
        """Test that ``<a^n>[b^n]`` separates the witness pair for all instances."""
        guarded = build_property('dia_an_box_bn', guarded=True).flc
        for m, k, d in WITNESS_PARAMETERS:
            for cross_edge in (False, True):
                first, second = make_witness_diabox(m, k, d, cross_edge=cross_edge)
                assert holds(first, first.initial, guarded), (m, k, d, cross_edge)
                assert not holds(second, second.initial, guarded), (m, k, d, cross_edge)
        # Without the guard the box holds vacuously at a-chain states.
        first, second = make_witness_diabox(1, 1, 1)
        verbatim = build_property('dia_an_box_bn').flc
        assert holds(first, first.initial, verbatim)
        assert holds(second, second.initial, verbatim)

    def test_anban_separation(self):
        """Test that ``<a^n>[b]<a^n>`` separates the witness pair for all instances."""
        guarded = build_property('dia_an_box_b_dia_an', guarded=True).flc
        for m, k, d in WITNESS_PARAMETERS:
            for cross_edge in (False, True):
                first, second = make_witness_an_b_an(m, k, d, cross_edge=cross_edge)
                assert holds(first, first.initial, guarded), (m, k, d, cross_edge)
                assert not holds(second, second.initial, guarded), (m, k, d, cross_edge)
        first, second = make_witness_an_b_an(1, 1, 1)
        anban = build_property('dia_anban').flc
        assert holds(first, first.initial, anban)
        assert holds(second, second.initial, anban)

    @settings(max_examples=100, deadline=None)
    @given(transition_systems())
    def test_semantics_oracles(self, lts):
        """Test both model checkers against path based oracles on random transition systems."""
        demand = FlcEvaluator(lts=lts)
        tabulated = FlcEvaluator(lts=lts, mode='tabulated')
        for name in PROPERTY_NAMES:
            for guarded in (False, True):
                formula = build_property(name, guarded=guarded).flc
                expected = oracle(lts, name, guarded)
                assert demand.satisfying(formula) == expected, (name, guarded)
                assert tabulated.satisfying(formula) == expected, (name, guarded)
        checker = PdlChecker(lts=lts, languages=builtin_languages())
        p = pdl.Prop('p')
        assert checker.evaluate(pdl.Diamond('ANBN', p)) == oracle(lts, 'dia_anbn')
        assert checker.evaluate(pdl.Diamond('ANBAN', p)) == oracle(lts, 'dia_anban')
        assert checker.evaluate(pdl.Box('ANBN', p)) == box_anbn_oracle(lts)

    def test_vpflc_recognizer(self):
        """Test the syntactic check for the visibly pushdown fragment."""
        call_return = AlphabetPartition(calls=['a'], returns=['b'])
        assert is_vpflc(build_property('dia_anbn').flc, call_return)
        assert is_vpflc(build_property('dia_an_box_bn').flc, call_return)
        assert is_vpflc(build_property('game_iter').flc, call_return)
        assert is_vpflc(flc.Atom('q'), call_return)
        assert not is_vpflc(flc.Diamond('a'), call_return)
        assert not is_vpflc(flc.Tau(), call_return)
        internal = AlphabetPartition(internals=['a', 'b'])
        assert not is_vpflc(build_property('dia_anbn').flc, internal)
        anban = build_property('dia_anban').flc
        for calls, returns, internals in ((['a'], ['b'], []), (['b'], ['a'], []), ([], [], ['a', 'b']),
                                          (['a', 'b'], [], []), ([], ['a', 'b'], []), (['a'], [], ['b']),
                                          (['b'], [], ['a']), ([], ['a'], ['b']), ([], ['b'], ['a'])):
            assert not is_vpflc(anban, AlphabetPartition(calls, returns, internals))
        assert is_vpflc(flc.chop(flc.Diamond('i'), flc.Atom('q')), AlphabetPartition(internals=['i']))
        self.assertRaises(InputError, is_vpflc, flc.Diamond('c'), call_return)
        self.assertRaises(InputError, AlphabetPartition, ['a'], ['a'])

    def test_builtin_properties(self):
        """Test the property builder."""
        built = build_property('dia_anbn')
        assert built.pdl == pdl.Diamond('ANBN', pdl.Prop('p'))
        assert built.language.name == 'ANBN'
        assert build_property('dia_anban').language.language_class == 'CFL'
        assert build_property('dia_an_box_bn').pdl is None
        assert format_flc(build_property('dia_an_box_bn').flc) == 'mu Z . (<a> ; [b] | <a> ; Z ; [b]) ; p'
        assert build_property('game_iter', guarded=True) == build_property('game_iter')
        self.assertRaises(InputError, build_property, 'dia_nothing')

    # Text formats.

    def test_lts_format(self):
        """Test parsing and serializing transition systems."""
        lts = parse_lts("state 0 p\nstate 1\ninit 1\ntrans 1 b 0")
        assert lts.states == ('0', '1')
        assert lts.initial == '1'
        assert lts.transitions == frozenset([('1', 'b', '0')])
        assert lts.labelling['0'] == frozenset(['p'])
        _, second = make_witness_diabox(1, 2, 1, cross_edge=True)
        parsed = parse_lts(serialize_lts(second))
        assert parsed.states == second.states
        assert parsed.transitions == second.transitions
        assert parsed.labelling == second.labelling
        assert parsed.initial == second.initial
        assert parsed.alphabet == second.alphabet
        try:
            parse_lts("state 0\ntrans 0 b 1\n")
            assert False, "Expected a parse error!"
        except ParseError as e:
            assert e.line == 2
        self.assertRaises(ParseError, parse_lts, "state 0\nstate 0\n")
        self.assertRaises(ParseError, parse_lts, "state 0\nfrobnicate 0\n")

    def test_automaton_format(self):
        """Test parsing and serializing automata."""
        for automaton in (make_anbn(), make_anban(), make_even_b(), derivative(make_anbn(), 'a')):
            parsed = parse_automaton(serialize_automaton(automaton))
            assert type(parsed) is type(automaton)
            for word in all_words('ab', 6):
                assert parsed.accepts(word) == automaton.accepts(word), (automaton.name, word)
        assert vpa_validate(parse_automaton(serialize_automaton(make_anbn())))
        text = dedent("""
            nfa EVEN
            alphabet a b
            start e
            accept e
            edge e b o
            edge o b e
        """)
        parsed = parse_automaton(text)
        assert parsed.name == 'EVEN'
        assert parsed.accepts('bb')
        self.assertRaises(ParseError, parse_automaton, "dfa\nstart q\n")
        self.assertRaises(ParseError, parse_automaton, "nfa\nalphabet a\n")

    def test_formula_syntax(self):
        """Test the formula parsers."""
        languages = builtin_languages()
        assert parse_pdl('<ANBN>p', languages) == pdl.Diamond('ANBN', pdl.Prop('p'))
        assert parse_pdl('p | q & ~r') == pdl.Or(pdl.Prop('p'), pdl.And(pdl.Prop('q'), pdl.Not(pdl.Prop('r'))))
        for formula in enumerate_formulas(['ANBN'], ['p'], 2, 5):
            assert parse_pdl(format_pdl(formula), languages) == formula
        expected = build_property('dia_an_box_bn').flc
        assert parse_flc('mu Z . (<a>;[b] | <a>;Z;[b]) ; p') == expected
        for name in PROPERTY_NAMES:
            for guarded in (False, True):
                formula = build_property(name, guarded=guarded).flc
                assert parse_flc(format_flc(formula)) == formula
        assert parse_flc('X ; p', variables=['X']) == flc.Chop(flc.Var('X'), flc.Atom('p'))
        self.assertRaises(InputError, parse_pdl, '<NOPE>p', languages)
        self.assertRaises(ParseError, parse_flc, 'mu . p')
        self.assertRaises(ParseError, parse_flc, 'mu X . !X')
        self.assertRaises(ParseError, parse_flc, 'p $ q')
        try:
            parse_pdl('p &\n  )')
            assert False, "Expected a parse error!"
        except ParseError as e:
            assert e.line == 2
            assert e.column == 3

    def test_manifest(self):
        """Test named languages, transition systems and formulas."""
        with TemporaryDirectory() as directory:
            with open(os.path.join(directory, 'evenb.nfa'), 'w') as handle:
                handle.write(serialize_automaton(make_even_b()))
            with open(os.path.join(directory, 'chain.lts'), 'w') as handle:
                handle.write(serialize_lts(make_chain_b(4, ['a', 'b'])))
            filename = os.path.join(directory, 'manifest.ini')
            with open(filename, 'w') as handle:
                handle.write(dedent("""
                    [language:EVEN]
                    file = evenb.nfa
                    class = reg

                    [lts:chain]
                    file = chain.lts

                    [formula:goal]
                    logic = pdl
                    text = <EVEN>p
                """))
            manifest = Manifest(filename=filename)
            logic, formula = manifest.formula('goal')
            assert logic == 'pdl'
            assert formula == pdl.Diamond('EVEN', pdl.Prop('p'))
            chain = manifest.structures['chain']
            assert chain.name == 'chain'
            assert eval_pdl(chain, formula, manifest) == frozenset(['0', '2', '4'])
            self.assertRaises(InputError, manifest.formula, 'missing')
            exit_code, output = run_cli(main, '--manifest=%s' % filename, 'check', '--lts=chain', '--formula=goal')
            assert exit_code == 0
            assert "holds at initial state: true" in output
            assert "satisfying states: 4, 2, 0" in output

    # Separation experiments.

    def test_chain_experiments(self):
        """Test that long b-chains are indistinguishable at the claimed states."""
        lab = self.create_lab()
        report = lab.run_chain_experiment([make_even_b(), make_star('b', 'BSTAR')], 1)
        assert (report.m, report.k, report.l) == (1, 2, 3)
        assert report.ok
        assert not report.disagreements
        assert report.formulas_checked > 0
        single = lab.run_chain_experiment([make_star('b', 'BSTAR')], 1)
        assert single.ok
        assert single.unclaimed_disagreements
        lab.size_cap = 4
        for languages in ([make_even_b()], [make_even_b(), make_star('b', 'BSTAR')]):
            assert lab.run_chain_experiment(languages, 2).ok
        lab.chain_slack = 2
        slack = lab.run_chain_experiment([make_even_b()], 1)
        assert slack.l == 5
        assert slack.ok

    def test_diabox_experiment(self):
        """Test the experiment for the witness pair of ``<a^n>[b^n]``."""
        lab = self.create_lab()
        languages = builtin_languages()
        report = lab.run_diabox_experiment([languages['ANBN'], languages['BSTAR']], 1)
        assert (report.m, report.k, report.l) == (1, 1, 2)
        assert report.indistinguishable
        assert report.flc_verdicts == (True, False)
        assert report.verbatim_verdicts == (True, True)
        assert report.ok
        assert lab.run_diabox_experiment([], 1).ok
        lab.cross_edge = False
        separated = lab.run_diabox_experiment([languages['ANBN']], 1)
        assert not separated.ok
        assert any(d['formula'] == '[ANBN]p' for d in separated.disagreements)

    def test_anban_experiment(self):
        """Test the experiment for the witness pair of ``<a^n>[b]<a^n>``."""
        lab = self.create_lab()
        languages = builtin_languages()
        for names in (['ANBAN'], ['ASTAR']):
            report = lab.run_an_b_an_experiment([languages[n] for n in names], 1)
            assert (report.m, report.k) == (1, 1)
            assert report.flc_verdicts == (True, False)
            assert report.ok, names

    def test_experiment_reports(self):
        """Test the rendering of experiment reports."""
        lab = self.create_lab()
        report = lab.run_experiment('diabox', [builtin_languages()['ANBN']], 1)
        document = json.loads(report.to_json())
        for key in ('experiment', 'params', 'm', 'k', 'l', 'formulas_checked', 'disagreements',
                    'flc_verdicts', 'indistinguishable', 'duration_ms'):
            assert key in document
        assert document['experiment'] == 'diabox'
        assert document['flc_verdicts'] == [True, False]
        assert document['params']['languages'] == ['ANBN']
        text = report.render()
        assert "indistinguishable" in text
        assert DISCLAIMER in text
        self.assertRaises(InputError, lab.run_experiment, 'spiral', [], 1)
        duplicates = [LanguageRef('X', make_even_b()), LanguageRef('X', make_star('b', 'B'))]
        self.assertRaises(InputError, lab.run_chain_experiment, duplicates, 1)
        self.assertRaises(InputError, lab.run_chain_experiment, [make_even_b()], 0)

    def test_configuration(self):
        """Test configuration files and environment variables."""
        with TemporaryDirectory() as directory:
            filename = os.path.join(directory, 'chopbench.ini')
            with open(filename, 'w') as handle:
                handle.write(dedent("""
                    [chopbench]
                    size-cap = 4
                    cross-edge = no
                    depth-measure = modal
                    chain-slack = 2
                """))
            lab = self.create_lab()
            lab.load_configuration_file(filename)
            assert lab.size_cap == 4
            assert lab.cross_edge is False
            assert lab.depth_measure == 'modal'
            assert lab.chain_slack == 2
            assert lab.slice_bound == 12
            self.assertRaises(InputError, lab.load_configuration_file, os.path.join(directory, 'missing.ini'))
        with PatchedItem(os.environ, 'CHOPBENCH_SIZE_CAP', '3'):
            assert SeparationLab(load_configuration_files=False).size_cap == 3
        lab = self.create_lab()
        self.assertRaises(InputError, setattr, lab, 'size_cap', 'zero')
        self.assertRaises(InputError, setattr, lab, 'flc_mode', 'eager')
        self.assertRaises(InputError, setattr, lab, 'depth_measure', 'fuzzy')
        for name in ('cross_edge', 'guarded_boxes', 'check_unclaimed'):
            self.assertRaises(InputError, setattr, lab, name, 'maybe')
        lab.guarded_boxes = 'off'
        assert lab.guarded_boxes is False

    # Command line interface.

    def test_cli_usage(self):
        """Test the usage message and the exit codes of the command line interface."""
        exit_code, output = run_cli(main, '--help')
        assert exit_code == 0
        assert "Usage: chopbench" in output
        exit_code, output = run_cli(main, '--unsupported-option')
        assert exit_code == 1
        exit_code, output = run_cli(main, 'frobnicate')
        assert exit_code == 1
        exit_code, output = run_cli(main, 'depth', '--formula=~<ANBN>p')
        assert exit_code == 0
        assert "modal depth: 2" in output
        assert "modal-only depth: 1" in output
        exit_code, output = run_cli(main, 'depth', '--formula=<ANBN>')
        assert exit_code == 2
        exit_code, output = run_cli(main, 'depth', '--formula=<NOPE>p')
        assert exit_code == 3
        exit_code, output = run_cli(main, 'depth')
        assert exit_code == 3
        # Invalid enumerated option values are input errors.
        with TemporaryDirectory() as directory:
            filename = os.path.join(directory, 'chain.lts')
            with open(filename, 'w') as handle:
                handle.write(serialize_lts(make_chain_b(2)))
            exit_code, output = run_cli(main, 'check', '--lts=%s' % filename, '--logic=flc',
                                        '--formula=<b> ; p', '--mode=lazy')
            assert exit_code == 3
            exit_code, output = run_cli(main, 'check', '--lts=%s' % filename, '--logic=flc',
                                        '--formula=<b> ; p', '--mode=tabulated')
            assert exit_code == 0
            assert "holds at initial state: false" in output
        exit_code, output = run_cli(main, 'separate', '--family=chain', '--langs=EVENB,BSTAR',
                                    '--depth=1', '--depth-measure=fuzzy')
        assert exit_code == 3

    def test_cli_configuration_errors(self):
        """Test that invalid configuration files and environment variables exit with the input error code."""
        with TemporaryDirectory() as directory:
            exit_code, output = run_cli(main, '--config=%s' % os.path.join(directory, 'missing.ini'),
                                        'depth', '--formula=p')
            assert exit_code == 3
            for option in ('flc-mode = eager', 'depth-measure = fuzzy', 'cross-edge = maybe'):
                filename = os.path.join(directory, 'chopbench.ini')
                with open(filename, 'w') as handle:
                    handle.write("[chopbench]\n%s\n" % option)
                exit_code, output = run_cli(main, '--config=%s' % filename, 'depth', '--formula=p')
                assert exit_code == 3, option
        with PatchedItem(os.environ, 'CHOPBENCH_SIZE_CAP', 'zero'):
            exit_code, output = run_cli(main, 'depth', '--formula=p')
            assert exit_code == 3
        with PatchedItem(os.environ, 'CHOPBENCH_FLC_MODE', 'eager'):
            exit_code, output = run_cli(main, 'depth', '--formula=p')
            assert exit_code == 3

    def test_cli_witness_and_check(self):
        """Test generating witness structures and checking properties on them."""
        with TemporaryDirectory() as directory:
            exit_code, output = run_cli(main, 'witness', '--family', 'chain', '--m', '1', '--k', '2', '--d', '1',
                                        '--output=%s' % directory)
            assert exit_code == 0
            assert os.path.isfile(os.path.join(directory, 'chain-3.lts'))
            assert os.path.isfile(os.path.join(directory, 'chain-5.lts'))
            chain = parse_lts(open(os.path.join(directory, 'chain-3.lts')).read())
            assert len(chain.states) == 4
            exit_code, output = run_cli(main, 'witness', '--family=diabox', '--m=1', '--k=1', '--d=1',
                                        '--output=%s' % directory)
            assert exit_code == 0
            first = os.path.join(directory, 'diabox-t1.lts')
            second = os.path.join(directory, 'diabox-t2.lts')
            exit_code, output = run_cli(main, 'check', '--lts=%s' % first, '--logic=flc', '--property=dia_an_box_bn')
            assert exit_code == 0
            assert "holds at initial state: true" in output
            exit_code, output = run_cli(main, 'check', '--lts=%s' % second, '--logic=flc',
                                        '--property=dia_an_box_bn', '--guarded')
            assert exit_code == 0
            assert "holds at initial state: false" in output
            exit_code, output = run_cli(main, 'check', '--lts=%s' % first, '--formula=<ANBN>p', '--state=2_4')
            assert exit_code == 0
            assert "holds at state 2_4: true" in output
            exit_code, output = run_cli(main, 'check', '--lts=%s' % first, '--logic=pdl',
                                        '--property=dia_an_box_bn')
            assert exit_code == 3
            exit_code, output = run_cli(main, 'witness', '--family=diabox', '--m=0', '--k=1', '--d=1',
                                        '--output=%s' % directory)
            assert exit_code == 3

    def test_cli_pump(self):
        """Test computing and verifying pumping constants from the command line."""
        with TemporaryDirectory() as directory:
            filename = os.path.join(directory, 'evenb.nfa')
            with open(filename, 'w') as handle:
                handle.write(serialize_automaton(make_even_b()))
            exit_code, output = run_cli(main, 'pump', '--automata=%s' % filename, '--letter', 'b')
            assert exit_code == 0
            assert "m=1 k=2" in output
            exit_code, output = run_cli(main, 'pump', '--automata=%s,ANBN' % filename, '--letter=b',
                                        '--verify=20,5')
            assert exit_code == 0
            assert "verified for l <= 20 and j <= 5" in output

    def test_cli_separate(self):
        """Test running separation experiments from the command line."""
        exit_code, output = run_cli(main, 'separate', '--family=chain', '--langs=EVENB,BSTAR', '--depth=1', '--json')
        assert exit_code == 0
        document = json.loads(output)
        assert document['m'] == 1 and document['k'] == 2
        assert document['disagreements'] == []
        exit_code, output = run_cli(main, 'separate', '--family=diabox', '--langs=ANBN', '--depth=1',
                                    '--size-cap=4')
        assert exit_code == 0
        assert "FLC verdicts" in output
        exit_code, output = run_cli(main, 'separate', '--family=diabox', '--langs=ANBN', '--depth=1',
                                    '--no-cross-edge')
        assert exit_code == 5

    def test_cli_misc(self):
        """Test the vpcheck, derive and reach commands."""
        exit_code, output = run_cli(main, 'vpcheck', '--formula=mu Z . (<a>;[b] | <a>;Z;[b]) ; p',
                                    '--calls=a', '--returns=b')
        assert exit_code == 0
        assert "vpFLC: true" in output
        exit_code, output = run_cli(main, 'vpcheck', '--formula=mu Z . (<a>;<b>;<a> | <a>;Z;<a>) ; p',
                                    '--calls=a', '--returns=b')
        assert exit_code == 0
        assert "vpFLC: false" in output
        exit_code, output = run_cli(main, 'vpcheck', '--formula=<c>', '--calls=a', '--returns=b')
        assert exit_code == 3
        exit_code, output = run_cli(main, 'derive', '--automaton=ANBN', '--letter=a')
        assert exit_code == 0
        derived = parse_automaton(output)
        assert derived.accepts('abb')
        assert not derived.accepts('ab')
        with TemporaryDirectory() as directory:
            filename = os.path.join(directory, 'path.lts')
            with open(filename, 'w') as handle:
                handle.write(serialize_lts(make_word_chain('aabb')))
            exit_code, output = run_cli(main, 'reach', '--lts=%s' % filename, '--lang=ANBN', '--explain')
            assert exit_code == 0
            assert "s0 -> s4 (witness: aabb)" in output
            assert "s1 -> s3 (witness: ab)" in output
            assert "(2 pairs)" in output
