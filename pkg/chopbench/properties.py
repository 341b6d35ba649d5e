# chopbench: Model checking workbench for PDL over language classes and FLC.
#
# Author: The chopbench developers
# Last Change: October 16, 2026

"""
The :mod:`chopbench.properties` module contains the separating properties and builtin languages.

The five properties are the FLC formulas used by the separation experiments
(see :data:`PROPERTY_NAMES`). Two of them are also expressible in PDL over
context-free languages, for those :func:`build_property()` returns the PDL
formula and the language it refers to as well.
"""

# Standard library modules.
import collections
import logging

# External dependencies.
from humanfriendly.text import concatenate

# Modules included in our package.
from chopbench import flc, pdl
from chopbench.automata import BOTTOM, LanguageRef, Nfa, Pda, Vpa
from chopbench.exceptions import InputError
from chopbench.lts import GOAL_PROPOSITION

# Initialize a logger.
logger = logging.getLogger(__name__)

PROPERTY_NAMES = ('dia_anbn', 'dia_anban', 'game_iter', 'dia_an_box_bn', 'dia_an_box_b_dia_an')
"""The names accepted by :func:`build_property()` (a tuple of strings)."""

GUARDED_PROPERTIES = ('dia_an_box_bn', 'dia_an_box_b_dia_an')
"""The properties that have a guarded variant (a tuple of strings)."""

BuiltProperty = collections.namedtuple('BuiltProperty', 'name, flc, pdl, language')
"""
The result of :func:`build_property()`.

The fields are the property name, the FLC formula, the PDL formula (or
:data:`None`) and the :class:`~chopbench.automata.LanguageRef` used by the
PDL formula (or :data:`None`).
"""


def make_anbn():
    """Create the visibly pushdown automaton of ``{a^n b^n | n >= 1}`` (``a`` is a call, ``b`` a return)."""
    return Vpa(
        states=['q0', 'q1', 'q2', 'q3'],
        alphabet=['a', 'b'],
        transitions=[
            ('q0', 'a', BOTTOM, 'B', 'q1'),
            ('q1', 'a', 'B', 'BA', 'q1'),
            ('q1', 'a', 'A', 'AA', 'q1'),
            ('q1', 'b', 'A', '', 'q2'),
            ('q1', 'b', 'B', '', 'q3'),
            ('q2', 'b', 'A', '', 'q2'),
            ('q2', 'b', 'B', '', 'q3'),
        ],
        initial='q0',
        accepting=['q3'],
        calls=['a'],
        returns=['b'],
        name='ANBN',
    )


def make_anban():
    """Create a pushdown automaton of ``{a^n b a^n | n >= 1}``."""
    return Pda(
        states=['q0', 'q1', 'q2', 'q3'],
        alphabet=['a', 'b'],
        transitions=[
            ('q0', 'a', BOTTOM, 'B', 'q1'),
            ('q1', 'a', 'B', 'BA', 'q1'),
            ('q1', 'a', 'A', 'AA', 'q1'),
            ('q1', 'b', 'A', 'A', 'q2'),
            ('q1', 'b', 'B', 'B', 'q2'),
            ('q2', 'a', 'A', '', 'q2'),
            ('q2', 'a', 'B', '', 'q3'),
        ],
        initial='q0',
        accepting=['q3'],
        name='ANBAN',
    )


def make_star(letter, name, alphabet=('a', 'b')):
    """Create a finite automaton of ``letter*`` over `alphabet`."""
    return Nfa(states=['s'], alphabet=alphabet, transitions=[('s', letter, 's')],
               initial='s', accepting=['s'], name=name)


def make_even_b(alphabet=('a', 'b')):
    """Create a finite automaton of ``(bb)*`` over `alphabet`."""
    return Nfa(states=['even', 'odd'], alphabet=alphabet,
               transitions=[('even', 'b', 'odd'), ('odd', 'b', 'even')],
               initial='even', accepting=['even'], name='EVENB')


def builtin_languages():
    """
    Get the builtin languages.

    :returns: A dictionary mapping the names ``ANBN`` (VPL), ``ANBAN``
              (CFL), ``ASTAR``, ``BSTAR`` and ``EVENB`` (REG) to
              :class:`~chopbench.automata.LanguageRef` objects, all over the
              alphabet ``{a, b}``.
    """
    return dict((ref.name, ref) for ref in (
        LanguageRef('ANBN', make_anbn()),
        LanguageRef('ANBAN', make_anban()),
        LanguageRef('ASTAR', make_star('a', 'ASTAR')),
        LanguageRef('BSTAR', make_star('b', 'BSTAR')),
        LanguageRef('EVENB', make_even_b()),
    ))


def box_b(guarded):
    """Get ``[b]`` or, when `guarded` is :data:`True`, ``([b] & <b> ; tt)``."""
    if guarded:
        return flc.And(flc.Box('b'), flc.chop(flc.Diamond('b'), flc.TT))
    return flc.Box('b')


def build_property(name, guarded=False):
    """
    Build one of the separating properties.

    :param name: One of the strings in :data:`PROPERTY_NAMES`.
    :param guarded: :data:`True` to replace every ``[b]`` in the properties
                    listed in :data:`GUARDED_PROPERTIES` by ``([b] & <b> ;
                    tt)``, so that states without b-successors don't satisfy
                    the box vacuously (ignored for the other properties).
    :returns: A :class:`BuiltProperty` object.
    :raises: :exc:`~chopbench.exceptions.InputError` for unknown names.

    The properties are:

    ``dia_anbn``
      ``(mu Z . <a> ; <b> | <a> ; Z ; <b>) ; p``, equivalent to the PDL
      formula ``<ANBN>p``.

    ``dia_anban``
      ``(mu Z . <a> ; <b> ; <a> | <a> ; Z ; <a>) ; p``, equivalent to
      ``<ANBAN>p``.

    ``game_iter``
      ``(mu X . <a> ; [b] ; (p | X)) ; tt``: player one can force a visit to
      p by alternating a and b moves.

    ``dia_an_box_bn``
      ``(mu Z . <a> ; [b] | <a> ; Z ; [b]) ; p``: some a^n path leads to a
      state where all b^n paths end in p.

    ``dia_an_box_b_dia_an``
      ``(mu Z . <a> ; [b] ; <a> | <a> ; Z ; <a>) ; p``.
    """
    if name not in PROPERTY_NAMES:
        raise InputError("Unknown property %r! (expected one of %s)" % (name, concatenate(PROPERTY_NAMES)))
    a, b, z = flc.Diamond('a'), flc.Diamond('b'), flc.Var('Z')
    p = flc.Atom(GOAL_PROPOSITION)
    formula_pdl = language = None
    if name == 'dia_anbn':
        formula = flc.chop(flc.Mu('Z', flc.Or(flc.chop(a, b), flc.chop(a, z, b))), p)
        language = builtin_languages()['ANBN']
        formula_pdl = pdl.Diamond(language.name, pdl.Prop(GOAL_PROPOSITION))
    elif name == 'dia_anban':
        formula = flc.chop(flc.Mu('Z', flc.Or(flc.chop(a, b, a), flc.chop(a, z, a))), p)
        language = builtin_languages()['ANBAN']
        formula_pdl = pdl.Diamond(language.name, pdl.Prop(GOAL_PROPOSITION))
    elif name == 'game_iter':
        x = flc.Var('X')
        formula = flc.chop(flc.Mu('X', flc.chop(a, flc.Box('b'), flc.Or(p, x))), flc.TT)
    elif name == 'dia_an_box_bn':
        box = box_b(guarded)
        formula = flc.chop(flc.Mu('Z', flc.Or(flc.chop(a, box), flc.chop(a, z, box))), p)
    else:
        box = box_b(guarded)
        formula = flc.chop(flc.Mu('Z', flc.Or(flc.chop(a, box, a), flc.chop(a, z, a))), p)
    logger.debug("Built property %s: %s", name, flc.format_flc(formula))
    return BuiltProperty(name=name, flc=formula, pdl=formula_pdl, language=language)
