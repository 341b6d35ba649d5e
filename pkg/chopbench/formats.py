# chopbench: Model checking workbench for PDL over language classes and FLC.
#
# Author: The chopbench developers
# Last Change: October 16, 2026

"""
The :mod:`chopbench.formats` module reads and writes the text formats.

Transition systems, automata and formulas are stored in small line oriented
text formats. Blank lines are ignored and ``#`` starts a comment in all of
them. A transition system looks like this:

.. code-block:: none

   alphabet a b
   state 2
   state 1
   state 0 p
   init 2
   trans 2 b 1
   trans 1 b 0

An automaton starts with its kind (``nfa``, ``pda`` or ``vpa``) and an
optional name:

.. code-block:: none

   vpa ANBN
   alphabet a b
   calls a
   returns b
   start q0
   accept q3
   edge q0 a pop:_ push:B q1
   edge q1 a pop:B push:BA q1
   edge q1 b pop:B push:- q3

Finite automata use ``edge SOURCE LETTER TARGET``. The pushed string is
written bottom to top, ``_`` stands for the empty stack and ``-`` for the
empty push string. When the push string contains commas it's split on them,
otherwise every character is one stack symbol.

Formulas use the syntax documented by :func:`parse_flc()` and
:func:`parse_pdl()`. Named languages, transition systems and formulas can
be collected in a :class:`Manifest`.
"""

# Standard library modules.
import configparser
import logging
import os
import re
import string

# External dependencies.
from humanfriendly.text import compact, concatenate
from property_manager import PropertyManager, cached_property, required_property

# Modules included in our package.
from chopbench import flc, pdl
from chopbench.automata import BOTTOM, LANGUAGE_CLASSES, LanguageRef, Nfa, Pda, Vpa, vpa_validate
from chopbench.exceptions import InputError, ParseError
from chopbench.lts import Lts
from chopbench.utils import is_token

# Initialize a logger.
logger = logging.getLogger(__name__)

KEYWORDS = ('mu', 'nu', 'tau', 'tt', 'ff')
"""Words that can't be used as proposition, variable or language names (a tuple of strings)."""

TOKEN_SPECIFICATION = (
    ('newline', r'\n'),
    ('space', r'[ \t\r]+'),
    ('comment', r'#[^\n]*'),
    ('name', r"[A-Za-z0-9_']+"),
    ('symbol', r'[()<>\[\]|&;.~!]'),
    ('invalid', r'.'),
)
"""The token types of the formula syntax, in order of precedence."""

TOKEN_REGEX = re.compile('|'.join('(?P<%s>%s)' % pair for pair in TOKEN_SPECIFICATION))
"""Compiled regular expression that matches a single token of the formula syntax."""


class Token(object):

    """A token of the formula syntax with its position."""

    def __init__(self, kind, value, line, column):
        """Initialize a :class:`Token` object."""
        self.kind = kind
        self.value = value
        self.line = line
        self.column = column

    def __repr__(self):
        """Render a human friendly representation of a token."""
        return 'Token(%r, %r, %i:%i)' % (self.kind, self.value, self.line, self.column)


class Tokenizer(object):

    """Split formula text into tokens and hand them out to a recursive descent parser."""

    def __init__(self, text, filename=None):
        """
        Initialize a :class:`Tokenizer` object.

        :param text: The formula text (a string).
        :param filename: The name of the file that contained the text (used
                         in error messages, optional).
        :raises: :exc:`~chopbench.exceptions.ParseError` on characters that
                 aren't part of the syntax.
        """
        self.filename = filename
        self.tokens = []
        self.position = 0
        line, line_start = 1, 0
        for match in TOKEN_REGEX.finditer(text):
            kind, value = match.lastgroup, match.group()
            column = match.start() - line_start + 1
            if kind == 'newline':
                line, line_start = line + 1, match.end()
            elif kind == 'invalid':
                raise ParseError("Unexpected character %r" % value, line, column, filename)
            elif kind not in ('space', 'comment'):
                self.tokens.append(Token(kind, value, line, column))
        self.end_line, self.end_column = line, len(text) - line_start + 1

    @property
    def at_end(self):
        """:data:`True` when all tokens have been consumed."""
        return self.position >= len(self.tokens)

    def peek(self):
        """Get the value of the next token without consuming it (:data:`None` at the end)."""
        return None if self.at_end else self.tokens[self.position].value

    def next(self):
        """Consume and return the next token."""
        if self.at_end:
            raise self.error("Unexpected end of formula")
        token = self.tokens[self.position]
        self.position += 1
        return token

    def expect(self, value):
        """Consume the next token, which must have the given value."""
        token = self.next()
        if token.value != value:
            raise self.error("Expected %r but found %r" % (value, token.value), token)
        return token

    def expect_name(self, what):
        """Consume a name token that isn't a keyword."""
        token = self.next()
        if token.kind != 'name' or token.value in KEYWORDS:
            raise self.error("Expected %s but found %r" % (what, token.value), token)
        return token.value

    def accept(self, value):
        """Consume the next token when it has the given value (returns a boolean)."""
        if self.peek() == value:
            self.position += 1
            return True
        return False

    def finish(self):
        """Make sure all tokens were consumed."""
        if not self.at_end:
            token = self.tokens[self.position]
            raise self.error("Unexpected %r after the end of the formula" % token.value, token)

    def error(self, message, token=None):
        """Create a :exc:`~chopbench.exceptions.ParseError` at the position of `token` (or the end of the text)."""
        if token is None and not self.at_end:
            token = self.tokens[self.position]
        if token is None:
            return ParseError(message, self.end_line, self.end_column, self.filename)
        return ParseError(message, token.line, token.column, self.filename)


def parse_flc(text, variables=(), filename=None):
    """
    Parse an FLC formula.

    :param text: The formula text (a string).
    :param variables: Names that should be parsed as free variables.
    :param filename: The name of the file that contained the text (optional).
    :returns: An FLC formula.
    :raises: :exc:`~chopbench.exceptions.ParseError` on syntax errors.

    The syntax, from loosest to tightest binding, is ``F | G``, ``F & G``
    and ``F ; G`` (right associative) followed by the units ``mu X . F``
    and ``nu X . F`` (the body is a single unit, so ``mu X . (F) ; G`` chops
    the fixpoint with ``G``),
    ``(F)``, ``tt``, ``ff``, ``tau``, ``<a>``, ``[a]``, ``!q`` and names. A
    name bound by an enclosing fixpoint (or listed in `variables`) is a
    variable, any other name is a proposition.

    >>> from chopbench.formats import parse_flc
    >>> from chopbench.flc import format_flc
    >>> format_flc(parse_flc('mu Z . (<a>;<b> | <a>;Z;<b>) ; p'))
    'mu Z . (<a> ; <b> | <a> ; Z ; <b>) ; p'
    """
    tokens = Tokenizer(text, filename)
    formula = FlcParser(tokens, variables).parse_disjunction()
    tokens.finish()
    return formula


class FlcParser(object):

    """Recursive descent parser for FLC formulas (see :func:`parse_flc()`)."""

    def __init__(self, tokens, variables=()):
        """Initialize an :class:`FlcParser` object."""
        self.tokens = tokens
        self.scope = [set(variables)]

    def is_variable(self, name):
        """Check whether a name is bound in the current scope."""
        return any(name in frame for frame in self.scope)

    def parse_disjunction(self):
        """Parse ``F | G | ...``."""
        formula = self.parse_conjunction()
        while self.tokens.accept('|'):
            formula = flc.Or(formula, self.parse_conjunction())
        return formula

    def parse_conjunction(self):
        """Parse ``F & G & ...``."""
        formula = self.parse_chop()
        while self.tokens.accept('&'):
            formula = flc.And(formula, self.parse_chop())
        return formula

    def parse_chop(self):
        """Parse ``F ; G ; ...`` (right associative)."""
        formula = self.parse_unit()
        if self.tokens.accept(';'):
            return flc.Chop(formula, self.parse_chop())
        return formula

    def parse_unit(self):
        """Parse a fixpoint, a parenthesized formula or an atomic formula."""
        token = self.tokens.next()
        value = token.value
        if value in ('mu', 'nu'):
            variable = self.tokens.expect_name("a variable name")
            self.tokens.expect('.')
            self.scope.append(set([variable]))
            body = self.parse_unit()
            self.scope.pop()
            return (flc.Mu if value == 'mu' else flc.Nu)(variable, body)
        if value == '(':
            formula = self.parse_disjunction()
            self.tokens.expect(')')
            return formula
        if value == 'tt':
            return flc.TT
        if value == 'ff':
            return flc.FF
        if value == 'tau':
            return flc.Tau()
        if value in ('<', '['):
            letter = self.tokens.expect_name("a letter")
            self.tokens.expect('>' if value == '<' else ']')
            return (flc.Diamond if value == '<' else flc.Box)(letter)
        if value == '!':
            name = self.tokens.expect_name("a proposition")
            if self.is_variable(name):
                raise self.tokens.error("Variables can't be negated (%s)" % name, token)
            return flc.NegAtom(name)
        if token.kind == 'name' and value not in KEYWORDS:
            return flc.Var(value) if self.is_variable(value) else flc.Atom(value)
        raise self.tokens.error("Unexpected %r" % value, token)


def parse_pdl(text, languages=None, filename=None):
    """
    Parse a PDL formula.

    :param text: The formula text (a string).
    :param languages: A dictionary mapping language names to
                      :class:`~chopbench.automata.LanguageRef` objects (or a
                      :class:`Manifest`). When given, the language names used
                      by the formula must exist and share their alphabet.
    :param filename: The name of the file that contained the text (optional).
    :returns: A PDL formula.
    :raises: :exc:`~chopbench.exceptions.ParseError` on syntax errors and
             :exc:`~chopbench.exceptions.InputError` on unknown languages.

    The syntax is ``F | G``, ``F & G`` (binding tighter than ``|``), ``~F``,
    ``<L>F``, ``[L]F``, ``(F)``, ``tt``, ``ff`` and proposition names.
    """
    tokens = Tokenizer(text, filename)
    formula = PdlParser(tokens).parse_disjunction()
    tokens.finish()
    if languages is not None:
        pdl.check_languages(formula, getattr(languages, 'languages', languages))
    return formula


class PdlParser(object):

    """Recursive descent parser for PDL formulas (see :func:`parse_pdl()`)."""

    def __init__(self, tokens):
        """Initialize a :class:`PdlParser` object."""
        self.tokens = tokens

    def parse_disjunction(self):
        """Parse ``F | G | ...``."""
        formula = self.parse_conjunction()
        while self.tokens.accept('|'):
            formula = pdl.Or(formula, self.parse_conjunction())
        return formula

    def parse_conjunction(self):
        """Parse ``F & G & ...``."""
        formula = self.parse_unary()
        while self.tokens.accept('&'):
            formula = pdl.And(formula, self.parse_unary())
        return formula

    def parse_unary(self):
        """Parse negations, modalities and atomic formulas."""
        token = self.tokens.next()
        value = token.value
        if value == '~':
            return pdl.Not(self.parse_unary())
        if value in ('<', '['):
            name = self.tokens.expect_name("a language name")
            self.tokens.expect('>' if value == '<' else ']')
            return (pdl.Diamond if value == '<' else pdl.Box)(name, self.parse_unary())
        if value == '(':
            formula = self.parse_disjunction()
            self.tokens.expect(')')
            return formula
        if value == 'tt':
            return pdl.TT
        if value == 'ff':
            return pdl.FF
        if token.kind == 'name' and value not in KEYWORDS:
            return pdl.Prop(value)
        raise self.tokens.error("Unexpected %r" % value, token)


def meaningful_lines(text):
    """Generate ``(line_number, fields)`` tuples for the lines of a text format (comments and blank lines are skipped)."""
    for number, line in enumerate(text.splitlines(), start=1):
        fields = line.split('#', 1)[0].split()
        if fields:
            yield number, fields


def parse_lts(text, filename=None):
    """
    Parse a transition system.

    :param text: The text of the transition system (a string).
    :param filename: The name of the file that contained the text (optional).
    :returns: An :class:`~chopbench.lts.Lts` object whose states are strings.
    :raises: :exc:`~chopbench.exceptions.ParseError` on syntax errors and
             references to undeclared states.
    """
    states, transitions, labelling = [], [], {}
    initial = alphabet = None
    for number, fields in meaningful_lines(text):
        keyword, arguments = fields[0], fields[1:]
        if keyword == 'state' and arguments:
            if arguments[0] in labelling:
                raise ParseError("Duplicate state %r" % arguments[0], number, filename=filename)
            states.append(arguments[0])
            labelling[arguments[0]] = arguments[1:]
        elif keyword == 'init' and len(arguments) == 1:
            initial = arguments[0]
        elif keyword == 'trans' and len(arguments) == 3:
            transitions.append((number, tuple(arguments)))
        elif keyword == 'alphabet':
            alphabet = arguments
        else:
            raise ParseError("Can't parse line %r" % ' '.join(fields), number, filename=filename)
    for number, (source, letter, target) in transitions:
        for state in (source, target):
            if state not in labelling:
                raise ParseError("Transition refers to undeclared state %r" % state, number, filename=filename)
    if initial is not None and initial not in labelling:
        raise ParseError("The initial state %r isn't declared" % initial, filename=filename)
    try:
        return Lts(states=states, transitions=[t for _, t in transitions], labelling=labelling,
                   initial=initial, alphabet=alphabet,
                   name=os.path.splitext(os.path.basename(filename))[0] if filename else 'lts')
    except ParseError:
        raise
    except InputError as e:
        raise ParseError(str(e), filename=filename)


def serialize_lts(lts):
    """
    Render a transition system in the text format.

    :param lts: An :class:`~chopbench.lts.Lts` object.
    :returns: A string that :func:`parse_lts()` maps back to an equivalent
              transition system (states are converted to strings).
    """
    for state in lts.states:
        if not is_token(state):
            raise InputError("State %r can't be written to the text format!" % (state,))
    lines = ['# %s' % lts.describe(), 'alphabet %s' % ' '.join(sorted(lts.alphabet))]
    for state in lts.states:
        lines.append(' '.join(['state', str(state)] + sorted(lts.labelling[state])))
    if lts.initial is not None:
        lines.append('init %s' % lts.initial)
    for source, letter, target in sorted(lts.transitions, key=lambda t: (lts.state_index[t[0]], t[1], str(t[2]))):
        lines.append('trans %s %s %s' % (source, letter, target))
    return '\n'.join(lines) + '\n'


def parse_stack_string(value):
    """Parse the push string of a pushdown transition (``-`` is the empty string)."""
    if value == '-':
        return ()
    if ',' in value:
        return tuple(s for s in value.split(',') if s)
    return tuple(value)


def parse_automaton(text, filename=None):
    """
    Parse an automaton.

    :param text: The text of the automaton (a string).
    :param filename: The name of the file that contained the text (optional).
    :returns: An :class:`~chopbench.automata.Nfa`,
              :class:`~chopbench.automata.Pda` or
              :class:`~chopbench.automata.Vpa` object.
    :raises: :exc:`~chopbench.exceptions.ParseError` on syntax errors and
             inconsistent automata.
    """
    lines = list(meaningful_lines(text))
    if not lines or lines[0][1][0] not in ('nfa', 'pda', 'vpa'):
        raise ParseError("An automaton starts with 'nfa', 'pda' or 'vpa'", lines[0][0] if lines else 1,
                         filename=filename)
    kind = lines[0][1][0]
    name = lines[0][1][1] if len(lines[0][1]) > 1 else None
    if name is None:
        name = os.path.splitext(os.path.basename(filename))[0] if filename else kind.upper()
    options = dict(alphabet=[], calls=[], returns=[], internals=[], accepting=[])
    initial = stack_alphabet = None
    transitions = []
    for number, fields in lines[1:]:
        keyword, arguments = fields[0], fields[1:]
        if keyword in ('alphabet', 'calls', 'returns', 'internals') and (kind == 'vpa' or keyword == 'alphabet'):
            options[keyword].extend(arguments)
        elif keyword == 'stack' and kind != 'nfa':
            stack_alphabet = arguments
        elif keyword == 'start' and len(arguments) == 1:
            initial = arguments[0]
        elif keyword == 'accept':
            options['accepting'].extend(arguments)
        elif keyword == 'edge' and kind == 'nfa' and len(arguments) == 3:
            transitions.append(tuple(arguments))
        elif keyword == 'edge' and kind != 'nfa' and len(arguments) == 5 \
                and arguments[2].startswith('pop:') and arguments[3].startswith('push:'):
            source, letter, pop, push, target = arguments
            pop = pop[len('pop:'):]
            transitions.append((source, letter, BOTTOM if pop == '_' else pop,
                                parse_stack_string(push[len('push:'):]), target))
        else:
            raise ParseError("Can't parse line %r" % ' '.join(fields), number, filename=filename)
    if initial is None:
        raise ParseError("The automaton doesn't define its start state", filename=filename)
    states = [initial]
    for t in transitions:
        states.extend((t[0], t[-1]))
    states.extend(options['accepting'])
    arguments = dict(states=states, alphabet=options['alphabet'], transitions=transitions,
                     initial=initial, accepting=options['accepting'], name=name)
    try:
        if kind == 'nfa':
            return Nfa(**arguments)
        if kind == 'vpa':
            return Vpa(stack_alphabet=stack_alphabet, calls=options['calls'], returns=options['returns'],
                       internals=options['internals'], **arguments)
        return Pda(stack_alphabet=stack_alphabet, **arguments)
    except ParseError:
        raise
    except InputError as e:
        raise ParseError(str(e), filename=filename)


def stack_renaming(pda):
    """
    Choose names for the stack symbols of an automaton that survive the text format.

    :returns: A tuple with a dictionary mapping stack symbols to names and a
              boolean that tells whether push strings must be comma separated.
    """
    symbols = sorted(pda.stack_alphabet, key=repr)
    if all(isinstance(s, str) and len(s) == 1 and s not in ',-_#' and not s.isspace() for s in symbols):
        return dict((s, s) for s in symbols), False
    available = [c for c in string.ascii_uppercase + string.ascii_lowercase + string.digits
                 if c not in pda.alphabet]
    if len(symbols) <= len(available):
        return dict(zip(symbols, available)), False
    return dict((s, 'Z%i' % i) for i, s in enumerate(symbols)), True


def serialize_automaton(automaton):
    """
    Render an automaton in the text format.

    :param automaton: An :class:`~chopbench.automata.Nfa`,
                      :class:`~chopbench.automata.Pda` or
                      :class:`~chopbench.automata.Vpa` object.
    :returns: A string that :func:`parse_automaton()` maps back to an
              equivalent automaton. States (and stack symbols) that can't be
              written as tokens are renamed.
    """
    if all(is_token(q) for q in automaton.states):
        names = dict((q, str(q)) for q in automaton.states)
    else:
        names = dict((q, 'q%i' % i) for i, q in enumerate(automaton.states))
    if isinstance(automaton, Vpa):
        kind = 'vpa'
    elif isinstance(automaton, Pda):
        kind = 'pda'
    else:
        kind = 'nfa'
    header = kind if not is_token(automaton.name) else '%s %s' % (kind, automaton.name)
    lines = [header, 'alphabet %s' % ' '.join(sorted(automaton.alphabet))]
    if kind == 'vpa':
        for keyword in ('calls', 'returns', 'internals'):
            letters = sorted(getattr(automaton, keyword))
            if letters:
                lines.append('%s %s' % (keyword, ' '.join(letters)))
    lines.append('start %s' % names[automaton.initial])
    accepting = [names[q] for q in automaton.states if q in automaton.accepting]
    if accepting:
        lines.append('accept %s' % ' '.join(accepting))
    if kind == 'nfa':
        edges = sorted('edge %s %s %s' % (names[s], a, names[t]) for s, a, t in automaton.transitions)
    else:
        symbols, separated = stack_renaming(automaton)
        if symbols:
            lines.append('stack %s' % ' '.join(sorted(symbols.values())))
        edges = []
        for t in automaton.transitions:
            if t.push:
                push = ','.join(symbols[s] for s in t.push) + ',' if separated else ''.join(symbols[s] for s in t.push)
            else:
                push = '-'
            pop = '_' if t.pop == BOTTOM else symbols[t.pop]
            edges.append('edge %s %s pop:%s push:%s %s' % (names[t.source], t.letter, pop, push, names[t.target]))
        edges.sort()
    return '\n'.join(lines + edges) + '\n'


def read_file(filename):
    """Read a text file (raises :exc:`~chopbench.exceptions.InputError` when that fails)."""
    try:
        with open(filename) as handle:
            return handle.read()
    except (IOError, OSError) as e:
        raise InputError("Failed to read %s! (%s)" % (filename, e))


def load_lts(filename):
    """Read a transition system from a file (see :func:`parse_lts()`)."""
    return parse_lts(read_file(filename), filename=filename)


def load_automaton(filename):
    """Read an automaton from a file (see :func:`parse_automaton()`)."""
    return parse_automaton(read_file(filename), filename=filename)


def load_language(filename, name=None, language_class=None):
    """
    Read an automaton from a file and wrap it in a :class:`~chopbench.automata.LanguageRef`.

    :param filename: The name of the automaton file.
    :param name: The name of the language (defaults to the name of the automaton).
    :param language_class: The class tag (``reg``, ``vpl`` or ``cfl``,
                           defaults to the class implied by the automaton).
    :raises: :exc:`~chopbench.exceptions.InputError` when the class tag
             doesn't match or a VPL acceptor violates the shape rules.
    """
    acceptor = load_automaton(filename)
    reference = LanguageRef(name or acceptor.name, acceptor, language_class)
    if reference.language_class == 'VPL' and not vpa_validate(acceptor):
        raise InputError("The automaton in %s isn't a valid visibly pushdown automaton!" % filename)
    return reference


class Manifest(PropertyManager):

    """
    A collection of named languages, transition systems and formulas.

    The manifest is an INI file:

    .. code-block:: ini

       [language:ANBN]
       file = anbn.vpa
       class = vpl

       [lts:chain]
       file = chain-4.lts

       [formula:goal]
       logic = pdl
       text = <ANBN>p

    Relative file names are resolved against the directory that contains
    the manifest.
    """

    @required_property
    def filename(self):
        """The pathname of the manifest (a string)."""

    @cached_property
    def parser(self):
        """The :class:`configparser.RawConfigParser` with the contents of :attr:`filename`."""
        parser = configparser.RawConfigParser()
        logger.debug("Loading manifest: %s", self.filename)
        try:
            if not parser.read(self.filename):
                raise InputError("Failed to load manifest! (%s)" % self.filename)
        except configparser.Error as e:
            raise ParseError(str(e), filename=self.filename)
        return parser

    @property
    def directory(self):
        """The directory that contains the manifest (a string)."""
        return os.path.dirname(os.path.abspath(self.filename))

    def entries(self, tag):
        """Get the ``(name, section)`` pairs of the sections named ``tag:name``."""
        result = []
        for section in self.parser.sections():
            prefix, _, name = section.partition(':')
            if prefix == tag and name:
                result.append((name, section))
        return result

    def option(self, section, option):
        """Get a required option of a section."""
        if not self.parser.has_option(section, option):
            raise InputError(compact("""
                Section [{section}] of {filename} doesn't define the
                required option '{option}'!
            """, section=section, filename=self.filename, option=option))
        return self.parser.get(section, option)

    def resolve(self, filename):
        """Resolve a file name relative to the directory of the manifest."""
        return os.path.join(self.directory, os.path.expanduser(filename))

    @cached_property
    def languages(self):
        """A dictionary mapping names to :class:`~chopbench.automata.LanguageRef` objects."""
        languages = {}
        for name, section in self.entries('language'):
            language_class = None
            if self.parser.has_option(section, 'class'):
                language_class = self.parser.get(section, 'class').upper()
                if language_class not in LANGUAGE_CLASSES:
                    raise InputError("Unknown language class %r in [%s]! (expected one of %s)"
                                     % (language_class, section, concatenate(LANGUAGE_CLASSES)))
            languages[name] = load_language(self.resolve(self.option(section, 'file')), name, language_class)
        return languages

    @cached_property
    def structures(self):
        """A dictionary mapping names to :class:`~chopbench.lts.Lts` objects."""
        structures = {}
        for name, section in self.entries('lts'):
            lts = load_lts(self.resolve(self.option(section, 'file')))
            lts.name = name
            structures[name] = lts
        return structures

    @cached_property
    def formulas(self):
        """A dictionary mapping names to ``(logic, text)`` tuples."""
        formulas = {}
        for name, section in self.entries('formula'):
            logic = self.option(section, 'logic').lower()
            if logic not in ('pdl', 'flc'):
                raise InputError("Unknown logic %r in [%s]! (expected pdl or flc)" % (logic, section))
            formulas[name] = (logic, self.option(section, 'text'))
        return formulas

    def formula(self, name):
        """Parse a named formula (returns a ``(logic, formula)`` tuple)."""
        if name not in self.formulas:
            raise InputError("The manifest %s doesn't define formula %r!" % (self.filename, name))
        logic, text = self.formulas[name]
        if logic == 'pdl':
            return logic, parse_pdl(text, self.languages, filename=self.filename)
        return logic, parse_flc(text, filename=self.filename)
