# chopbench: Model checking workbench for PDL over language classes and FLC.
#
# Author: The chopbench developers
# Last Change: October 16, 2026

"""
Usage: chopbench [OPTIONS] COMMAND [COMMAND_OPTIONS]

Evaluate PDL and FLC formulas on labelled transition systems, compute
pumping constants, generate witness structures and run separation
experiments.

Supported options:

  -c, --config=FILENAME

    Load a configuration file. Because the command line arguments are processed
    in the given order, you have the choice and responsibility to decide if
    command line options override configuration file options or vice versa.

    The default configuration files /etc/chopbench.ini and ~/.chopbench.ini
    are automatically loaded if they exist. This happens before environment
    variables and command line options are processed.

    Can also be set using the environment variable $CHOPBENCH_CONFIG.

  -m, --manifest=FILENAME

    Load a manifest of named languages, transition systems and formulas. The
    names can be used wherever a file name is expected below.

  -v, --verbose

    Make more noise (can be repeated).

  -q, --quiet

    Make less noise (can be repeated).

  -h, --help

    Show this message and exit.

Supported commands:

  check --lts=FILE --formula=FILE_OR_TEXT [--logic=pdl|flc] [--state=STATE]
        [--property=NAME] [--guarded] [--mode=demand|tabulated]

    Evaluate a formula (or one of the builtin FLC properties) and report
    whether it holds at the initial state (or the given state) together
    with the satisfying states.

  depth --formula=FILE_OR_TEXT

    Print the modal depth of a PDL formula.

  derive --automaton=FILE --letter=LETTER

    Print the derivative of a language by a letter as a pushdown automaton.

  pump --automata=FILE,... --letter=LETTER [--verify=L_MAX,J_MAX]

    Compute joint pumping constants of the unary slices of the given
    languages. With --verify the constants are checked against direct
    membership tests (exit code 5 when that fails).

  witness --family=chain|diabox|anban --m=M --k=K --d=D [--cross-edge]
          [--output=DIRECTORY]

    Write the generated structures to LTS files.

  separate --family=chain|diabox|anban --langs=FILE,... --depth=D
           [--size-cap=N] [--json] [--cross-edge|--no-cross-edge]
           [--guarded|--verbatim] [--depth-measure=strict|modal]
           [--chain-slack=N]

    Run a separation experiment and print its report (exit code 5 when the
    experiment contradicts its claim).

  vpcheck --formula=FILE_OR_TEXT --calls=LETTERS --returns=LETTERS
          [--internals=LETTERS]

    Check whether an FLC formula belongs to the visibly pushdown fragment.

  reach --lts=FILE --lang=FILE [--explain]

    Print the pairs of states connected by a word of a language. With
    --explain a shortest witness word is printed for every pair.

Languages can be given as automaton files, manifest names or one of the
builtin names ANBN, ANBAN, ASTAR, BSTAR and EVENB. Exit codes: 1 for usage
and unexpected errors, 2 for parse errors, 3 for invalid input, 4 for
exceeded resource limits and 5 for experiments that contradict their claim.
"""

# Standard library modules.
import getopt
import logging
import os
import sys

# External dependencies.
import coloredlogs
from humanfriendly.terminal import output, usage, warning
from humanfriendly.text import pluralize

# Modules included in our package.
from chopbench.automata import Nfa, derivative, intersect_regular, unary_slice
from chopbench.exceptions import ChopbenchError, DisagreementError, InputError
from chopbench.flc import AlphabetPartition, FlcEvaluator, is_vpflc
from chopbench.formats import (
    Manifest,
    load_language,
    load_lts,
    parse_flc,
    parse_pdl,
    read_file,
    serialize_automaton,
    serialize_lts,
)
from chopbench.lab import SeparationLab
from chopbench.lts import make_chain_b, make_witness_an_b_an, make_witness_diabox
from chopbench.pdl import PdlChecker, modal_depth, modal_only_depth, reach_relation
from chopbench.properties import build_property, builtin_languages
from chopbench.pumping import pumping_constants, verify_pumping
from chopbench.pushdown import pda_witness
from chopbench.utils import coerce_positive_integer, format_word, split_values

# Initialize a logger.
logger = logging.getLogger(__name__)


def main():
    """Command line interface for the ``chopbench`` program."""
    # Configure terminal output.
    coloredlogs.install()
    try:
        # Initialize the experiment configuration.
        lab = SeparationLab()
        manifest = None
        # Parse and validate the global command line options.
        options, arguments = getopt.getopt(sys.argv[1:], 'c:m:vqh', [
            'config=', 'manifest=', 'verbose', 'quiet', 'help',
        ])
        for option, value in options:
            if option in ('-c', '--config'):
                lab.load_configuration_file(value)
            elif option in ('-m', '--manifest'):
                manifest = Manifest(filename=value)
            elif option in ('-v', '--verbose'):
                coloredlogs.increase_verbosity()
            elif option in ('-q', '--quiet'):
                coloredlogs.decrease_verbosity()
            elif option in ('-h', '--help'):
                usage(__doc__)
                return
            else:
                assert False, "Unhandled option!"
        if not arguments:
            usage(__doc__)
            return
        command, arguments = arguments[0], arguments[1:]
        if command not in COMMANDS:
            raise getopt.GetoptError("Unknown command %r!" % command)
        handler, names = COMMANDS[command]
        command_options = CommandOptions(command, arguments, names)
    except ChopbenchError as e:
        warning("Failed to load the configuration or manifest: %s", e)
        sys.exit(e.exit_code)
    except Exception as e:
        warning("Failed to parse command line arguments: %s", e)
        sys.exit(1)
    # Run the requested command.
    try:
        handler(Session(lab, manifest), command_options)
    except ChopbenchError as e:
        logger.error("%s", e)
        sys.exit(e.exit_code)
    except Exception:
        logger.exception("Caught an unhandled exception!")
        sys.exit(1)


class CommandOptions(object):

    """The parsed options of a command."""

    def __init__(self, command, arguments, names):
        """
        Parse the options of a command.

        :param command: The name of the command (a string).
        :param arguments: The command line arguments after the command.
        :param names: The long options accepted by the command (in the
                      format of :func:`getopt.gnu_getopt()`).
        :raises: :exc:`getopt.GetoptError` on unknown options or positional arguments.
        """
        self.command = command
        self.values = {}
        options, positional = getopt.gnu_getopt(arguments, '', names)
        if positional:
            raise getopt.GetoptError("Unexpected argument(s) to %s: %s" % (command, ' '.join(positional)))
        for option, value in options:
            self.values.setdefault(option[2:], []).append(value)

    def get(self, name, default=None):
        """Get the last value of an option (or `default`)."""
        values = self.values.get(name)
        return values[-1] if values else default

    def flag(self, name):
        """Check whether an option without a value was given."""
        return name in self.values

    def require(self, name):
        """Get the value of a mandatory option."""
        value = self.get(name)
        if not value:
            raise InputError("Please provide the --%s option to the %s command!" % (name, self.command))
        return value

    def split(self, name):
        """Get the comma separated values of a (repeatable) option as a list."""
        return split_values(self.values.get(name, []))


class Session(object):

    """Resolve the names and file names given on the command line."""

    def __init__(self, lab, manifest=None):
        """
        Initialize a :class:`Session` object.

        :param lab: A :class:`~chopbench.lab.SeparationLab` object.
        :param manifest: A :class:`~chopbench.formats.Manifest` object or :data:`None`.
        """
        self.lab = lab
        self.manifest = manifest

    @property
    def languages(self):
        """The builtin languages updated with the languages in the manifest (a dictionary)."""
        languages = builtin_languages()
        if self.manifest is not None:
            languages.update(self.manifest.languages)
        return languages

    def lts(self, value):
        """Get a transition system by manifest name or file name."""
        if self.manifest is not None and value in self.manifest.structures:
            return self.manifest.structures[value]
        return load_lts(value)

    def language(self, value):
        """Get a language by manifest name, builtin name or file name."""
        if os.path.isfile(value):
            return load_language(value)
        languages = self.languages
        if value in languages:
            return languages[value]
        raise InputError("%r is neither a language file nor a known language name!" % value)

    def formula(self, value, logic):
        """
        Get a formula by manifest name, file name or literal text.

        :returns: A tuple with the logic and the parsed formula.
        """
        if self.manifest is not None and value in self.manifest.formulas:
            return self.manifest.formula(value)
        if os.path.isfile(value):
            text, filename = read_file(value), value
        else:
            text, filename = value, None
        if logic == 'pdl':
            return logic, parse_pdl(text, self.languages, filename=filename)
        return logic, parse_flc(text, filename=filename)


def format_states(lts, states):
    """Render a set of states in construction order."""
    return ', '.join(map(str, lts.sorted_states(states))) or '(none)'


def check_command(session, options):
    """Implementation of ``chopbench check``."""
    lts = session.lts(options.require('lts'))
    logic = options.get('logic', 'pdl').lower()
    if logic not in ('pdl', 'flc'):
        raise InputError("Unknown logic %r! (expected pdl or flc)" % logic)
    if options.get('property'):
        built = build_property(options.get('property'), guarded=options.flag('guarded'))
        if logic == 'pdl' and built.pdl is None:
            raise InputError("Property %s has no PDL counterpart!" % built.name)
        formula = built.flc if logic == 'flc' else built.pdl
    else:
        logic, formula = session.formula(options.require('formula'), logic)
    if logic == 'pdl':
        checker = PdlChecker(lts=lts, languages=session.languages)
        states = checker.evaluate(formula)
    else:
        evaluator = FlcEvaluator(lts=lts, mode=options.get('mode', session.lab.flc_mode),
                                 state_cap=session.lab.flc_state_cap)
        states = evaluator.satisfying(formula)
    if options.get('state') is not None:
        state = options.get('state')
        lts.check_state(state)
        output("holds at state %s: %s", state, str(state in states).lower())
    elif lts.initial is not None:
        output("holds at initial state: %s", str(lts.initial in states).lower())
    output("satisfying states: %s", format_states(lts, states))


def depth_command(session, options):
    """Implementation of ``chopbench depth``."""
    _, formula = session.formula(options.require('formula'), 'pdl')
    output("modal depth: %i", modal_depth(formula))
    output("modal-only depth: %i", modal_only_depth(formula))


def derive_command(session, options):
    """Implementation of ``chopbench derive``."""
    language = session.language(options.require('automaton'))
    output(serialize_automaton(derivative(language.acceptor, options.require('letter'))).rstrip())


def pump_command(session, options):
    """Implementation of ``chopbench pump``."""
    letter = options.require('letter')
    names = options.split('automata')
    if not names:
        raise InputError("Please provide the --automata option to the pump command!")
    automata = []
    for name in names:
        acceptor = session.language(name).acceptor
        if isinstance(acceptor, Nfa):
            acceptor.check_letter(letter)
            automata.append(acceptor)
        else:
            automata.append(unary_slice(acceptor, letter, session.lab.slice_bound))
    constants = pumping_constants(automata, letter)
    output(str(constants))
    if options.get('verify'):
        bounds = split_values(options.get('verify'))
        if len(bounds) != 2:
            raise InputError("Please provide --verify=L_MAX,J_MAX!")
        l_max = coerce_positive_integer(bounds[0], "largest exponent")
        j_max = coerce_positive_integer(bounds[1], "largest number of periods", minimum=0)
        if verify_pumping(automata, letter, constants, l_max, j_max):
            output("verified for l <= %i and j <= %i", l_max, j_max)
        else:
            warning("The pumping constants failed verification!")
            sys.exit(DisagreementError.exit_code)


def witness_command(session, options):
    """Implementation of ``chopbench witness``."""
    family = options.require('family')
    m = coerce_positive_integer(options.require('m'), "pumping threshold")
    k = coerce_positive_integer(options.require('k'), "pumping period")
    d = coerce_positive_integer(options.require('d'), "modal depth")
    directory = options.get('output', os.curdir)
    if family == 'chain':
        length = (m + k) * d
        structures = [make_chain_b(length), make_chain_b(length + k)]
    elif family == 'diabox':
        structures = make_witness_diabox(m, k, d, cross_edge=options.flag('cross-edge'))
    elif family == 'anban':
        structures = make_witness_an_b_an(m, k, d, cross_edge=options.flag('cross-edge'))
    else:
        raise InputError("Unknown structure family %r! (expected chain, diabox or anban)" % family)
    for lts in structures:
        filename = os.path.join(directory, '%s.lts' % lts.name)
        with open(filename, 'w') as handle:
            handle.write(serialize_lts(lts))
        output("wrote %s: %s", filename, lts.describe())


def separate_command(session, options):
    """Implementation of ``chopbench separate``."""
    lab = session.lab
    family = options.require('family')
    depth = options.require('depth')
    if options.get('size-cap'):
        lab.size_cap = options.get('size-cap')
    if options.get('chain-slack'):
        lab.chain_slack = options.get('chain-slack')
    if options.get('depth-measure'):
        lab.depth_measure = options.get('depth-measure')
    if options.flag('cross-edge'):
        lab.cross_edge = True
    if options.flag('no-cross-edge'):
        lab.cross_edge = False
    if options.flag('guarded'):
        lab.guarded_boxes = True
    if options.flag('verbatim'):
        lab.guarded_boxes = False
    languages = [session.language(name) for name in options.split('langs')]
    report = lab.run_experiment(family, languages, depth)
    output(report.to_json() if options.flag('json') else report.render())
    if not report.ok:
        raise DisagreementError(report)


def vpcheck_command(session, options):
    """Implementation of ``chopbench vpcheck``."""
    _, formula = session.formula(options.require('formula'), 'flc')
    partition = AlphabetPartition(calls=options.split('calls'),
                                  returns=options.split('returns'),
                                  internals=options.split('internals'))
    output("vpFLC: %s", str(is_vpflc(formula, partition)).lower())


def reach_command(session, options):
    """Implementation of ``chopbench reach``."""
    lts = session.lts(options.require('lts'))
    language = session.language(options.require('lang'))
    relation = reach_relation(lts, language)
    index = lts.state_index
    for source, target in sorted(relation, key=lambda pair: (index[pair[0]], index[pair[1]])):
        if options.flag('explain'):
            paths = lts.to_nfa(source, target, alphabet=language.alphabet)
            word = pda_witness(intersect_regular(language.pda, paths))
            output("%s -> %s (witness: %s)", source, target, format_word(word))
        else:
            output("%s -> %s", source, target)
    output("(%s)", pluralize(len(relation), "pair"))


COMMANDS = dict(
    check=(check_command, ['lts=', 'formula=', 'logic=', 'state=', 'property=', 'guarded', 'mode=']),
    depth=(depth_command, ['formula=']),
    derive=(derive_command, ['automaton=', 'letter=']),
    pump=(pump_command, ['automata=', 'letter=', 'verify=']),
    witness=(witness_command, ['family=', 'm=', 'k=', 'd=', 'cross-edge', 'output=']),
    separate=(separate_command, ['family=', 'langs=', 'depth=', 'size-cap=', 'json', 'cross-edge',
                                 'no-cross-edge', 'guarded', 'verbatim', 'depth-measure=', 'chain-slack=']),
    vpcheck=(vpcheck_command, ['formula=', 'calls=', 'returns=', 'internals=']),
    reach=(reach_command, ['lts=', 'lang=', 'explain']),
)
"""Mapping of command names to handlers and the long options they accept."""
