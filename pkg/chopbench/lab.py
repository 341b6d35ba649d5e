# chopbench: Model checking workbench for PDL over language classes and FLC.
#
# Author: The chopbench developers
# Last Change: October 16, 2026

"""
The :mod:`chopbench.lab` module runs the separation experiments.

This module defines the :class:`SeparationLab` class which holds the
configuration of the experiments and runs them, and the
:class:`ExperimentReport` class which records their outcome. Every
experiment follows the same recipe:

1. Compute unary slices of the given languages and derive joint pumping
   constants (m, k) from them.
2. Generate a pair of structures (or a pair of chains) from (m, k) and the
   modal depth.
3. Enumerate all PDL formulas over the given languages up to the modal depth
   and the configured size cap and check that none of them distinguishes the
   states the theory claims to be indistinguishable.
4. For the witness structures, check that the matching FLC property does
   distinguish them.

Because step 3 only covers formulas up to a size cap, the experiments are a
falsification harness: a disagreement points at a bug, agreement is evidence
rather than proof.
"""

# Standard library modules.
import configparser
import json
import logging
import os

# External dependencies.
from humanfriendly import Timer, format_timespan
from humanfriendly.tables import format_pretty_table
from humanfriendly.text import compact, concatenate, pluralize
from property_manager import PropertyManager, cached_property, mutable_property, required_property, set_property

# Modules included in our package.
from chopbench.automata import LanguageRef, derivative, unary_slice
from chopbench.exceptions import InputError
from chopbench.flc import EVALUATION_MODES, FlcEvaluator, format_flc
from chopbench.lts import GOAL_PROPOSITION, make_chain_b, make_witness_an_b_an, make_witness_diabox
from chopbench.pdl import DEPTH_MEASURES, PdlChecker, enumerate_formulas, format_pdl
from chopbench.properties import build_property
from chopbench.pumping import PumpingConstants, pumping_constants
from chopbench.utils import coerce_flag, coerce_positive_integer

# Initialize a logger.
logger = logging.getLogger(__name__)

DISCLAIMER = compact("""
    Formulas were enumerated up to the size cap only, so agreement is
    evidence of indistinguishability, not a proof.
""")
"""The note printed below every rendered report (a string)."""

CONFIGURATION_OPTIONS = (
    ('size-cap', 'size_cap'),
    ('slice-bound', 'slice_bound'),
    ('flc-state-cap', 'flc_state_cap'),
    ('flc-mode', 'flc_mode'),
    ('cross-edge', 'cross_edge'),
    ('guarded-boxes', 'guarded_boxes'),
    ('chain-slack', 'chain_slack'),
    ('check-unclaimed', 'check_unclaimed'),
    ('depth-measure', 'depth_measure'),
)
"""Mapping of options in the ``[chopbench]`` section of configuration files to :class:`SeparationLab` properties."""


class ExperimentReport(PropertyManager):

    """The outcome of a separation experiment."""

    @required_property
    def experiment(self):
        """The name of the experiment (``chain``, ``diabox`` or ``anban``)."""

    @required_property
    def params(self):
        """A dictionary with the parameters of the experiment (depth, bounds and language names)."""

    @required_property
    def m(self):
        """The pumping threshold (an integer)."""

    @required_property
    def k(self):
        """The pumping period (an integer)."""

    @required_property
    def l(self):  # noqa: E743
        """The length parameter of the generated structures (an integer)."""

    @mutable_property
    def formulas_checked(self):
        """The number of enumerated formulas (an integer)."""
        return 0

    @cached_property
    def disagreements(self):
        """
        The disagreements at claimed states (a list of dictionaries).

        Each dictionary has the keys ``formula``, ``left_state``,
        ``right_state``, ``left`` and ``right`` (the last two are the
        verdicts in the first and second structure).
        """
        return []

    @cached_property
    def unclaimed_disagreements(self):
        """Disagreements at states outside of the scope of the claim (same format as :attr:`disagreements`)."""
        return []

    @mutable_property
    def flc_verdicts(self):
        """The verdicts of the distinguishing FLC property on both structures (a tuple of two booleans or :data:`None`)."""

    @mutable_property
    def verbatim_verdicts(self):
        """The verdicts of the unguarded variant of the FLC property (a tuple of two booleans or :data:`None`)."""

    @mutable_property
    def distinguishing(self):
        """A dictionary describing the distinguishing FLC check (or :data:`None` for chain experiments)."""

    @mutable_property
    def duration_ms(self):
        """The wall clock duration of the experiment in milliseconds (an integer)."""
        return 0

    @property
    def indistinguishable(self):
        """:data:`True` when no enumerated formula distinguished claimed states, :data:`False` otherwise."""
        return not self.disagreements

    @property
    def ok(self):
        """:data:`True` when the experiment confirms its claim, :data:`False` otherwise."""
        return self.indistinguishable and self.flc_verdicts in (None, (True, False))

    def to_dict(self):
        """Convert the report to a dictionary of JSON compatible values."""
        return dict(
            experiment=self.experiment,
            params=self.params,
            m=self.m,
            k=self.k,
            l=self.l,
            formulas_checked=self.formulas_checked,
            disagreements=self.disagreements,
            unclaimed_disagreements=self.unclaimed_disagreements,
            flc_verdicts=list(self.flc_verdicts) if self.flc_verdicts else None,
            verbatim_verdicts=list(self.verbatim_verdicts) if self.verbatim_verdicts else None,
            distinguishing=self.distinguishing,
            indistinguishable=self.indistinguishable,
            duration_ms=self.duration_ms,
        )

    def to_json(self):
        """Render the report as a JSON document with sorted keys (a string)."""
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def render(self):
        """Render the report as human readable text (a string)."""
        lines = [
            "Experiment: %s (%s, l=%i)" % (self.experiment, PumpingConstants(self.m, self.k), self.l),
            "Parameters: %s" % ', '.join('%s=%s' % (key, render_value(self.params[key]))
                                         for key in sorted(self.params)),
            "Formulas checked: %i" % self.formulas_checked,
        ]
        if self.disagreements:
            lines.append("Disagreements at claimed states: %i" % len(self.disagreements))
            lines.append(render_disagreements(self.disagreements))
        else:
            lines.append("Disagreements at claimed states: none (indistinguishable)")
        if self.unclaimed_disagreements:
            lines.append(compact("""
                Disagreements outside of the claimed scope: {count} (these
                are allowed, see below)
            """, count=len(self.unclaimed_disagreements)))
            lines.append(render_disagreements(self.unclaimed_disagreements))
        if self.distinguishing:
            lines.append("Distinguishing formula: %s" % self.distinguishing['formula'])
            lines.append("FLC verdicts: %s" % render_verdicts(self.flc_verdicts))
            if self.verbatim_verdicts:
                lines.append("Unguarded FLC verdicts: %s" % render_verdicts(self.verbatim_verdicts))
        lines.append("Duration: %s" % format_timespan(self.duration_ms / 1000.0))
        lines.append("Note: %s" % DISCLAIMER)
        return '\n'.join(lines)


def render_value(value):
    """Render a parameter value for :func:`ExperimentReport.render()`."""
    if isinstance(value, (list, tuple)):
        return '[%s]' % ', '.join(map(str, value))
    return str(value)


def render_verdicts(verdicts):
    """Render a pair of verdicts (``true/false``)."""
    return '/'.join(str(v).lower() for v in verdicts)


def render_disagreements(disagreements):
    """Render a list of disagreements as a table."""
    return format_pretty_table(
        [[d['formula'], d['left_state'], str(d['left']).lower(), d['right_state'], str(d['right']).lower()]
         for d in disagreements],
        column_names=['Formula', 'State', 'Verdict', 'State', 'Verdict'],
    )


def as_language(value):
    """Wrap an acceptor in a :class:`~chopbench.automata.LanguageRef` (language references are returned as is)."""
    if isinstance(value, LanguageRef):
        return value
    return LanguageRef(value.name, value)


class SeparationLab(PropertyManager):

    """Configuration holder and runner of the separation experiments."""

    def __init__(self, load_configuration_files=True, load_environment_variables=True, **options):
        """
        Initialize a :class:`SeparationLab` object.

        :param load_configuration_files:

            When :data:`True` (the default)
            :func:`load_default_configuration_files()` is called automatically.

        :param load_environment_variables:

            When :data:`True` (the default)
            :func:`load_environment_variables()` is called automatically.

        :param options:

            Any keyword arguments are passed on to the initializer of the
            :class:`~property_manager.PropertyManager` class.
        """
        super(SeparationLab, self).__init__(**options)
        if load_configuration_files:
            self.load_default_configuration_files()
        if load_environment_variables:
            self.load_environment_variables()

    @mutable_property
    def size_cap(self):
        """The maximum number of nodes of enumerated formulas (a positive integer, defaults to 6)."""
        return 6

    @size_cap.setter
    def size_cap(self, value):
        """Automatically coerce :attr:`size_cap` to a positive integer."""
        set_property(self, 'size_cap', coerce_positive_integer(value, "size cap"))

    @mutable_property
    def slice_bound(self):
        """The bound passed to :func:`~chopbench.automata.unary_slice()` (a positive integer, defaults to 12)."""
        return 12

    @slice_bound.setter
    def slice_bound(self, value):
        """Automatically coerce :attr:`slice_bound` to a positive integer."""
        set_property(self, 'slice_bound', coerce_positive_integer(value, "slice bound"))

    @mutable_property
    def flc_state_cap(self):
        """The state cap of the tabulated FLC mode (a positive integer, defaults to 14)."""
        return 14

    @flc_state_cap.setter
    def flc_state_cap(self, value):
        """Automatically coerce :attr:`flc_state_cap` to a positive integer."""
        set_property(self, 'flc_state_cap', coerce_positive_integer(value, "FLC state cap"))

    @mutable_property
    def flc_mode(self):
        """The FLC evaluation mode (``demand`` or ``tabulated``, defaults to ``demand``)."""
        return 'demand'

    @flc_mode.setter
    def flc_mode(self, value):
        """Validate :attr:`flc_mode`."""
        if value not in EVALUATION_MODES:
            raise InputError("Please provide a valid FLC mode! (one of %s)" % concatenate(EVALUATION_MODES))
        set_property(self, 'flc_mode', value)

    @mutable_property
    def cross_edge(self):
        """
        :data:`True` to generate witness pairs with the cross edge (the default), :data:`False` otherwise.

        Without the cross edge the first structure can't reach a copy of the
        branching junction of the second one, and then ``[ANBN]p`` already
        distinguishes the pair at modal depth one.
        """
        return True

    @cross_edge.setter
    def cross_edge(self, value):
        """Automatically coerce :attr:`cross_edge` to a boolean value."""
        set_property(self, 'cross_edge', coerce_flag(value, "cross edge option"))

    @mutable_property
    def guarded_boxes(self):
        """
        :data:`True` to use the guarded FLC properties for the distinguishing check (the default).

        States without b-successors satisfy ``[b]`` vacuously, which makes the
        unguarded properties hold on both witness structures. The unguarded
        verdicts are always recorded in :attr:`ExperimentReport.verbatim_verdicts`.
        """
        return True

    @guarded_boxes.setter
    def guarded_boxes(self, value):
        """Automatically coerce :attr:`guarded_boxes` to a boolean value."""
        set_property(self, 'guarded_boxes', coerce_flag(value, "guarded boxes option"))

    @mutable_property
    def chain_slack(self):
        """The number of extra chain states beyond (m + k) * d' in chain experiments (an integer, defaults to 0)."""
        return 0

    @chain_slack.setter
    def chain_slack(self, value):
        """Automatically coerce :attr:`chain_slack` to a nonnegative integer."""
        set_property(self, 'chain_slack', coerce_positive_integer(value, "chain slack", minimum=0))

    @mutable_property
    def check_unclaimed(self):
        """:data:`True` to also compare chain states below the claimed threshold (the default)."""
        return True

    @check_unclaimed.setter
    def check_unclaimed(self, value):
        """Automatically coerce :attr:`check_unclaimed` to a boolean value."""
        set_property(self, 'check_unclaimed', coerce_flag(value, "unclaimed states option"))

    @mutable_property
    def depth_measure(self):
        """The modal depth measure used by the enumeration (``strict`` or ``modal``, defaults to ``strict``)."""
        return 'strict'

    @depth_measure.setter
    def depth_measure(self, value):
        """Validate :attr:`depth_measure`."""
        if value not in DEPTH_MEASURES:
            raise InputError("Please provide a valid depth measure! (one of %s)" % concatenate(DEPTH_MEASURES))
        set_property(self, 'depth_measure', value)

    def load_environment_variables(self):
        """
        Load configuration defaults from environment variables.

        The following environment variables are currently supported:

        - ``$CHOPBENCH_CONFIG``
        - ``$CHOPBENCH_SIZE_CAP``
        - ``$CHOPBENCH_SLICE_BOUND``
        - ``$CHOPBENCH_FLC_STATE_CAP``
        - ``$CHOPBENCH_FLC_MODE``
        - ``$CHOPBENCH_CROSS_EDGE``
        """
        for variable, setter in (('CHOPBENCH_CONFIG', self.load_configuration_file),
                                 ('CHOPBENCH_SIZE_CAP', self.set_option('size_cap')),
                                 ('CHOPBENCH_SLICE_BOUND', self.set_option('slice_bound')),
                                 ('CHOPBENCH_FLC_STATE_CAP', self.set_option('flc_state_cap')),
                                 ('CHOPBENCH_FLC_MODE', self.set_option('flc_mode')),
                                 ('CHOPBENCH_CROSS_EDGE', self.set_option('cross_edge'))):
            value = os.environ.get(variable)
            if value is not None:
                setter(value)

    def set_option(self, name):
        """Get a function that sets the property `name` (used by the configuration loaders)."""
        return lambda value: setattr(self, name, value)

    def load_configuration_file(self, configuration_file):
        """
        Load configuration defaults from a configuration file.

        :param configuration_file: The pathname of a configuration file (a
                                   string).
        :raises: :exc:`~chopbench.exceptions.InputError` when the
                 configuration file cannot be loaded.

        Below is an example of the available options:

        .. code-block:: ini

           [chopbench]
           size-cap = 6
           slice-bound = 12
           flc-state-cap = 14
           flc-mode = demand
           cross-edge = on
           guarded-boxes = on
           chain-slack = 2
           check-unclaimed = on
           depth-measure = strict
        """
        parser = configparser.RawConfigParser()
        configuration_file = os.path.expanduser(configuration_file)
        logger.debug("Loading configuration file: %s", configuration_file)
        try:
            files_loaded = parser.read(configuration_file)
        except configparser.Error as e:
            raise InputError("Failed to parse configuration file %s! (%s)" % (configuration_file, e))
        if len(files_loaded) != 1:
            raise InputError("Failed to load configuration file! (%s)" % configuration_file)
        for option, name in CONFIGURATION_OPTIONS:
            if parser.has_option('chopbench', option):
                setattr(self, name, parser.get('chopbench', option))

    def load_default_configuration_files(self):
        """
        Load configuration options from default configuration files.

        The following default configuration file locations are checked:

        - ``/etc/chopbench.ini``
        - ``~/.chopbench.ini``

        :raises: :exc:`~chopbench.exceptions.InputError` when a
                 configuration file exists but cannot be loaded.
        """
        for location in ('/etc/chopbench.ini', os.path.expanduser('~/.chopbench.ini')):
            if os.path.isfile(location):
                self.load_configuration_file(location)

    def language_table(self, languages):
        """
        Normalize the languages of an experiment.

        :param languages: An iterable of :class:`~chopbench.automata.LanguageRef`
                          objects or acceptors.
        :returns: A dictionary mapping names to :class:`~chopbench.automata.LanguageRef` objects.
        :raises: :exc:`~chopbench.exceptions.InputError` when names collide.
        """
        table = {}
        for language in map(as_language, languages):
            if language.name in table:
                raise InputError("Language name %r is used more than once!" % language.name)
            table[language.name] = language
        return table

    def constants_for(self, slices, letter):
        """Compute the pumping constants of a list of unary slices (``m=1 k=1`` when there are none)."""
        if not slices:
            return PumpingConstants(1, 1)
        return pumping_constants(slices, letter)

    def alphabet_of(self, table, letters):
        """Get the union of the alphabets of some languages and the given letters."""
        alphabet = set(letters)
        for language in table.values():
            alphabet.update(language.alphabet)
        return sorted(alphabet)

    def make_report(self, experiment, table, depth, constants, length):
        """Create an :class:`ExperimentReport` with the common parameters filled in."""
        return ExperimentReport(
            experiment=experiment,
            params=dict(
                depth=depth,
                languages=sorted(table),
                size_cap=self.size_cap,
                slice_bound=self.slice_bound,
                cross_edge=self.cross_edge,
                depth_measure=self.depth_measure,
                flc_mode=self.flc_mode,
            ),
            m=constants.m,
            k=constants.k,
            l=length,
        )

    def compare(self, report, table, depth, left, right, pairs, claimed):
        """
        Compare the verdicts of all enumerated formulas on pairs of states.

        :param report: The :class:`ExperimentReport` to update.
        :param table: A dictionary mapping names to language references.
        :param depth: The maximum modal depth.
        :param left: The first :class:`~chopbench.lts.Lts`.
        :param right: The second :class:`~chopbench.lts.Lts`.
        :param pairs: A list of ``(left_state, right_state)`` tuples.
        :param claimed: A list of booleans (one per pair) that tells whether
                        the theory claims the pair is indistinguishable.
        """
        left_checker = PdlChecker(lts=left, languages=table)
        right_checker = PdlChecker(lts=right, languages=table)
        count = 0
        for formula in enumerate_formulas(sorted(table), [GOAL_PROPOSITION], depth,
                                          self.size_cap, self.depth_measure):
            count += 1
            left_states = left_checker.evaluate(formula)
            right_states = right_checker.evaluate(formula)
            for (left_state, right_state), in_scope in zip(pairs, claimed):
                left_verdict = left_state in left_states
                right_verdict = right_state in right_states
                if left_verdict != right_verdict:
                    record = dict(formula=format_pdl(formula), left_state=str(left_state),
                                  right_state=str(right_state), left=left_verdict, right=right_verdict)
                    if in_scope:
                        logger.warning("Formula %s distinguishes %s and %s!", record['formula'],
                                       left_state, right_state)
                        report.disagreements.append(record)
                    else:
                        report.unclaimed_disagreements.append(record)
        report.formulas_checked = count
        logger.info("Checked %s on %s and %s.", pluralize(count, "formula"), left.describe(), right.describe())

    def check_property(self, report, name, first, second):
        """Evaluate the guarded and unguarded variants of an FLC property on the initial states of two structures."""
        verdicts = {}
        for guarded in (True, False):
            formula = build_property(name, guarded=guarded).flc
            verdicts[guarded] = tuple(
                FlcEvaluator(lts=lts, mode=self.flc_mode, state_cap=self.flc_state_cap).holds(lts.initial, formula)
                for lts in (first, second)
            )
        chosen = verdicts[self.guarded_boxes]
        report.flc_verdicts = chosen
        report.verbatim_verdicts = verdicts[False]
        report.distinguishing = dict(
            property=name,
            guarded=self.guarded_boxes,
            formula=format_flc(build_property(name, guarded=self.guarded_boxes).flc),
            verdicts=list(chosen),
        )
        if chosen != (True, False):
            logger.warning("Property %s doesn't distinguish %s and %s (verdicts %s)!", name,
                           first.name, second.name, render_verdicts(chosen))

    def run_chain_experiment(self, languages, d_prime):
        """
        Check that long b-chains can't be told apart at bounded modal depth.

        :param languages: An iterable of languages (see :func:`language_table()`).
        :param d_prime: The modal depth (a positive integer).
        :returns: An :class:`ExperimentReport` object.
        :raises: :exc:`~chopbench.exceptions.BoundTooSmallError` when a
                 b-slice doesn't fit within :attr:`slice_bound`.

        The pumping constants (m, k) are computed from the b-slices of the
        languages and the chains of length l = (m + k) * d' (plus
        :attr:`chain_slack`) and l + k are generated. State j of the first
        chain and state j + k of the second chain are claimed to satisfy the
        same formulas for all j >= (m + k) * d'; smaller j are compared as
        well (when :attr:`check_unclaimed` is set) but their disagreements
        are reported separately.
        """
        timer = Timer()
        d_prime = coerce_positive_integer(d_prime, "modal depth")
        table = self.language_table(languages)
        slices = [unary_slice(language, 'b', self.slice_bound) for _, language in sorted(table.items())]
        constants = self.constants_for(slices, 'b')
        threshold = (constants.m + constants.k) * d_prime
        length = threshold + self.chain_slack
        alphabet = self.alphabet_of(table, ['b'])
        left = make_chain_b(length, alphabet)
        right = make_chain_b(length + constants.k, alphabet)
        logger.info("Running chain experiment with %s, d'=%i and l=%i ..", constants, d_prime, length)
        first = 0 if self.check_unclaimed else threshold
        pairs = [(j, j + constants.k) for j in range(first, length + 1)]
        claimed = [j >= threshold for j, _ in pairs]
        report = self.make_report('chain', table, d_prime, constants, length)
        report.params['chain_slack'] = self.chain_slack
        self.compare(report, table, d_prime, left, right, pairs, claimed)
        report.duration_ms = int(round(timer.elapsed_time * 1000))
        return report

    def run_diabox_experiment(self, languages, d):
        """
        Compare the witness pair of ``<a^n>[b^n]`` under PDL and FLC.

        :param languages: An iterable of languages (see :func:`language_table()`).
        :param d: The modal depth (a positive integer).
        :returns: An :class:`ExperimentReport` object.

        The pumping constants are computed from the b-slices of the
        languages. Every enumerated formula must agree on the initial states
        of the two structures, while the FLC property ``dia_an_box_bn`` must
        hold on the first and fail on the second.
        """
        timer = Timer()
        d = coerce_positive_integer(d, "modal depth")
        table = self.language_table(languages)
        slices = [unary_slice(language, 'b', self.slice_bound) for _, language in sorted(table.items())]
        constants = self.constants_for(slices, 'b')
        first, second = make_witness_diabox(constants.m, constants.k, d, cross_edge=self.cross_edge,
                                            alphabet=self.alphabet_of(table, ['a', 'b']))
        report = self.make_report('diabox', table, d, constants, (constants.m + constants.k) * d)
        logger.info("Running diabox experiment with %s and d=%i ..", constants, d)
        self.compare(report, table, d, first, second, [(first.initial, second.initial)], [True])
        self.check_property(report, 'dia_an_box_bn', first, second)
        report.duration_ms = int(round(timer.elapsed_time * 1000))
        return report

    def run_an_b_an_experiment(self, languages, d):
        """
        Compare the witness pair of ``<a^n>[b]<a^n>`` under PDL and FLC.

        :param languages: An iterable of languages (see :func:`language_table()`).
        :param d: The modal depth (a positive integer).
        :returns: An :class:`ExperimentReport` object.

        The pumping constants are computed jointly from the a-slices of the
        languages and the a-slices of their derivatives by b, because a
        formula ``<L>F`` evaluated behind the b-junction behaves like
        ``<b><dL>F`` where ``dL`` is the derivative.
        """
        timer = Timer()
        d = coerce_positive_integer(d, "modal depth")
        table = self.language_table(languages)
        slices = []
        for _, language in sorted(table.items()):
            slices.append(unary_slice(language, 'a', self.slice_bound))
            slices.append(unary_slice(derivative(language.acceptor, 'b'), 'a', self.slice_bound))
        constants = self.constants_for(slices, 'a')
        first, second = make_witness_an_b_an(constants.m, constants.k, d, cross_edge=self.cross_edge,
                                             alphabet=self.alphabet_of(table, ['a', 'b']))
        report = self.make_report('anban', table, d, constants, (constants.m + constants.k) * d)
        logger.info("Running anban experiment with %s and d=%i ..", constants, d)
        self.compare(report, table, d, first, second, [(first.initial, second.initial)], [True])
        self.check_property(report, 'dia_an_box_b_dia_an', first, second)
        report.duration_ms = int(round(timer.elapsed_time * 1000))
        return report

    def run_experiment(self, family, languages, depth):
        """
        Run the experiment of a structure family.

        :param family: One of the strings ``chain``, ``diabox`` and ``anban``.
        :param languages: An iterable of languages.
        :param depth: The modal depth.
        :returns: An :class:`ExperimentReport` object.
        """
        runners = dict(chain=self.run_chain_experiment,
                       diabox=self.run_diabox_experiment,
                       anban=self.run_an_b_an_experiment)
        if family not in runners:
            raise InputError("Unknown structure family %r! (expected one of %s)"
                             % (family, concatenate(sorted(runners))))
        return runners[family](languages, depth)
