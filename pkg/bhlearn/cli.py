# 2026 bhlearn developers

"""
The bhlearn command line interface defines the subcommands and their options and
parses valid arguments from :class:`sys.argv`, supplemented by a flat
:code:`key=value` experiment file and the :file:`config/config.yaml` defaults, in this
order of precedence. Arguments are saved as an :class:`argparse.Namespace` and read by
the :mod:`main` module. Additionally, this module updates :code:`repo.settings` and
initiates logging.
"""

import argparse
import logging
import sys
from os import path

import yaml

from bhlearn import repo, i_o
from bhlearn.growth import bh_model
from bhlearn.__init__ import __version__, __date__

PROG = 'bhlearn'

# options each subcommand needs after merging; the randomized ones need --seed
REQUIRED = {
    'learn': ['n', 'd', 'eps', 'delta', 'seed'],
    'scan': ['d', 'eps', 'delta', 'ns', 'seed'],
    'grid': ['n', 'd', 'eps', 'delta', 'seed'],
    'bounds': ['d'],
    'bh-estimate': ['n', 'd', 'seed'],
    'collision': ['n', 'N', 'seed'],
    'audit': ['n', 'd', 'seed'],
    'budgets': ['n', 'd', 'eps', 'delta'],
}
# never filled from files; the thread count falls back to the environment first
CLI_ONLY = ('command', 'config', 'config_file', 'max_threads', 'test', 'version')
DEFAULTS = {
    'algo': 'bh',
    'trials': 100,
    'count': 100,
    'corpus': 'random',
    'law': 'uniform',
}


class _command(argparse.ArgumentParser):
    """Subcommand parser reporting usage errors on a single line."""

    def error(self, message):
        sys.stderr.write('%s: error: %s\n' % (PROG, message))
        sys.exit(2)


class parser(_command):
    """
    The command line parser of the package.
    Run `bhlearn -h` to display all available options.
    """

    def __init__(self, *args):
        super().__init__(prog=PROG, description='Learning bounded low-degree functions on the '
                                                'Boolean cube from few random queries.')
        argv = list(args[0]) if args else sys.argv[1:]

        # if empty commandline, show info and help:
        if not argv:
            print('bhlearn version %s built on %s\n' % (__version__, __date__), file=sys.stderr)
            argv = ['-h']

        # [misc]
        level = self.add_mutually_exclusive_group()
        level.add_argument('-i', '--info', action='store_true', help='show some more information in console output.')
        level.add_argument('-v', '--verbose', action='store_true', help='show all runtime information in console.')
        self.add_argument('-c', '--config', default=str(repo.CONFIG),
                          type=lambda arg: arg if path.isfile(arg) else self.error('%s: invalid .config path' % arg),
                          help='path to .yaml config file with defaults; command line arguments will override them.')
        self.add_argument('-cf', '--config_file',
                          type=lambda arg: arg if path.isfile(arg) else self.error('%s: invalid experiment file' % arg),
                          help='flat experiment file of key=value lines, # comments. Keys are option names; '
                               'command line arguments override them.')
        self.add_argument('-nt', '--max_threads', type=int,
                          help='limit the number of threads. Falls back to $%s, then the config.' % repo.THREADS_ENV)
        self.add_argument('-version', '--version', action='store_true', help='print version information and exit.')
        self.add_argument('-test', '--test', action='store_true', help='test run with small settings.')

        sub = self.add_subparsers(dest='command', metavar='COMMAND', parser_class=_command)
        self.commands = dict()

        # [learn]
        cmd = self._add(sub, 'learn', 'run seeded learning trials against one target.')
        self._problem(cmd)
        cmd.add_argument('--algo', choices=['bh', 'lmn', 'auto'], help='learner. Default is bh.')
        cmd.add_argument('--bh-model', dest='bh_model', type=self._valid_model,
                         help='model of the BH constant: unit, dmp:<kappa> or explicit:<value>. '
                              'Default is explicit:1 for d=1 and dmp:<kappa> above.')
        cmd.add_argument('--C', type=float, help='constant of the dimension-free sample count.')
        cmd.add_argument('--target', help='character:<hex>, character, random:<seed>, random, majority '
                                          'or sparse:<path>. Default is random.')
        cmd.add_argument('--N', type=int, help='override the sample count.')
        cmd.add_argument('--samples-out', dest='samples_out',
                         help='write the samples of the first trial to this .csv.')
        self._trials(cmd)

        # [scan]
        cmd = self._add(sub, 'scan', 'success rates across dimensions at the dimension-free sample count.')
        cmd.add_argument('--d', type=int, help='degree bound.')
        cmd.add_argument('--eps', type=float, help='accuracy in (0,1).')
        cmd.add_argument('--delta', type=float, help='confidence in (0,1).')
        cmd.add_argument('--ns', type=int, nargs='+', help='dimensions to scan.')
        cmd.add_argument('--algo', choices=['bh', 'lmn', 'auto'], help='learner. Default is bh.')
        cmd.add_argument('--bh-model', dest='bh_model', type=self._valid_model, help='as for learn.')
        cmd.add_argument('--target', help='character, character:<hex> or sparse:<path>; random only up to the '
                                          'dense cap. Default is character.')
        self._trials(cmd)

        # [grid]
        cmd = self._add(sub, 'grid', 'one summary row per cell of a grid of learning problems.')
        cmd.add_argument('--n', type=int, nargs='+', help='dimensions.')
        cmd.add_argument('--d', type=int, nargs='+', help='degree bounds, none above the smallest dimension.')
        cmd.add_argument('--eps', type=float, nargs='+', help='accuracies in (0,1).')
        cmd.add_argument('--delta', type=float, nargs='+', help='confidences in (0,1).')
        cmd.add_argument('--algo', choices=['bh', 'lmn', 'auto'], nargs='+', help='learners. Default is bh.')
        cmd.add_argument('--N', type=int, nargs='+', help='sample count overrides instead of the formulas.')
        cmd.add_argument('--bh-model', dest='bh_model', type=self._valid_model, help='as for learn.')
        cmd.add_argument('--C', type=float, help='constant of the dimension-free sample count.')
        cmd.add_argument('--target', help='as for learn. Default is random.')
        self._trials(cmd)

        # [bounds]
        cmd = self._add(sub, 'bounds', 'Chebyshev-Markov and weak level bounds for l = 1..d.')
        cmd.add_argument('--d', type=int, help='degree.')
        cmd.add_argument('--kappa', type=float, help='constant of the heuristic BH bound.')
        cmd.add_argument('--out', help='output .csv, default stdout.')

        # [bh-estimate]
        cmd = self._add(sub, 'bh-estimate', 'empirical lower bound on the BH constant.')
        cmd.add_argument('--n', type=int, help='dimension.')
        cmd.add_argument('--d', type=int, help='degree.')
        cmd.add_argument('--law', choices=['uniform', 'gaussian', 'rademacher'], help='coefficient law.')
        self._trials(cmd)

        # [collision]
        cmd = self._add(sub, 'collision', 'frequency of N points agreeing on coordinates 1 and 2.')
        cmd.add_argument('--n', type=int, help='dimension, at least 2.')
        cmd.add_argument('--N', type=int, help='number of points.')
        cmd.add_argument('--budget', type=int, help='attempts of the witness search.')
        self._trials(cmd)

        # [audit]
        cmd = self._add(sub, 'audit', 'audit the growth bounds over a corpus of functions.')
        cmd.add_argument('--n', type=int, help='dimension.')
        cmd.add_argument('--d', type=int, help='degree.')
        cmd.add_argument('--count', type=int, help='corpus size.')
        cmd.add_argument('--corpus', help='random, character or majority.')
        cmd.add_argument('--kappa', type=float, help='constant of the heuristic BH bound.')
        cmd.add_argument('--law', choices=['uniform', 'gaussian', 'rademacher'], help='coefficient law.')
        cmd.add_argument('--seed', type=int, help='master seed.')
        cmd.add_argument('--out', help='output .csv, default stdout.')
        cmd.add_argument('--timing', action='store_true', help='add a wall_time column.')

        # [budgets]
        cmd = self._add(sub, 'budgets', 'side-by-side sample counts of all formulas.')
        self._problem(cmd)
        cmd.add_argument('--bh-model', dest='bh_model', type=self._valid_model, help='as for learn.')
        cmd.add_argument('--C', type=float, help='constant of the dimension-free sample count.')
        cmd.add_argument('--out', help='output .csv, default stdout.')

        self.args = self.parse_args(argv)

        if self.args.version is True:
            print('%s: %s' % (PROG, __version__))
            sys.exit(0)
        if self.args.command is None:
            self.error('a command is required: %s' % ', '.join(self.commands))

        # test: switch config + set verbose
        if self.args.test is True:
            print('--TEST RUN--', file=sys.stderr)
            self.args.config = str(repo.TEST_CONFIG)
            self.args.verbose = True

        # experiment file values fill unset options
        if self.args.config_file:
            try:
                experiment = i_o.read_experiment(self.args.config_file)
            except ValueError as ex:
                self.error(str(ex))
            config_only = dict()
            for key, val in experiment.items():
                known = False
                if key in vars(self.args) and key not in CLI_ONLY:
                    known = True
                    if self.args.__dict__.get(key) in [None, False]:
                        self.args.__dict__[key] = self._convert(key, val)
                if key in vars(repo.settings):
                    known = True
                    config_only[key] = val
                if not known:
                    self.error('unknown key in experiment file: %s' % key)
        else:
            config_only = dict()

        # load additional info from config
        with open(self.args.config, 'r') as fh:
            config = yaml.safe_load(fh) or dict()
        for key, val in config.items():
            if key in vars(self.args) and key not in CLI_ONLY and self.args.__dict__.get(key) is None:
                self.args.__dict__[key] = val
            if key in vars(repo.settings) and key not in config_only:
                config_only[key] = val
        self._settings(config_only)

        for key, val in DEFAULTS.items():
            if key in vars(self.args) and self.args.__dict__.get(key) is None:
                self.args.__dict__[key] = val
        if 'target' in vars(self.args) and self.args.target is None:
            self.args.target = 'character' if self.args.command == 'scan' else 'random'

        self._validate()
        self._init_log(self.args.out + '.log' if getattr(self.args, 'out', None) else None)
        log = logging.getLogger(__name__)
        log.debug('--BHLEARN %s--' % __version__)
        log.debug(' '.join(argv))
        if getattr(self.args, 'seed', None) is not None:
            log.info('master seed %d' % self.args.seed)

    def _add(self, sub, name, description):
        cmd = sub.add_parser(name, help=description, description=description)
        self.commands[name] = cmd
        return cmd

    @staticmethod
    def _problem(cmd):
        cmd.add_argument('--n', type=int, help='dimension.')
        cmd.add_argument('--d', type=int, help='degree bound.')
        cmd.add_argument('--eps', type=float, help='accuracy in (0,1).')
        cmd.add_argument('--delta', type=float, help='confidence in (0,1).')

    @staticmethod
    def _trials(cmd):
        cmd.add_argument('--seed', type=int, help='master seed; required, there is no random default.')
        cmd.add_argument('--trials', type=int, help='number of trials.')
        cmd.add_argument('--out', help='output .csv, default stdout. The log goes to <out>.log.')
        cmd.add_argument('--timing', action='store_true', help='add a wall_time column.')

    def _convert(self, key, val):
        """Converts an experiment file value with the option's own type."""
        actions = self._actions + self.commands[self.args.command]._actions
        action = next(a for a in actions if a.dest == key)
        if action.nargs == 0:
            return val.strip().lower() in ('1', 'true', 'yes', 'on')
        try:
            if action.nargs == '+':
                val = [action.type(v) if action.type else v for v in val.replace(',', ' ').split()]
            else:
                val = action.type(val) if action.type else val.strip()
        except ValueError:
            self.error('argument --%s: invalid value in experiment file: %s' % (key, val))
        for v in val if isinstance(val, list) else [val]:
            if action.choices is not None and v not in action.choices:
                self.error('argument --%s: invalid choice: %s' % (key, v))
        return val

    def _settings(self, values):
        """Casts to the type of the built-in default and stores in :code:`repo.settings`."""
        for key, val in values.items():
            default = getattr(repo.settings, key)
            try:
                setattr(repo.settings, key, type(default)(val))
            except (TypeError, ValueError):
                self.error('invalid setting %s: %s' % (key, val))
        if repo.settings.n_max < 1 or repo.settings.tolerance < 0 or repo.settings.block < 1 \
                or repo.settings.max_subsets < 1 or repo.settings.retries < 1:
            self.error('invalid numeric settings in %s' % self.args.config)

    def _validate(self):
        """Range checks of the merged arguments, naming the offending flag."""
        args = vars(self.args)
        for key in REQUIRED[self.args.command]:
            if args.get(key) is None:
                self.error('argument --%s is required for %s' % (key, self.args.command))

        if self.args.command == 'grid':
            self._validate_grid(args)
        else:
            self._validate_problem(args)
        for key in ('trials', 'count'):
            if args.get(key) is not None and args[key] < 1:
                self.error('argument --%s: must be at least 1' % key)
        if args.get('seed') is not None and args['seed'] < 0:
            self.error('argument --seed: must be non-negative')
        if args.get('budget') is not None and args['budget'] < 1:
            self.error('argument --budget: must be at least 1')
        for key in ('kappa', 'C'):
            if args.get(key) is not None and args[key] < 0:
                self.error('argument --%s: must be non-negative' % key)
        if args.get('max_threads') is not None and args['max_threads'] < 0:
            self.error('argument -nt/--max_threads: must be non-negative')
        if args.get('corpus') is not None and args['corpus'] not in ('random', 'character', 'majority'):
            self.error('argument --corpus: invalid choice: %s' % args['corpus'])

    def _validate_problem(self, args):
        for key in ('eps', 'delta'):
            if args.get(key) is not None and not 0 < args[key] < 1:
                self.error('argument --%s: %s outside the range (0,1)' % (key, args[key]))
        lowest = 2 if self.args.command == 'collision' else 1
        if args.get('n') is not None and args['n'] < lowest:
            self.error('argument --n: must be at least %d' % lowest)
        if args.get('d') is not None:
            if args['d'] < 1:
                self.error('argument --d: must be at least 1')
            if args.get('n') is not None and args['d'] > args['n']:
                self.error('argument --d: must not exceed --n %d' % args['n'])
            for n in args.get('ns') or list():
                if n < args['d']:
                    self.error('argument --ns: dimension %d below --d %d' % (n, args['d']))
        if args.get('N') is not None and args['N'] < (0 if self.args.command == 'collision' else 1):
            self.error('argument --N: sample count too small')

    def _validate_grid(self, args):
        """Every cell of the grid must be a valid problem."""
        for key in ('eps', 'delta'):
            for val in args[key]:
                if not 0 < val < 1:
                    self.error('argument --%s: %s outside the range (0,1)' % (key, val))
        if min(args['d']) < 1:
            self.error('argument --d: must be at least 1')
        if max(args['d']) > min(args['n']):
            self.error('argument --d: degree %d exceeds dimension %d' % (max(args['d']), min(args['n'])))
        if args.get('N') is not None and min(args['N']) < 1:
            self.error('argument --N: sample count too small')

    def _valid_model(self, text):
        try:
            return bh_model.parse(text)
        except ValueError as ex:
            self.error('argument --bh-model: %s' % ex)

    def _init_log(self, filename):
        """Initializes logging"""
        log = logging.getLogger()
        log.setLevel(logging.DEBUG)
        for handler in [h for h in log.handlers if getattr(h, 'bhlearn', False)]:
            log.removeHandler(handler)
            handler.close()

        # init shortened console logging; stdout carries the csv
        sh = logging.StreamHandler(sys.stderr)
        if self.args.verbose:
            sh.setLevel(logging.DEBUG)
        elif self.args.info:
            sh.setLevel(logging.INFO)
        else:
            sh.setLevel(logging.WARNING)
        sh.setFormatter(logging.Formatter('%(levelname)s: %(message)s'))
        sh.bhlearn = True
        log.addHandler(sh)

        # init verbose logging to file
        if filename:
            fh = logging.FileHandler(filename=filename, mode='w')
            fh.setLevel(logging.DEBUG)
            fh.setFormatter(logging.Formatter('%(asctime)s: %(levelname)s\t%(name)s\t%(message)s',
                                              datefmt='%Y-%m-%d %H:%M:%S'))
            fh.bhlearn = True
            log.addHandler(fh)

