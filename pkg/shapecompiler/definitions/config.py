#!/usr/bin/env python

"""
Module config.py - typed configuration objects and the key = value file format.

Functions:
parse_config_text  - key = value text ---> dict with typed values.
load_config_file   - same for a file path.
format_config      - dict ---> key = value text (inverse of parse_config_text).
write_config_file  - writes the resolved configuration.
resolve_config     - merges defaults, environment, config file and flags.

Classes:
FitConfig     - settings of a single fit.
BudgetPolicy  - entropy budget settings.
DatasetConfig - settings of a dataset build (contains a FitConfig).
"""

import os
import logging

from shapecompiler.definitions.default_config import DEFAULT_FIT_CONFIG, \
    DEFAULT_DATASET_CONFIG, CONFIG_KEYS, PRESETS, WORKERS_ENV
from shapecompiler.util.errors import ConfigError
from shapecompiler.util.util import parse_int_list

logger = logging.getLogger(__name__)

TRUE_VALUES = ('1', 'true', 'yes', 'on')
FALSE_VALUES = ('0', 'false', 'no', 'off')


def convert_value(key, value):
    """Converts a raw value to the type registered for key in CONFIG_KEYS."""
    if key not in CONFIG_KEYS:
        raise ConfigError('unknown configuration key: %s' % key)
    vtype = CONFIG_KEYS[key][0]
    if value is None:
        return None
    try:
        if vtype == 'int':
            return int(value)
        elif vtype == 'float':
            return float(value)
        elif vtype == 'int_list':
            return parse_int_list(value)
        elif vtype == 'bool':
            if isinstance(value, bool):
                return value
            text = str(value).strip().lower()
            if text in TRUE_VALUES:
                return True
            if text in FALSE_VALUES:
                return False
            raise ValueError('not a boolean: %s' % value)
        text = str(value).strip()
        return text if text and text.lower() != 'none' else None
    except ValueError as e:
        raise ConfigError('bad value for %s: %s' % (key, e))


def parse_config_text(text):
    """Parses key = value lines. Returns dict."""
    result = {}
    for number, line in enumerate(text.split('\n'), 1):
        line = line.strip()
        if line.startswith('#') or not line:
            continue  # filter comments and empty lines
        if '=' not in line:
            raise ConfigError('line %i: expected key = value, got: %s' % (number, line))
        key, value = line.split('=', 1)
        key = key.strip()
        result[key] = convert_value(key, value.strip())
    return result


def load_config_file(path):
    try:
        with open(path) as f:
            return parse_config_text(f.read())
    except IOError as e:
        raise ConfigError('cannot read config file %s: %s' % (path, e))


def format_config(config):
    """dict ---> key = value text, keys sorted."""
    lines = []
    for key in sorted(config):
        value = config[key]
        if isinstance(value, (list, tuple)):
            value = ','.join(str(x) for x in value)
        lines.append('%s = %s' % (key, value))
    return '\n'.join(lines) + '\n'


def write_config_file(path, config):
    with open(path, 'w') as f:
        f.write(format_config(config))


def resolve_config(defaults, config_file=None, flags=None, preset=None):
    """
    Merges configuration sources.
    Precedence: flags > config file > preset > environment > defaults.

    @type flags:  dict
    @param flags: only explicitly given flags, None values are ignored.
    """
    resolved = dict(defaults)
    if 'workers' in resolved and os.environ.get(WORKERS_ENV):
        resolved['workers'] = convert_value('workers', os.environ[WORKERS_ENV])
    from_file = load_config_file(config_file) if config_file else {}
    from_flags = dict((k, v) for k, v in (flags or {}).items() if v is not None)
    preset = from_flags.get('preset') or from_file.get('preset') or preset
    if preset:
        if preset not in PRESETS:
            raise ConfigError('unknown preset: %s (known: %s)' % (preset, ', '.join(sorted(PRESETS))))
        resolved.update(PRESETS[preset])
        resolved['preset'] = preset
    for key, value in from_file.items():
        resolved[key] = value
    for key, value in from_flags.items():
        resolved[key] = convert_value(key, value)
    return resolved


class FitConfig:
    """
    Settings of a single fit.

    @ivar levels: ascending checkpoint shape counts,
                  the last one is the total number of shapes.
    """
    KEYS = sorted(DEFAULT_FIT_CONFIG)

    def __init__(self, **settings):
        values = dict(DEFAULT_FIT_CONFIG)
        for key, value in settings.items():
            if key not in DEFAULT_FIT_CONFIG:
                raise ConfigError('unknown fit setting: %s' % key)
            values[key] = convert_value(key, value)
        for key in self.KEYS:
            setattr(self, key, values[key])
        self.levels = list(self.levels)
        self.validate()

    def __repr__(self):
        return 'FitConfig(%s)' % ', '.join('%s=%s' % (k, getattr(self, k)) for k in self.KEYS)

    def __eq__(self, other):
        return isinstance(other, FitConfig) and self.to_dict() == other.to_dict()

    @classmethod
    def from_dict(cls, values):
        """Builds a FitConfig from a dict, keys of other configs are ignored."""
        return cls(**dict((k, v) for k, v in values.items() if k in DEFAULT_FIT_CONFIG))

    @property
    def total_shapes(self):
        return self.levels[-1]

    def validate(self):
        if self.mode not in (0, 1):
            raise ConfigError('mode must be 0 or 1, got %s' % self.mode)
        if not self.levels:
            raise ConfigError('at least one level is required')
        if self.levels[0] < 1:
            raise ConfigError('levels must be positive: %s' % self.levels)
        for first, second in zip(self.levels, self.levels[1:]):
            if first >= second:
                raise ConfigError('levels must be strictly increasing: %s' % self.levels)
        if not 1 <= self.alpha <= 255:
            raise ConfigError('alpha must be in [1, 255], got %s' % self.alpha)
        if not self.probes >= self.climbers >= 1:
            raise ConfigError('need probes >= climbers >= 1, got %s, %s' % (self.probes, self.climbers))
        for key in ('max_age', 'working_size', 'workers', 'max_initial_extent'):
            if getattr(self, key) < 1:
                raise ConfigError('%s must be >= 1' % key)
        for key in ('sigma', 'angle_sigma', 'max_retries'):
            if getattr(self, key) < 0:
                raise ConfigError('%s must be >= 0' % key)

    def to_dict(self):
        result = dict((key, getattr(self, key)) for key in self.KEYS)
        result['levels'] = list(self.levels)
        return result

    def clone(self, **changes):
        """New FitConfig with some settings changed."""
        values = self.to_dict()
        values.update(changes)
        return FitConfig(**values)


class BudgetPolicy:
    """
    Linear mapping of image entropy onto a shape count.

    Entropy below low_entropy gets min_shapes, above high_entropy max_shapes.
    """
    def __init__(self, min_shapes=100, max_shapes=1000, low_entropy=3.0, high_entropy=7.0):
        self.min_shapes = int(min_shapes)
        self.max_shapes = int(max_shapes)
        self.low_entropy = float(low_entropy)
        self.high_entropy = float(high_entropy)
        if self.min_shapes < 1 or self.min_shapes > self.max_shapes:
            raise ConfigError('need 1 <= min_shapes <= max_shapes, got %i, %i'
                              % (self.min_shapes, self.max_shapes))
        if not self.low_entropy < self.high_entropy:
            raise ConfigError('need low_entropy < high_entropy, got %s, %s'
                              % (self.low_entropy, self.high_entropy))

    def __repr__(self):
        return 'BudgetPolicy(%i, %i, %s, %s)' % (self.min_shapes, self.max_shapes,
                                               self.low_entropy, self.high_entropy)

    @classmethod
    def from_text(cls, text):
        """'100,1000,3.0,7.0' ---> BudgetPolicy"""
        parts = [p.strip() for p in str(text).split(',')]
        if len(parts) != 4:
            raise ConfigError('budget policy needs min,max,low_H,high_H, got: %s' % text)
        try:
            return cls(int(parts[0]), int(parts[1]), float(parts[2]), float(parts[3]))
        except ValueError as e:
            raise ConfigError('bad budget policy %s: %s' % (text, e))

    def to_dict(self):
        return {
            'budget_min_shapes': self.min_shapes,
            'budget_max_shapes': self.max_shapes,
            'budget_low_entropy': self.low_entropy,
            'budget_high_entropy': self.high_entropy,
            }


class DatasetConfig:
    """
    Settings of a dataset build.

    @ivar fit:    FitConfig used for every image and mode
                  (mode is overridden per mode from self.modes).
    @ivar budget: BudgetPolicy or None when entropy budgeting is off.
    """
    def __init__(self, input_root, output_root, fit=None, modes=(0,), split='8:1:1',
                 split_seed=0, resume=False, budget=None, preset=None):
        self.input_root = input_root
        self.output_root = output_root
        self.fit = fit or FitConfig()
        self.modes = sorted(set(int(m) for m in modes))
        self.split = split
        self.split_seed = int(split_seed)
        self.resume = bool(resume)
        self.budget = budget
        self.preset = preset
        self.validate()

    def validate(self):
        if not self.modes:
            raise ConfigError('at least one mode is required')
        for mode in self.modes:
            if mode not in (0, 1):
                raise ConfigError('modes must be 0 or 1, got %s' % mode)
        if not self.input_root:
            raise ConfigError('input root is required')
        if not self.output_root:
            raise ConfigError('output root is required')

    @classmethod
    def from_dict(cls, values):
        """Builds a DatasetConfig from a resolved configuration dict."""
        budget = None
        if values.get('budget'):
            budget = BudgetPolicy(values['budget_min_shapes'], values['budget_max_shapes'],
                                  values['budget_low_entropy'], values['budget_high_entropy'])
        return cls(values.get('input_root'), values.get('output_root'),
                   fit=FitConfig.from_dict(values),
                   modes=values.get('modes', (0,)),
                   split=values.get('split', '8:1:1'),
                   split_seed=values.get('split_seed', 0),
                   resume=values.get('resume', False),
                   budget=budget,
                   preset=values.get('preset'))

    def to_dict(self):
        result = dict(DEFAULT_DATASET_CONFIG)
        result.update(self.fit.to_dict())
        result.update({
            'input_root': self.input_root,
            'output_root': self.output_root,
            'modes': list(self.modes),
            'split': self.split,
            'split_seed': self.split_seed,
            'resume': self.resume,
            'budget': self.budget is not None,
            'preset': self.preset,
            })
        if self.budget is not None:
            result.update(self.budget.to_dict())
        return result
