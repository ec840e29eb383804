#!/usr/bin/env python

"""
Default settings for fitting and dataset generation.

DEFAULT_FIT_CONFIG     - search hyperparameters of a single fit.
DEFAULT_DATASET_CONFIG - corpus level settings.
DEFAULT_BUDGET_POLICY  - entropy ---> shape count mapping (opt-in).
PRESETS                - generation recipes of the three source corpora.
"""

# Levels from 10 to 1,000 shapes.
DEFAULT_LEVELS = [10, 30, 50, 100, 500, 1000]

DEFAULT_FIT_CONFIG = {
    'mode': 0,
    'levels': DEFAULT_LEVELS,
    'alpha': 128,
    'probes': 1000,
    'climbers': 4,
    'max_age': 100,
    'working_size': 256,
    'seed': 0,
    'workers': 1,
    'sigma': 16,
    'angle_sigma': 32,
    'max_initial_extent': 32,
    'max_retries': 10,
    }

DEFAULT_BUDGET_POLICY = {
    'budget_min_shapes': 100,
    'budget_max_shapes': 1000,
    'budget_low_entropy': 3.0,
    'budget_high_entropy': 7.0,
    }

DEFAULT_DATASET_CONFIG = {
    'input_root': None,
    'output_root': None,
    'modes': [0],
    'split': '8:1:1',
    'split_seed': 0,
    'resume': False,
    'budget': False,
    'preset': None,
    }
DEFAULT_DATASET_CONFIG.update(DEFAULT_BUDGET_POLICY)

# Environment variable with the default worker count.
WORKERS_ENV = 'SHAPECOMPILER_WORKERS'

PRESETS = {
    'miniimagenet': {'levels': [10, 30, 50, 100, 500, 1000], 'split': '8:1:1'},
    'caltech256': {'levels': [10, 30, 50, 100], 'split': '9:1'},
    # official train/test assignment comes from a split file.
    'cifar10': {'levels': [10, 30, 50, 100], 'split': 'predefined'},
    }

# key: (type, help) for the key = value config file.
CONFIG_KEYS = {
    'mode': ('int', 'shape mode, 0 all kinds, 1 triangles only'),
    'levels': ('int_list', 'ascending checkpoint shape counts'),
    'alpha': ('int', 'shape opacity 1-255'),
    'probes': ('int', 'random candidates per shape'),
    'climbers': ('int', 'best candidates that are hill climbed'),
    'max_age': ('int', 'non-improving mutations before a climb stops'),
    'working_size': ('int', 'max dimension of the fitting canvas'),
    'seed': ('int', 'run seed'),
    'workers': ('int', 'parallel evaluators'),
    'sigma': ('int', 'mutation step in pixels'),
    'angle_sigma': ('int', 'mutation step in degrees'),
    'max_initial_extent': ('int', 'max extent of a random shape in pixels'),
    'max_retries': ('int', 're-proposals before a non-improving shape is forced'),
    'input_root': ('str', 'corpus root, one directory per class'),
    'output_root': ('str', 'output directory'),
    'modes': ('int_list', 'modes generated for every image'),
    'split': ('str', '8:1:1, 9:1 or file=PATH'),
    'split_seed': ('int', 'seed of the stratified shuffle'),
    'resume': ('bool', 'skip images completed by an earlier run'),
    'budget': ('bool', 'use the entropy budget as the last level'),
    'budget_min_shapes': ('int', 'budget at low entropy'),
    'budget_max_shapes': ('int', 'budget at high entropy'),
    'budget_low_entropy': ('float', 'entropy in bits mapped to the min budget'),
    'budget_high_entropy': ('float', 'entropy in bits mapped to the max budget'),
    'preset': ('str', 'miniimagenet, caltech256 or cifar10'),
    # recorded by analyze and render runs
    'manifest': ('str', 'analysed manifest.jsonl'),
    'groups': ('int', 'number of entropy groups'),
    'sample_size': ('int', 'manifest entries sampled for the analysis'),
    'csv': ('str', 'CSV copy of the group table'),
    'document': ('str', 'rendered shape-list document'),
    'scale': ('str', 'working or original'),
    'output': ('str', 'rendered PNG'),
    }
