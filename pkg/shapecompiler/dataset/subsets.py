#!/usr/bin/env python

"""
Training subsets of a manifest (fractions of the train split per class).
"""

import math
from collections import OrderedDict

import numpy as np

from shapecompiler.dataset.manifest import DatasetManifest
from shapecompiler.util.errors import ConfigError
from shapecompiler.util.util import stable_key

DEFAULT_FRACTIONS = [0.2, 0.4, 0.6, 0.8]
TRAIN = 'train'


def subset_name(fraction):
    """0.2 ---> 'manifest_f020.jsonl'"""
    return 'manifest_f%03i.jsonl' % int(math.floor(fraction * 100 + 0.5))


def sample_subsets(manifest, fractions=DEFAULT_FRACTIONS, seed=0):
    """
    For every fraction f keeps round(f * n) train entries of each class
    (n train entries in the class) and all other entries.
    Subsets are nested: one permutation per class serves all fractions.

    @rtype:  OrderedDict
    @return: fraction: DatasetManifest, fractions ascending.
    """
    for fraction in fractions:
        if not 0 < fraction <= 1:
            raise ConfigError('subset fractions must be in (0, 1], got %s' % fraction)
    train = OrderedDict()
    for entry in manifest:
        if entry.split == TRAIN:
            train.setdefault(entry.label, []).append(entry.source)
    permuted = {}
    for label, sources in train.items():
        rng = np.random.default_rng([int(seed) & 0xffffffff, stable_key(label)])
        permuted[label] = [sources[i] for i in rng.permutation(len(sources))]
    subsets = OrderedDict()
    for fraction in sorted(fractions):
        keep = set()
        for label, sources in permuted.items():
            keep.update(sources[:int(math.floor(fraction * len(sources) + 0.5))])
        subsets[fraction] = DatasetManifest(entry for entry in manifest
                                            if entry.split != TRAIN or entry.source in keep)
    return subsets
