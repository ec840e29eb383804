#!/usr/bin/env python

"""
Module splits.py - assignment of images to train / val / test.

Split settings:
    '8:1:1'       - train, val, test by ratio, stratified per class
    '9:1'         - train, val
    'file=PATH'   - lines 'relative_path<TAB>split_name'
    'predefined'  - same as file=<corpus root>/splits.tsv
"""

import logging
import os
from collections import OrderedDict

import numpy as np

from shapecompiler.util.errors import SplitError
from shapecompiler.util.util import stable_key

logger = logging.getLogger(__name__)

SPLIT_NAMES = {2: ('train', 'val'), 3: ('train', 'val', 'test')}
PREDEFINED = 'predefined'
PREDEFINED_FILE = 'splits.tsv'


class SplitSpec:
    """
    Parsed split setting: either ratios with names or a split file.
    """
    def __init__(self, ratios=None, path=None):
        self.ratios = list(ratios or [])
        self.path = path

    def __repr__(self):
        if self.path:
            return 'SplitSpec(file=%s)' % self.path
        return 'SplitSpec(%s)' % ':'.join(str(r) for r in self.ratios)

    @property
    def names(self):
        return SPLIT_NAMES.get(len(self.ratios), ())

    @classmethod
    def parse(cls, text, input_root=None):
        text = str(text).strip()
        if text == PREDEFINED:
            if input_root is None:
                raise SplitError('predefined split needs the corpus root')
            return cls(path=os.path.join(input_root, PREDEFINED_FILE))
        if text.startswith('file='):
            return cls(path=text[len('file='):])
        try:
            ratios = [int(part) for part in text.split(':')]
        except ValueError:
            raise SplitError('bad split %r, expected e.g. 8:1:1, 9:1 or file=PATH' % text)
        if len(ratios) not in SPLIT_NAMES or min(ratios) < 0 or ratios[0] < 1:
            raise SplitError('split needs 2 or 3 non-negative parts with train > 0: %r' % text)
        return cls(ratios=ratios)


def allocate(count, ratios):
    """
    Largest remainder allocation of count items to ratios.
    Ties of the remainder go to the earlier part.

    >>> allocate(100, [8, 1, 1])
    [80, 10, 10]
    """
    total = sum(ratios)
    quotas = [count * r // total for r in ratios]
    remainders = [count * r % total for r in ratios]
    order = sorted(range(len(ratios)), key=lambda i: (-remainders[i], i))
    for i in order[:count - sum(quotas)]:
        quotas[i] += 1
    return quotas


def read_split_file(path):
    """Returns OrderedDict rel_path: split name."""
    if not os.path.isfile(path):
        raise SplitError('split file not found: %s' % path)
    assignment = OrderedDict()
    with open(path) as f:
        for number, line in enumerate(f, 1):
            line = line.rstrip('\n')
            if not line.strip() or line.startswith('#'):
                continue
            parts = line.split('\t')
            if len(parts) != 2 or not parts[0] or not parts[1]:
                raise SplitError('%s line %i: expected relative_path<TAB>split_name' % (path, number))
            assignment[parts[0].strip()] = parts[1].strip()
    return assignment


def plan_splits(images, split, seed, warnings=None, input_root=None):
    """
    Assigns every SourceImage to a split.

    Per class the images are shuffled with a generator seeded by
    (seed, class key) and cut by allocate(). A class with fewer images
    than split parts goes to train entirely and is recorded in warnings.

    @type split:  string or SplitSpec
    @rtype:       OrderedDict
    @return:      rel_path: split name, in image order.
    """
    if not images:
        raise SplitError('cannot split an empty image list')
    spec = split if isinstance(split, SplitSpec) else SplitSpec.parse(split, input_root)
    if spec.path:
        predefined = read_split_file(spec.path)
        missing = [image.rel_path for image in images if image.rel_path not in predefined]
        if missing:
            raise SplitError('%i images have no split in %s, e.g. %s'
                             % (len(missing), spec.path, missing[0]))
        return OrderedDict((image.rel_path, predefined[image.rel_path]) for image in images)

    by_label = OrderedDict()
    for image in images:
        by_label.setdefault(image.label, []).append(image.rel_path)
    assigned = {}
    for label in sorted(by_label):
        paths = sorted(by_label[label])
        if len(paths) < len(spec.ratios):
            if warnings is not None:
                warnings.add_small_class(label, len(paths))
            for path in paths:
                assigned[path] = spec.names[0]
            continue
        rng = np.random.default_rng([int(seed) & 0xffffffff, stable_key(label)])
        order = rng.permutation(len(paths))
        start = 0
        for name, size in zip(spec.names, allocate(len(paths), spec.ratios)):
            for index in order[start:start + size]:
                assigned[paths[index]] = name
            start += size
    logger.debug('split %s over %i classes', spec, len(by_label))
    return OrderedDict((image.rel_path, assigned[image.rel_path]) for image in images)


def split_counts(assignment):
    """{split name: count}"""
    counts = {}
    for name in assignment.values():
        counts[name] = counts.get(name, 0) + 1
    return counts
