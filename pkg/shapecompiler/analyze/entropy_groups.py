#!/usr/bin/env python

"""
Module entropy_groups.py - fidelity of abstractions against image entropy.

A seeded sample of manifest entries is sorted by entropy (ties by source
path) and cut into near-equal groups. For every group and every
(mode, level) the mean rmse and mean svg size are reported, plus the
Spearman correlation between group index and group mean rmse.

Classes:
EntropyGroup       - aggregates of one group.
EntropyGroupReport - all groups, JSON / text table / CSV views.
"""

import csv
import io
import json
import logging
import math
import warnings as python_warnings

import numpy as np
from scipy.stats import spearmanr

from shapecompiler.util.errors import AnalysisError

logger = logging.getLogger(__name__)

DEFAULT_GROUPS = 20


def cell_key(mode, level):
    """(0, 10) ---> 'm0_l10'"""
    return 'm%i_l%i' % (mode, level)


def _csv_value(value):
    return '' if value is None else repr(value)


class EntropyGroup:
    """
    @ivar mean_rmse:      {(mode, level): mean rmse}
    @ivar mean_svg_bytes: {(mode, level): mean svg bytes}
    """
    def __init__(self, index, entries, cells):
        self.index = index
        self.sources = [entry.source for entry in entries]
        self.count = len(entries)
        self.mean_entropy = float(np.mean([entry.entropy for entry in entries]))
        self.mean_rmse = {}
        self.mean_svg_bytes = {}
        for cell in cells:
            outputs = [out for entry in entries for out in entry.outputs
                       if (out.mode, out.level) == cell]
            if outputs:
                self.mean_rmse[cell] = float(np.mean([out.rmse for out in outputs]))
                self.mean_svg_bytes[cell] = float(np.mean([out.svg_bytes for out in outputs]))

    def __repr__(self):
        return 'EntropyGroup(%i, %i images, H %.4f)' % (self.index, self.count, self.mean_entropy)

    def to_dict(self):
        return {'group': self.index, 'count': self.count, 'mean_entropy': self.mean_entropy,
                'sources': self.sources,
                'mean_rmse': dict((cell_key(*c), v) for c, v in self.mean_rmse.items()),
                'mean_svg_bytes': dict((cell_key(*c), v) for c, v in self.mean_svg_bytes.items())}


class EntropyGroupReport:
    """
    @ivar spearman: {(mode, level): rho between group index and mean rmse,
                     None when undefined (e.g. constant means)}
    """
    def __init__(self, groups, cells, spearman, sample_size, seed):
        self.groups = groups
        self.cells = cells
        self.spearman = spearman
        self.sample_size = sample_size
        self.seed = seed

    def __repr__(self):
        return 'EntropyGroupReport(%i groups, %i images)' % (len(self.groups), self.sample_size)

    def to_dict(self):
        return {'sample_size': self.sample_size, 'seed': self.seed,
                'cells': [cell_key(*c) for c in self.cells],
                'groups': [group.to_dict() for group in self.groups],
                'spearman_rmse': dict((cell_key(*c), v) for c, v in self.spearman.items())}

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_table(self):
        """Aligned text table, one row per group, mean rmse per cell."""
        header = ['group', 'count', 'entropy'] + [cell_key(*c) for c in self.cells]
        rows = []
        for group in self.groups:
            rows.append([str(group.index), str(group.count), '%.4f' % group.mean_entropy] +
                        ['%.4f' % group.mean_rmse[c] if c in group.mean_rmse else '-'
                         for c in self.cells])
        rows.append(['spearman', '', ''] + ['%.4f' % self.spearman[c] if self.spearman.get(c) is not None
                                            else '-' for c in self.cells])
        widths = [max(len(row[i]) for row in [header] + rows) for i in range(len(header))]
        lines = ['  '.join(value.rjust(width) for value, width in zip(row, widths))
                 for row in [header] + rows]
        return '\n'.join(lines) + '\n'

    def to_csv(self):
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator='\n')
        writer.writerow(['group', 'count', 'mean_entropy'] +
                        ['rmse_' + cell_key(*c) for c in self.cells] +
                        ['svg_bytes_' + cell_key(*c) for c in self.cells])
        for group in self.groups:
            writer.writerow([group.index, group.count, repr(group.mean_entropy)] +
                            [_csv_value(group.mean_rmse.get(c)) for c in self.cells] +
                            [_csv_value(group.mean_svg_bytes.get(c)) for c in self.cells])
        return buf.getvalue()


def _spearman(values):
    if len(values) < 2:
        return None
    with python_warnings.catch_warnings():
        python_warnings.simplefilter('ignore')
        rho = spearmanr(np.arange(len(values)), values)[0]
    rho = float(rho)
    return None if math.isnan(rho) else rho


def entropy_group_analysis(manifest, sample_size=None, groups=DEFAULT_GROUPS, seed=0):
    """
    Groups a seeded sample of manifest entries by entropy.

    @type sample_size:  int or None
    @param sample_size: entries drawn without replacement, all when None.
    Raises AnalysisError with fewer usable entries than groups.
    """
    entries = [entry for entry in manifest if entry.ok and entry.entropy is not None and entry.outputs]
    if groups < 1:
        raise AnalysisError('need at least one group')
    if len(entries) < groups:
        raise AnalysisError('%i usable entries, need at least %i for %i groups'
                            % (len(entries), groups, groups))
    size = len(entries) if sample_size is None else min(int(sample_size), len(entries))
    if size < groups:
        raise AnalysisError('sample of %i entries is smaller than %i groups' % (size, groups))
    rng = np.random.default_rng(int(seed))
    chosen = sorted(rng.choice(len(entries), size=size, replace=False).tolist())
    sample = sorted((entries[i] for i in chosen), key=lambda entry: (entry.entropy, entry.source))
    cells = sorted(set(cell for entry in sample for cell in entry.cells))
    result = [EntropyGroup(index, [sample[i] for i in part], cells)
              for index, part in enumerate(np.array_split(np.arange(size), groups))]
    spearman = {}
    for cell in cells:
        means = [group.mean_rmse[cell] for group in result if cell in group.mean_rmse]
        spearman[cell] = _spearman(means)
    logger.info('grouped %i entries into %i entropy groups', size, groups)
    return EntropyGroupReport(result, cells, spearman, size, int(seed))
