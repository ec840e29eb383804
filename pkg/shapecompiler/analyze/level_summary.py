#!/usr/bin/env python

"""
Per (mode, level) aggregates of a manifest.
"""

import json

import numpy as np

from shapecompiler.analyze.entropy_groups import cell_key
from shapecompiler.util.errors import AnalysisError


class LevelRow:
    def __init__(self, mode, level, pairs):
        """pairs: (ManifestEntry, LevelOutput) of this cell."""
        self.mode = mode
        self.level = level
        self.count = len(pairs)
        self.mean_rmse = float(np.mean([out.rmse for _, out in pairs]))
        self.mean_svg_bytes = float(np.mean([out.svg_bytes for _, out in pairs]))
        self.mean_png_bytes = float(np.mean([out.png_bytes for _, out in pairs]))
        ratios = [out.svg_bytes / float(entry.source_bytes) for entry, out in pairs if entry.source_bytes]
        self.svg_to_source_ratio = float(np.mean(ratios)) if ratios else None

    def to_dict(self):
        return {'mode': self.mode, 'level': self.level, 'count': self.count,
                'mean_rmse': self.mean_rmse, 'mean_svg_bytes': self.mean_svg_bytes,
                'mean_png_bytes': self.mean_png_bytes,
                'svg_to_source_ratio': self.svg_to_source_ratio}


class LevelSummary:
    """
    @ivar mode_ratio: {level: mean svg bytes of mode 1 / mode 0}
                      for levels generated in both modes.
    """
    def __init__(self, rows):
        self.rows = rows
        by_cell = dict(((row.mode, row.level), row) for row in rows)
        self.mode_ratio = {}
        for (mode, level), row in sorted(by_cell.items()):
            if mode == 1 and (0, level) in by_cell and by_cell[(0, level)].mean_svg_bytes:
                self.mode_ratio[level] = row.mean_svg_bytes / by_cell[(0, level)].mean_svg_bytes

    def get_row(self, mode, level):
        for row in self.rows:
            if (row.mode, row.level) == (mode, level):
                return row
        raise KeyError(cell_key(mode, level))

    def to_dict(self):
        return {'rows': [row.to_dict() for row in self.rows],
                'mode1_to_mode0_svg_bytes': dict((str(k), v) for k, v in self.mode_ratio.items())}

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_table(self):
        lines = ['%4s %6s %6s %10s %12s %12s %10s' % ('mode', 'level', 'count', 'rmse',
                                                       'svg_bytes', 'png_bytes', 'svg/src')]
        for row in self.rows:
            ratio = '-' if row.svg_to_source_ratio is None else '%.4f' % row.svg_to_source_ratio
            lines.append('%4i %6i %6i %10.4f %12.1f %12.1f %10s' % (
                row.mode, row.level, row.count, row.mean_rmse, row.mean_svg_bytes,
                row.mean_png_bytes, ratio))
        for level in sorted(self.mode_ratio):
            lines.append('mode 1 / mode 0 svg bytes at level %i: %.4f' % (level, self.mode_ratio[level]))
        return '\n'.join(lines) + '\n'


def level_summary(manifest):
    """Raises AnalysisError when no entry has outputs."""
    cells = {}
    for entry in manifest.ok_entries:
        for out in entry.outputs:
            cells.setdefault((out.mode, out.level), []).append((entry, out))
    if not cells:
        raise AnalysisError('manifest has no outputs to summarise')
    return LevelSummary([LevelRow(mode, level, cells[(mode, level)]) for mode, level in sorted(cells)])
