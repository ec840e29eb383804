#!/usr/bin/env python

"""
Unit Tests for level_summary.py module.
"""

import json
from unittest import main, TestCase

from shapecompiler.analyze.level_summary import level_summary
from shapecompiler.dataset.manifest import DatasetManifest, LevelOutput, ManifestEntry
from shapecompiler.util.errors import AnalysisError


class LevelSummaryTests(TestCase):
    def setUp(self):
        entries = []
        for i, (rmse, svg) in enumerate([(10.0, 200), (20.0, 400)]):
            outputs = [LevelOutput(0, 10, 's', 'j', 'p', rmse, svg, 30),
                       LevelOutput(1, 10, 's', 'j', 'p', rmse + 1, svg // 2, 30)]
            entries.append(ManifestEntry('c/%i.png' % i, 'c', 'train', 4.0, source_bytes=1000,
                                         outputs=outputs))
        self.summary = level_summary(DatasetManifest(entries))

    def test_rows(self):
        row = self.summary.get_row(0, 10)
        self.assertEqual(row.count, 2)
        self.assertEqual(row.mean_rmse, 15.0)
        self.assertEqual(row.mean_svg_bytes, 300.0)
        self.assertAlmostEqual(row.svg_to_source_ratio, 0.3)
        self.assertRaises(KeyError, self.summary.get_row, 0, 30)

    def test_mode_ratio(self):
        self.assertEqual(self.summary.mode_ratio, {10: 0.5})
        data = json.loads(self.summary.to_json())
        self.assertEqual(data['mode1_to_mode0_svg_bytes'], {'10': 0.5})
        self.assertIn('level 10: 0.5000', self.summary.to_table())

    def test_empty(self):
        self.assertRaises(AnalysisError, level_summary, DatasetManifest([ManifestEntry('c/a.png', 'c', 'train')]))


if __name__ == '__main__':
    main()
