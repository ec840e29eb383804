#!/usr/bin/env python

"""
Unit Tests for builder.py module.
"""

import glob
import os
import shutil
import tempfile
from unittest import main, TestCase

from shapecompiler.dataset.builder import build_dataset, expected_cells, image_seed, output_path
from shapecompiler.dataset.manifest import DatasetManifest, load_manifest, verify_manifest, MANIFEST_NAME
from shapecompiler.definitions.config import DatasetConfig, BudgetPolicy
from shapecompiler.emit.shape_list import read_document
from shapecompiler.emit.render import render
from shapecompiler.util.errors import DatasetError
from shapecompiler.util.warnings import CompilerWarnings
from tests.test_data.images import tiny_config, write_corpus


class BuilderTests(TestCase):
    """
    Tests for building a dataset from a small corpus.
    2 classes x 3 images, modes 0 and 1, levels 2 and 4.
    """
    def setUp(self):
        self.directory = tempfile.mkdtemp()
        self.input_root = os.path.join(self.directory, 'corpus')
        write_corpus(self.input_root, per_class=3)

    def tearDown(self):
        shutil.rmtree(self.directory)

    def get_config(self, name='out', **changes):
        values = dict(fit=tiny_config(), modes=[0, 1], split='2:1')
        values.update(changes)
        return DatasetConfig(self.input_root, os.path.join(self.directory, name), **values)

    def test_layout(self):
        config = self.get_config()
        manifest = build_dataset(config)
        root = config.output_root
        self.assertEqual(len(glob.glob(os.path.join(root, '*', '*', '*', '*.svg'))), 24)
        self.assertEqual(len(manifest), 6)
        self.assertTrue(all(entry.cells == [(0, 2), (0, 4), (1, 2), (1, 4)] for entry in manifest))
        self.assertEqual(load_manifest(os.path.join(root, MANIFEST_NAME)), manifest)
        self.assertEqual(verify_manifest(manifest, root), [])
        self.assertTrue(os.path.isfile(os.path.join(root, 'warnings.json')))
        self.assertEqual(manifest[0].get_output(1, 4).svg, '1/4/cats/img00.svg')

    def test_outputs_replay(self):
        """Stored shape lists reproduce the recorded scores."""
        config = self.get_config()
        manifest = build_dataset(config)
        out = manifest[0].get_output(1, 4)
        document = read_document(os.path.join(config.output_root, out.json))
        self.assertEqual(len(document), 4)
        self.assertTrue(all(shape.kind.value == 'triangle' for shape in document.shapes))
        self.assertEqual(render(document).size, (12, 10))

    def test_collision(self):
        build_dataset(self.get_config())
        self.assertRaises(DatasetError, build_dataset, self.get_config())

    def test_resume(self):
        """An interrupted build finished with resume equals an uninterrupted one."""
        full = build_dataset(self.get_config('full'))
        config = self.get_config('part')
        build_dataset(config)
        manifest_path = os.path.join(config.output_root, MANIFEST_NAME)
        with open(manifest_path, 'w') as f:
            f.write(DatasetManifest(full[:3]).to_jsonl() + full[3].to_json()[:30])
        warnings = CompilerWarnings()
        resumed = build_dataset(self.get_config('part', resume=True), warnings)
        self.assertEqual(resumed, full)
        self.assertEqual(len(warnings.resumed), 3)
        with open(manifest_path) as f, open(os.path.join(self.directory, 'full', MANIFEST_NAME)) as g:
            self.assertEqual(f.read(), g.read())

    def test_resume_with_new_levels(self):
        """Entries written for other levels are refitted, not reused."""
        build_dataset(self.get_config('part', fit=tiny_config(levels=[2]), modes=[0]))
        warnings = CompilerWarnings()
        resumed = build_dataset(self.get_config('part', modes=[0], resume=True), warnings)
        self.assertTrue(all(entry.cells == [(0, 2), (0, 4)] for entry in resumed))
        self.assertEqual(warnings.resumed, [])
        self.assertEqual(resumed, build_dataset(self.get_config('fresh', modes=[0])))

    def test_resume_with_new_modes(self):
        build_dataset(self.get_config('part', modes=[1]))
        resumed = build_dataset(self.get_config('part', resume=True))
        self.assertTrue(all(entry.cells == [(0, 2), (0, 4), (1, 2), (1, 4)] for entry in resumed))

    def test_expected_cells(self):
        config = self.get_config()
        self.assertEqual(expected_cells(config, 5.0), [(0, 2), (0, 4), (1, 2), (1, 4)])
        budgeted = self.get_config(budget=BudgetPolicy(3, 5, 3.0, 7.0), modes=[1])
        self.assertEqual(expected_cells(budgeted, 3.0), [(1, 2), (1, 3)])
        self.assertEqual(expected_cells(budgeted, 7.0), [(1, 2), (1, 4), (1, 5)])

    def test_workers(self):
        """Image parallelism does not change the outputs."""
        serial = build_dataset(self.get_config('serial'))
        parallel = build_dataset(self.get_config('parallel', fit=tiny_config(workers=2)))
        self.assertEqual(serial, parallel)

    def test_failed_image(self):
        with open(os.path.join(self.input_root, 'cats', 'zz.png'), 'wb') as f:
            f.write(b'broken')
        warnings = CompilerWarnings()
        manifest = build_dataset(self.get_config(), warnings)
        self.assertEqual(len(manifest), 7)
        self.assertEqual([e.source for e in manifest.failed_entries], ['cats/zz.png'])
        self.assertIn('cats/zz.png', warnings.failed_images)

    def test_budget(self):
        """With budgeting the last level is the entropy budget."""
        policy = BudgetPolicy(3, 5, 3.0, 7.0)
        manifest = build_dataset(self.get_config(budget=policy, modes=[1]))
        for entry in manifest:
            levels = [level for mode, level in entry.cells]
            self.assertTrue(3 <= levels[-1] <= 5)
            self.assertEqual(levels[:-1], [level for level in (2, 4) if level < levels[-1]])

    def test_seed(self):
        self.assertEqual(image_seed(0, 'cats/a.png'), image_seed(0, 'cats/a.png'))
        self.assertNotEqual(image_seed(0, 'cats/a.png'), image_seed(0, 'cats/b.png'))
        self.assertNotEqual(image_seed(0, 'cats/a.png'), image_seed(1, 'cats/a.png'))
        self.assertEqual(output_path(0, 10, 'cats/a.jpg', 'svg'), '0/10/cats/a.svg')


if __name__ == '__main__':
    main()
