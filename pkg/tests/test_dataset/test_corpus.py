#!/usr/bin/env python

"""
Unit Tests for corpus.py module.
"""

import os
import shutil
import tempfile
from unittest import main, TestCase

from shapecompiler.dataset.corpus import discover_images, image_stem
from shapecompiler.util.errors import DatasetError
from tests.test_data.images import write_corpus


class CorpusTests(TestCase):
    def setUp(self):
        self.root = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.root)

    def test_order(self):
        """Classes by name, files by name; other files are skipped."""
        write_corpus(self.root, classes=('zebra', 'ant'), per_class=2)
        with open(os.path.join(self.root, 'ant', 'notes.txt'), 'w') as f:
            f.write('x')
        with open(os.path.join(self.root, 'top.png'), 'w') as f:
            f.write('x')
        images = discover_images(self.root)
        self.assertEqual([i.rel_path for i in images],
                         ['ant/img00.png', 'ant/img01.png', 'zebra/img00.png', 'zebra/img01.png'])
        self.assertEqual(images[0].label, 'ant')
        self.assertTrue(os.path.isfile(images[0].path))

    def test_errors(self):
        self.assertRaises(DatasetError, discover_images, self.root)
        self.assertRaises(DatasetError, discover_images, os.path.join(self.root, 'missing'))

    def test_stem(self):
        self.assertEqual(image_stem('cats/a.b.jpg'), 'a.b')


if __name__ == '__main__':
    main()
