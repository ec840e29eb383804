#!/usr/bin/env python

"""
Unit Tests for splits.py module.
"""

import os
import shutil
import tempfile
from unittest import main, TestCase

from shapecompiler.dataset.corpus import SourceImage
from shapecompiler.dataset.splits import SplitSpec, allocate, plan_splits, split_counts, read_split_file
from shapecompiler.util.errors import SplitError
from shapecompiler.util.warnings import CompilerWarnings


def images(label, count):
    return [SourceImage('%s/%03i.png' % (label, i), label, None) for i in range(count)]


class SplitTests(TestCase):
    """
    Tests for stratified and file based splits.
    """
    def test_allocate(self):
        self.assertEqual(allocate(100, [8, 1, 1]), [80, 10, 10])
        self.assertEqual(allocate(10, [9, 1]), [9, 1])
        self.assertEqual(allocate(7, [8, 1, 1]), [5, 1, 1])
        self.assertEqual(sum(allocate(13, [3, 3, 3])), 13)

    def test_parse(self):
        self.assertEqual(SplitSpec.parse('8:1:1').names, ('train', 'val', 'test'))
        self.assertEqual(SplitSpec.parse('9:1').names, ('train', 'val'))
        self.assertEqual(SplitSpec.parse('file=/tmp/s.tsv').path, '/tmp/s.tsv')
        self.assertEqual(SplitSpec.parse('predefined', '/data').path, os.path.join('/data', 'splits.tsv'))
        for text in ('8', '8:1:1:1', 'a:b', '0:1', 'predefined'):
            self.assertRaises(SplitError, SplitSpec.parse, text)

    def test_stratified(self):
        """100 images per class split 80 / 10 / 10 inside every class."""
        corpus = images('cats', 100) + images('dogs', 100)
        assignment = plan_splits(corpus, '8:1:1', 0)
        self.assertEqual(list(assignment), [i.rel_path for i in corpus])
        self.assertEqual(split_counts(assignment), {'train': 160, 'val': 20, 'test': 20})
        cats = dict((k, v) for k, v in assignment.items() if k.startswith('cats/'))
        self.assertEqual(split_counts(cats), {'train': 80, 'val': 10, 'test': 10})

    def test_two_way(self):
        assignment = plan_splits(images('cats', 10), '9:1', 5)
        self.assertEqual(split_counts(assignment), {'train': 9, 'val': 1})

    def test_deterministic(self):
        corpus = images('cats', 30) + images('dogs', 20)
        self.assertEqual(plan_splits(corpus, '8:1:1', 3), plan_splits(corpus, '8:1:1', 3))
        shuffled = list(reversed(corpus))
        self.assertEqual(dict(plan_splits(shuffled, '8:1:1', 3)), dict(plan_splits(corpus, '8:1:1', 3)))

    def test_small_class(self):
        """A class with fewer images than parts goes to train."""
        warnings = CompilerWarnings()
        assignment = plan_splits(images('cats', 10) + images('owls', 2), '8:1:1', 0, warnings)
        self.assertEqual(set(v for k, v in assignment.items() if k.startswith('owls/')), set(['train']))
        self.assertEqual(warnings.small_classes, {'owls': 2})

    def test_file(self):
        directory = tempfile.mkdtemp()
        try:
            path = os.path.join(directory, 'splits.tsv')
            with open(path, 'w') as f:
                f.write('# official\ncats/000.png\ttrain\ncats/001.png\ttest\n')
            self.assertEqual(read_split_file(path)['cats/001.png'], 'test')
            assignment = plan_splits(images('cats', 2), 'predefined', 0, input_root=directory)
            self.assertEqual(list(assignment.values()), ['train', 'test'])
            self.assertRaises(SplitError, plan_splits, images('cats', 3), 'file=%s' % path, 0)
            with open(path, 'a') as f:
                f.write('broken line\n')
            self.assertRaises(SplitError, read_split_file, path)
            self.assertRaises(SplitError, read_split_file, os.path.join(directory, 'none.tsv'))
        finally:
            shutil.rmtree(directory)


if __name__ == '__main__':
    main()
