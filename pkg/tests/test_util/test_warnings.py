#!/usr/bin/env python

"""
Unit Tests for warnings.py module.
"""

import json
import os
import shutil
import tempfile
from unittest import main, TestCase

from shapecompiler.util.warnings import CompilerWarnings


class CompilerWarningsTests(TestCase):
    """
    Tests for collecting non-fatal problems.
    """
    def setUp(self):
        self.war = CompilerWarnings()
        self.war.add_forced_step('cats/a.png', 7)
        self.war.add_small_class('birds', 1)
        self.war.add_failed_image('dogs/x.png', 'cannot decode')

    def test_collect(self):
        self.assertEqual(len(self.war), 3)
        self.assertEqual(self.war.forced_steps, [('cats/a.png', 7)])
        self.assertEqual(self.war.small_classes, {'birds': 1})
        self.assertIn('1 forced steps', self.war.get_summary_str())

    def test_merge(self):
        other = CompilerWarnings()
        other.add_forced_step('cats/b.png', 2)
        other.add_resumed('cats/c.png')
        self.war.merge(other)
        self.assertEqual(len(self.war.forced_steps), 2)
        self.assertEqual(self.war.resumed, ['cats/c.png'])

    def test_write(self):
        directory = tempfile.mkdtemp()
        try:
            path = os.path.join(directory, 'warnings.json')
            self.war.write(path)
            with open(path) as f:
                data = json.load(f)
            self.assertEqual(data['failed_images'], {'dogs/x.png': 'cannot decode'})
            self.assertEqual(data['forced_steps'], [['cats/a.png', 7]])
        finally:
            shutil.rmtree(directory)


if __name__ == '__main__':
    main()
