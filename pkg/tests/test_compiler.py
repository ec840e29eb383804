#!/usr/bin/env python

"""
Unit tests for compiler.py
"""

import os
import shutil
import tempfile
from unittest import main, TestCase

from shapecompiler.compiler import Compiler, RESOLVED_CONFIG_NAME, TRACE_NAME
from shapecompiler.definitions.config import load_config_file
from shapecompiler.emit.shape_list import read_document
from shapecompiler.emit.svg_output import parse_svg
from shapecompiler.raster.raster_image import load_image
from tests.test_data.images import tiny_config, scene


class CompilerTests(TestCase):
    """
    Unit Tests for Compiler class.
    Tests whether abstractions are produced from
    a path and from a RasterImage.
    """
    def setUp(self):
        self.directory = tempfile.mkdtemp()
        self.image = scene(24, 16, seed=11)
        self.path = os.path.join(self.directory, 'photo.png')
        self.image.save_png(self.path)

    def tearDown(self):
        shutil.rmtree(self.directory)

    def test_basic(self):
        """Path and RasterImage inputs give the same abstraction."""
        from_path = Compiler(self.path, tiny_config())
        from_image = Compiler(self.image, tiny_config())
        self.assertEqual(from_path.name, 'photo')
        self.assertEqual(from_path.get_svg(), from_image.get_svg())
        self.assertEqual(from_path.get_shape_list(2), from_image.get_shape_list(2))
        self.assertTrue(from_path.check_replay())

    def test_levels(self):
        comp = Compiler(self.image, tiny_config())
        checkpoints = comp.translate()
        self.assertEqual(checkpoints.levels, [2, 4])
        self.assertEqual(len(parse_svg(comp.get_svg(2))[1]), 2)
        self.assertEqual(comp.get_image().size, (24, 16))
        self.assertLess(len(comp.get_svg(minify=True)), len(comp.get_svg()))

    def test_write_outputs(self):
        comp = Compiler(self.path, tiny_config(mode=1))
        output = os.path.join(self.directory, 'out')
        written = comp.write_outputs(output, minify=True, trace=True)
        names = sorted(os.path.basename(path) for path in written)
        self.assertEqual(names, ['photo_1_2.json', 'photo_1_2.min.svg', 'photo_1_2.png', 'photo_1_2.svg',
                                 'photo_1_4.json', 'photo_1_4.min.svg', 'photo_1_4.png', 'photo_1_4.svg',
                                 RESOLVED_CONFIG_NAME, TRACE_NAME])
        self.assertEqual(len(read_document(os.path.join(output, 'photo_1_4.json'))), 4)
        self.assertEqual(load_image(os.path.join(output, 'photo_1_4.png')).size, (24, 16))
        self.assertEqual(load_config_file(os.path.join(output, RESOLVED_CONFIG_NAME))['levels'], [2, 4])


if __name__ == '__main__':
    main()
