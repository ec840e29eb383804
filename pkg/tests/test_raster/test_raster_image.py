#!/usr/bin/env python

"""
Unit Tests for raster_image.py module.
"""

import os
import shutil
import tempfile
from unittest import main, TestCase

import numpy as np

from shapecompiler.raster.raster_image import Color, RasterImage, load_image
from shapecompiler.util.errors import ImageDecodeError, DimensionMismatchError
from tests.test_data.images import gradient, uniform


class ColorTests(TestCase):
    def test_hex(self):
        self.assertEqual(Color(170, 187, 204).hex, '#aabbcc')
        self.assertEqual(Color(0, 0, 0, 128).rgba, (0, 0, 0, 128))

    def test_range(self):
        self.assertRaises(ValueError, Color, 256, 0, 0)
        self.assertRaises(ValueError, Color, 0, 0, 0, -1)


class RasterImageTests(TestCase):
    """
    Tests for pixel buffers, decoding and resizing.
    """
    def setUp(self):
        self.directory = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.directory)

    def test_sizes(self):
        image = gradient(7, 4)
        self.assertEqual(image.size, (7, 4))
        self.assertEqual(image.flat.shape, (28, 3))
        self.assertRaises(ValueError, RasterImage, np.zeros((0, 4, 3)))
        self.assertRaises(DimensionMismatchError, image.check_same_size, gradient(4, 7))

    def test_png_roundtrip(self):
        """PNG is lossless: saving and loading gives the same pixels."""
        image = gradient(9, 5)
        path = os.path.join(self.directory, 'g.png')
        image.save_png(path)
        self.assertEqual(load_image(path), image)

    def test_decode_errors(self):
        path = os.path.join(self.directory, 'broken.png')
        with open(path, 'wb') as f:
            f.write(b'not an image')
        self.assertRaises(ImageDecodeError, load_image, path)
        self.assertRaises(ImageDecodeError, load_image, os.path.join(self.directory, 'missing.png'))

    def test_resized_to_fit(self):
        """Only downscaling, aspect preserved."""
        image = gradient(40, 20)
        small = image.resized_to_fit(10)
        self.assertEqual(small.size, (10, 5))
        self.assertIs(image.resized_to_fit(64), image)
        flat = uniform(40, 20, (9, 99, 199)).resized_to_fit(8)
        self.assertEqual(set(map(tuple, flat.flat.tolist())), set([(9, 99, 199)]))


if __name__ == '__main__':
    main()
