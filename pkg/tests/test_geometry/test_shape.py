#!/usr/bin/env python

"""
Unit Tests for shape.py module.
"""

import pickle
from unittest import main, TestCase

from shapecompiler.geometry.shape import Shape, ShapeKind, SpanList, MODE_KINDS, ALL_KINDS


class ShapeTests(TestCase):
    """
    Tests for Shape values.
    """
    def test_params(self):
        shape = Shape(ShapeKind.CIRCLE, [3, 4, 5])
        self.assertEqual(shape['cx'], 3)
        self.assertEqual(shape['r'], 5)
        self.assertEqual(shape.as_dict(), {'cx': 3, 'cy': 4, 'r': 5})
        self.assertEqual(str(shape), 'circle(cx=3, cy=4, r=5)')

    def test_wrong_param_count(self):
        self.assertRaises(ValueError, Shape, ShapeKind.CIRCLE, [1, 2])

    def test_immutable(self):
        """Shapes are values: replace returns a new object."""
        shape = Shape('ellipse', [1, 1, 2, 3])
        self.assertRaises(AttributeError, setattr, shape, 'params', (0, 0, 0, 0))
        moved = shape.replace(cx=5)
        self.assertEqual(shape['cx'], 1)
        self.assertEqual(moved['cx'], 5)
        self.assertRaises(KeyError, shape.replace, r=3)

    def test_equality_and_pickle(self):
        a = Shape(ShapeKind.TRIANGLE, [0, 0, 5, 0, 0, 5])
        b = Shape('triangle', (0, 0, 5, 0, 0, 5))
        self.assertEqual(a, b)
        self.assertEqual(hash(a), hash(b))
        self.assertEqual(pickle.loads(pickle.dumps(a)), a)

    def test_clamped(self):
        """Coordinates go inside the canvas, extents into [1, max(W, H)], angles mod 360."""
        shape = Shape(ShapeKind.ROTATED_RECTANGLE, [-4, 30, 0, 500, 725]).clamped((20, 10))
        self.assertEqual(shape.params, (0, 9, 1, 20, 5))
        triangle = Shape(ShapeKind.TRIANGLE, [-1, -1, 25, 3, 4, 12]).clamped((20, 10))
        self.assertEqual(triangle.params, (0, 0, 19, 3, 4, 9))

    def test_clamped_rectangle_ordered(self):
        rect = Shape(ShapeKind.RECTANGLE, [8, 7, 2, 3]).clamped((10, 10))
        self.assertEqual(rect.params, (2, 3, 8, 7))

    def test_degenerate(self):
        self.assertTrue(Shape(ShapeKind.TRIANGLE, [0, 0, 2, 2, 4, 4]).is_degenerate())
        self.assertFalse(Shape(ShapeKind.TRIANGLE, [0, 0, 2, 2, 4, 5]).is_degenerate())
        self.assertFalse(Shape(ShapeKind.CIRCLE, [0, 0, 1]).is_degenerate())

    def test_modes(self):
        self.assertEqual(len(ALL_KINDS), 6)
        self.assertEqual(MODE_KINDS[1], [ShapeKind.TRIANGLE])


class SpanListTests(TestCase):
    """
    Tests for span containers.
    """
    def setUp(self):
        self.spans = SpanList([1, 2], [2, 0], [3, 1])

    def test_pixels(self):
        self.assertEqual(len(self.spans), 2)
        self.assertEqual(self.spans.pixel_count, 4)
        self.assertEqual(self.spans.pixels(), set([(2, 1), (3, 1), (0, 2), (1, 2)]))
        self.assertEqual(self.spans.bounding_box(), (0, 1, 3, 2))

    def test_flat_indices(self):
        """Row-major indices in a canvas 5 pixels wide."""
        self.assertEqual(self.spans.flat_indices(5).tolist(), [7, 8, 10, 11])

    def test_empty(self):
        empty = SpanList.empty()
        self.assertTrue(empty.is_empty)
        self.assertEqual(empty.pixel_count, 0)
        self.assertEqual(empty.flat_indices(5).tolist(), [])
        self.assertIsNone(empty.bounding_box())


if __name__ == '__main__':
    main()
