#!/usr/bin/env python

"""
Module shape.py - primitive shape taxonomy and pixel coverage containers.

Classes:
ShapeKind - the six primitive kinds.
Shape     - kind plus integer parameters, immutable.
Span      - one covered run of pixels in a row (y, x1, x2), x2 inclusive.
SpanList  - ordered spans of one rasterized shape.
"""

from collections import namedtuple
from enum import Enum

import numpy as np


class ShapeKind(Enum):
    TRIANGLE = 'triangle'
    RECTANGLE = 'rectangle'
    ROTATED_RECTANGLE = 'rotated_rectangle'
    ELLIPSE = 'ellipse'
    ROTATED_ELLIPSE = 'rotated_ellipse'
    CIRCLE = 'circle'


# Mode 0 draws from all kinds, mode 1 only triangles.
ALL_KINDS = [ShapeKind.TRIANGLE, ShapeKind.RECTANGLE, ShapeKind.ROTATED_RECTANGLE,
             ShapeKind.ELLIPSE, ShapeKind.ROTATED_ELLIPSE, ShapeKind.CIRCLE]
MODE_KINDS = {0: ALL_KINDS, 1: [ShapeKind.TRIANGLE]}

PARAM_NAMES = {
    ShapeKind.TRIANGLE: ('x1', 'y1', 'x2', 'y2', 'x3', 'y3'),
    ShapeKind.RECTANGLE: ('x1', 'y1', 'x2', 'y2'),
    ShapeKind.ROTATED_RECTANGLE: ('cx', 'cy', 'w', 'h', 'angle'),
    ShapeKind.ELLIPSE: ('cx', 'cy', 'rx', 'ry'),
    ShapeKind.ROTATED_ELLIPSE: ('cx', 'cy', 'rx', 'ry', 'angle'),
    ShapeKind.CIRCLE: ('cx', 'cy', 'r'),
    }

# Parameters that are sizes, never below 1.
EXTENT_NAMES = ('w', 'h', 'rx', 'ry', 'r')


class Shape:
    """
    Primitive shape with integer pixel parameters.

    Coordinates of triangles are continuous points, rectangles cover
    the pixel cells (x1, y1) to (x2, y2) inclusive. Centred kinds are
    centred on the middle of pixel (cx, cy); angles are degrees in [0, 360).

    Shapes are values: mutation and clamping return new objects.
    """
    __slots__ = ('kind', 'params')

    def __init__(self, kind, params):
        kind = ShapeKind(kind)
        params = tuple(int(p) for p in params)
        if len(params) != len(PARAM_NAMES[kind]):
            raise ValueError('%s needs %i parameters, got %i'
                             % (kind.value, len(PARAM_NAMES[kind]), len(params)))
        object.__setattr__(self, 'kind', kind)
        object.__setattr__(self, 'params', params)

    def __setattr__(self, name, value):
        raise AttributeError('Shape is immutable')

    def __reduce__(self):
        return (Shape, (self.kind, self.params))

    def __repr__(self):
        return '%s(%s)' % (self.kind.value, ', '.join(
            '%s=%i' % pair for pair in zip(PARAM_NAMES[self.kind], self.params)))

    def __eq__(self, other):
        return isinstance(other, Shape) and self.kind == other.kind and self.params == other.params

    def __hash__(self):
        return hash((self.kind, self.params))

    def __getitem__(self, name):
        """shape['cx'] ---> value of the named parameter."""
        return self.params[PARAM_NAMES[self.kind].index(name)]

    @property
    def names(self):
        return PARAM_NAMES[self.kind]

    def as_dict(self):
        return dict(zip(self.names, self.params))

    def replace(self, **changes):
        """Returns a new Shape with some parameters changed."""
        values = self.as_dict()
        for name, value in changes.items():
            if name not in values:
                raise KeyError('%s has no parameter %s' % (self.kind.value, name))
            values[name] = value
        return Shape(self.kind, [values[name] for name in self.names])

    def clamped(self, bounds):
        """
        Returns the shape with coordinates inside the canvas
        and extents in [1, max(W, H)]. Rectangle corners come out ordered.
        """
        width, height = bounds
        limit = max(width, height)
        values = []
        for name, value in zip(self.names, self.params):
            if name in EXTENT_NAMES:
                value = min(max(value, 1), limit)
            elif name == 'angle':
                value = value % 360
            elif name.startswith('x') or name == 'cx':
                value = min(max(value, 0), width - 1)
            else:
                value = min(max(value, 0), height - 1)
            values.append(value)
        if self.kind == ShapeKind.RECTANGLE:
            x1, y1, x2, y2 = values
            values = [min(x1, x2), min(y1, y2), max(x1, x2), max(y1, y2)]
        return Shape(self.kind, values)

    def is_degenerate(self):
        """True for zero area triangles. Other kinds always have area."""
        if self.kind != ShapeKind.TRIANGLE:
            return False
        x1, y1, x2, y2, x3, y3 = self.params
        return (x2 - x1) * (y3 - y1) - (y2 - y1) * (x3 - x1) == 0


Span = namedtuple('Span', 'y x1 x2')


class SpanList:
    """
    Covered pixels of a shape as horizontal runs.

    Rows are increasing, each row holds one run (all kinds are convex),
    every run lies inside the canvas.
    """
    def __init__(self, ys=(), x1s=(), x2s=()):
        self.ys = np.asarray(ys, dtype=np.int64)
        self.x1s = np.asarray(x1s, dtype=np.int64)
        self.x2s = np.asarray(x2s, dtype=np.int64)

    def __len__(self):
        return len(self.ys)

    def __iter__(self):
        for y, x1, x2 in zip(self.ys.tolist(), self.x1s.tolist(), self.x2s.tolist()):
            yield Span(y, x1, x2)

    def __repr__(self):
        return 'SpanList(%i spans, %i pixels)' % (len(self), self.pixel_count)

    def __eq__(self, other):
        return isinstance(other, SpanList) and list(self) == list(other)

    @classmethod
    def empty(cls):
        return cls()

    @property
    def is_empty(self):
        return len(self.ys) == 0

    @property
    def pixel_count(self):
        return int((self.x2s - self.x1s + 1).sum()) if len(self) else 0

    def flat_indices(self, width):
        """Row-major indices of all covered pixels in a canvas of given width."""
        if self.is_empty:
            return np.zeros(0, dtype=np.int64)
        lengths = self.x2s - self.x1s + 1
        starts = self.ys * width + self.x1s
        offsets = np.cumsum(lengths) - lengths
        return np.repeat(starts - offsets, lengths) + np.arange(int(lengths.sum()), dtype=np.int64)

    def pixels(self):
        """Set of covered (x, y) pairs."""
        result = set()
        for span in self:
            for x in range(span.x1, span.x2 + 1):
                result.add((x, span.y))
        return result

    def bounding_box(self):
        """(x_min, y_min, x_max, y_max) or None for an empty list."""
        if self.is_empty:
            return None
        return (int(self.x1s.min()), int(self.ys.min()), int(self.x2s.max()), int(self.ys.max()))
