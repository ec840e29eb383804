#!/usr/bin/env python

"""
Class PlacedShape - shape geometry with the colour it was placed with.
"""

from shapecompiler.geometry.shape import Shape, ShapeKind, PARAM_NAMES
from shapecompiler.raster.raster_image import Color


class PlacedShape:
    """
    @type shape:  Shape
    @type color:  Color
    @param color: optimal colour at placement time, alpha included.
    """
    __slots__ = ('shape', 'color')

    def __init__(self, shape, color):
        self.shape = shape
        self.color = color

    def __repr__(self):
        return 'PlacedShape(%s, %s)' % (self.shape, self.color)

    def __eq__(self, other):
        return isinstance(other, PlacedShape) and self.shape == other.shape and self.color == other.color

    def __hash__(self):
        return hash((self.shape, self.color))

    @property
    def kind(self):
        return self.shape.kind

    def to_dict(self):
        """Shape-list JSON record: kind, parameters, color [r, g, b, a]."""
        result = {'kind': self.shape.kind.value}
        result.update(self.shape.as_dict())
        result['color'] = list(self.color.rgba)
        return result

    @classmethod
    def from_dict(cls, record):
        kind = ShapeKind(record['kind'])
        shape = Shape(kind, [record[name] for name in PARAM_NAMES[kind]])
        return cls(shape, Color(*record['color']))
