#!/usr/bin/env python

"""
Module render.py - raster views of a ShapeListDocument.

render draws the background and blends every shape in order with the
rasterize / blend rules of the fitter. At working size the result is
the canvas of the fit, bit for bit. At original size every shape is
first mapped with scale_shape.
"""

import math

from shapecompiler.geometry.scanline import rasterize
from shapecompiler.geometry.shape import Shape, ShapeKind
from shapecompiler.raster.raster_image import RasterImage
from shapecompiler.raster.scoring import blend_spans_inplace

WORKING = 'working'
ORIGINAL = 'original'


def _round(value):
    return int(math.floor(value + 0.5))


def _centre(c, scale):
    return _round((c + 0.5) * scale - 0.5)


def _extent(value, scale):
    return max(1, _round(value * scale))


def scale_shape(shape, sx, sy):
    """
    Maps a shape from working to original pixel coordinates.
    Rectangles keep covering the scaled cell range, centred kinds keep
    the centre of their centre pixel, angles stay.
    """
    kind = shape.kind
    p = shape.params
    if kind == ShapeKind.TRIANGLE:
        return Shape(kind, [_round(v * (sx if i % 2 == 0 else sy)) for i, v in enumerate(p)])
    elif kind == ShapeKind.RECTANGLE:
        x1, y1 = int(math.floor(p[0] * sx)), int(math.floor(p[1] * sy))
        x2 = max(x1, int(math.ceil((p[2] + 1) * sx)) - 1)
        y2 = max(y1, int(math.ceil((p[3] + 1) * sy)) - 1)
        return Shape(kind, [x1, y1, x2, y2])
    centre = [_centre(p[0], sx), _centre(p[1], sy)]
    if kind == ShapeKind.CIRCLE:
        return Shape(kind, centre + [_extent(p[2], (sx + sy) / 2.0)])
    extents = [_extent(p[2], sx), _extent(p[3], sy)]
    return Shape(kind, centre + extents + list(p[4:]))


def render(document, at=WORKING):
    """
    Returns the RasterImage of document.

    @type at:  string
    @param at: 'working' or 'original'.
    """
    if at == WORKING:
        width, height = document.working_size
        sx = sy = None
    elif at == ORIGINAL:
        width, height = document.original_size
        sx, sy = document.scale
    else:
        raise ValueError("render target must be 'working' or 'original', got %r" % at)
    pixels = RasterImage.filled(width, height, document.background).pixels
    for placed in document.shapes:
        shape = placed.shape if sx is None else scale_shape(placed.shape, sx, sy)
        blend_spans_inplace(pixels, rasterize(shape, (width, height)), placed.color)
    return RasterImage(pixels)
