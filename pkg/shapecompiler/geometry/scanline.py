#!/usr/bin/env python

"""
Module scanline.py - exact rasterization of shapes into SpanList objects.

Fill rule: pixel (x, y) is covered iff its centre (x + 0.5, y + 0.5)
lies inside or on the boundary of the continuous shape.

Triangles, rectangles, circles and ellipses are solved per row with
integer arithmetic only. Rotated kinds are tested per pixel centre,
scanning each row inwards from both ends of the bounding box.

The row solvers are numba kernels working on plain scalars:
kernel_args(shape) gives (kind code, 6 padded parameters, cos, sin),
shape_spans(*kernel_args(shape), W, H) gives (ys, x1s, x2s).
"""

import math

import numpy as np
from numba import njit

from shapecompiler.geometry.shape import ShapeKind, SpanList

# Larger than any doubled coordinate on a sane canvas.
_FAR = 1 << 40

TRIANGLE, RECTANGLE, ROTATED_RECTANGLE, ELLIPSE, ROTATED_ELLIPSE, CIRCLE = range(6)
KIND_CODES = {
    ShapeKind.TRIANGLE: TRIANGLE,
    ShapeKind.RECTANGLE: RECTANGLE,
    ShapeKind.ROTATED_RECTANGLE: ROTATED_RECTANGLE,
    ShapeKind.ELLIPSE: ELLIPSE,
    ShapeKind.ROTATED_ELLIPSE: ROTATED_ELLIPSE,
    ShapeKind.CIRCLE: CIRCLE,
    }

# Boundary tolerance of rotated kinds: 2|u| <= w + EDGE_EPS for rectangles,
# (u / rx)^2 + (v / ry)^2 <= 1 + ELLIPSE_EPS for ellipses.
EDGE_EPS = 1e-9
ELLIPSE_EPS = 1e-12


def _rotation(angle):
    radians = math.radians(angle)
    cos, sin = math.cos(radians), math.sin(radians)
    if angle % 90 == 0:
        cos, sin = float(round(cos)), float(round(sin))
    elif angle % 60 == 30:
        sin = math.copysign(0.5, sin)
    elif angle % 60 == 0:
        cos = math.copysign(0.5, cos)
    return cos, sin


# exact at multiples of 90 degrees, +-0.5 exact at the other multiples of 30
ROTATIONS = [_rotation(angle) for angle in range(360)]


def rotation(angle):
    """(cos, sin) of an integer angle in degrees."""
    return ROTATIONS[int(angle) % 360]


def kernel_args(shape):
    """(kind code, p0 .. p5, cos, sin) of a shape for the row kernels."""
    params = shape.params + (0,) * (6 - len(shape.params))
    if shape.kind in (ShapeKind.ROTATED_RECTANGLE, ShapeKind.ROTATED_ELLIPSE):
        cos, sin = ROTATIONS[params[4] % 360]
    else:
        cos, sin = 1.0, 0.0
    return (KIND_CODES[shape.kind],) + params + (cos, sin)


def rasterize(shape, bounds):
    """
    Returns the SpanList of a shape clipped to bounds (W, H).
    Zero area triangles cover nothing.
    """
    if shape.kind not in KIND_CODES:
        raise TypeError('unknown shape kind %s' % shape.kind)
    width, height = bounds
    ys, x1s, x2s = shape_spans(*(kernel_args(shape) + (width, height)))
    return SpanList(ys, x1s, x2s)


@njit(cache=True, nogil=True)
def _isqrt(n):
    root = np.int64(math.sqrt(float(n)))
    while root * root > n:
        root -= 1
    while (root + 1) * (root + 1) <= n:
        root += 1
    return root


@njit(cache=True, nogil=True)
def _edge_bounds(ax, ay, bx, by, sign, py, lo, hi, valid):
    # sign * edge function >= 0  <=>  a * px + b >= 0
    a = -sign * (by - ay)
    b = sign * (bx - ax) * (py - ay) + sign * (by - ay) * ax
    if a > 0:
        lo = max(lo, -(b // a))
    elif a < 0:
        hi = min(hi, b // (-a))
    elif b < 0:
        valid = False
    return lo, hi, valid


@njit(cache=True, nogil=True)
def _triangle_rows(x1, y1, x2, y2, x3, y3, width, height, ys, x1s, x2s):
    area2 = (x2 - x1) * (y3 - y1) - (y2 - y1) * (x3 - x1)
    if area2 == 0:
        return 0
    sign = 1 if area2 > 0 else -1
    top = max(min(y1, y2, y3), 0)
    bottom = min(max(y1, y2, y3), height - 1)
    count = 0
    for y in range(top, bottom + 1):
        # doubled coordinates: pixel centre (2x + 1, 2y + 1), vertices (2x, 2y)
        py = 2 * y + 1
        lo, hi, valid = -_FAR, _FAR, True
        lo, hi, valid = _edge_bounds(2 * x1, 2 * y1, 2 * x2, 2 * y2, sign, py, lo, hi, valid)
        lo, hi, valid = _edge_bounds(2 * x2, 2 * y2, 2 * x3, 2 * y3, sign, py, lo, hi, valid)
        lo, hi, valid = _edge_bounds(2 * x3, 2 * y3, 2 * x1, 2 * y1, sign, py, lo, hi, valid)
        if not valid:
            continue
        # px = 2x + 1 in [lo, hi]
        left = max(-((1 - lo) // 2), 0)
        right = min((hi - 1) // 2, width - 1)
        if left <= right:
            ys[count], x1s[count], x2s[count] = y, left, right
            count += 1
    return count


@njit(cache=True, nogil=True)
def _rectangle_rows(x1, y1, x2, y2, width, height, ys, x1s, x2s):
    left, right = max(min(x1, x2), 0), min(max(x1, x2), width - 1)
    top, bottom = max(min(y1, y2), 0), min(max(y1, y2), height - 1)
    if left > right:
        return 0
    count = 0
    for y in range(top, bottom + 1):
        ys[count], x1s[count], x2s[count] = y, left, right
        count += 1
    return count


@njit(cache=True, nogil=True)
def _ellipse_rows(cx, cy, rx, ry, width, height, ys, x1s, x2s):
    # (x - cx)^2 * ry^2 + (y - cy)^2 * rx^2 <= rx^2 * ry^2
    rx2, ry2 = rx * rx, ry * ry
    count = 0
    for y in range(max(cy - ry, 0), min(cy + ry, height - 1) + 1):
        dy = y - cy
        reach = _isqrt((rx2 * (ry2 - dy * dy)) // ry2)
        left, right = max(cx - reach, 0), min(cx + reach, width - 1)
        if left <= right:
            ys[count], x1s[count], x2s[count] = y, left, right
            count += 1
    return count


@njit(cache=True, nogil=True)
def _inside_rotated(is_rectangle, a, b, cos, sin, dx, dy):
    u = dx * cos + dy * sin
    v = dy * cos - dx * sin
    if is_rectangle:
        return 2.0 * abs(u) <= a + EDGE_EPS and 2.0 * abs(v) <= b + EDGE_EPS
    return (u / a) ** 2 + (v / b) ** 2 <= 1.0 + ELLIPSE_EPS


@njit(cache=True, nogil=True)
def _rotated_rows(is_rectangle, cx, cy, a, b, cos, sin, width, height, ys, x1s, x2s):
    if is_rectangle:
        reach = np.int64(math.ceil(math.hypot(float(a), float(b)) / 2.0)) + 1
    else:
        reach = max(a, b) + 1
    left, right = max(cx - reach, 0), min(cx + reach, width - 1)
    count = 0
    for y in range(max(cy - reach, 0), min(cy + reach, height - 1) + 1):
        dy = float(y - cy)
        first = left
        while first <= right and not _inside_rotated(is_rectangle, a, b, cos, sin, float(first - cx), dy):
            first += 1
        if first > right:
            continue
        last = right
        while not _inside_rotated(is_rectangle, a, b, cos, sin, float(last - cx), dy):
            last -= 1
        ys[count], x1s[count], x2s[count] = y, first, last
        count += 1
    return count


@njit(cache=True, nogil=True)
def shape_spans(kind, p0, p1, p2, p3, p4, p5, cos, sin, width, height):
    """
    Row spans of one shape clipped to (width, height).

    @return: (ys, x1s, x2s) int64 arrays, rows increasing.
    """
    rows = max(height, 1)
    ys = np.empty(rows, np.int64)
    x1s = np.empty(rows, np.int64)
    x2s = np.empty(rows, np.int64)
    if kind == TRIANGLE:
        count = _triangle_rows(p0, p1, p2, p3, p4, p5, width, height, ys, x1s, x2s)
    elif kind == RECTANGLE:
        count = _rectangle_rows(p0, p1, p2, p3, width, height, ys, x1s, x2s)
    elif kind == ELLIPSE:
        count = _ellipse_rows(p0, p1, p2, p3, width, height, ys, x1s, x2s)
    elif kind == CIRCLE:
        count = _ellipse_rows(p0, p1, p2, p2, width, height, ys, x1s, x2s)
    else:
        count = _rotated_rows(kind == ROTATED_RECTANGLE, p0, p1, p2, p3, cos, sin,
                              width, height, ys, x1s, x2s)
    return ys[:count], x1s[:count], x2s[:count]
