#!/usr/bin/env python

"""
Module scoring.py - blending and exact integer error accounting.

Blend of colour c with opacity a over channel value cur:
    out = round_half_up((cur * (255 - a) + c * a) / 255)

full_sse            - sum of squared channel differences of two images.
rmse_from_sse       - sqrt(sse / (W * H * 3)).
blend_spans         - new image with spans blended in.
blend_spans_inplace - same on a canvas owned by the caller.
optimal_color       - least squares colour of a shape for given alpha.
sse_delta           - change of SSE caused by blending a shape.
background_color    - mean colour of an image.
score_spans         - optimal colour and SSE delta in one numba kernel (fitting fast path).
score_shape         - score_spans straight from shape parameters.

Class Score - sse with derived rmse.
"""

import math

import numpy as np
from numba import njit

from shapecompiler.geometry.scanline import shape_spans
from shapecompiler.raster.raster_image import Color, RasterImage
from shapecompiler.util.errors import EmptySpansError
from shapecompiler.util.util import round_half_up_div


class Score:
    """
    Exact sum of squared errors over W * H * 3 channel values.
    """
    def __init__(self, sse, pixel_count):
        self.sse = int(sse)
        self.pixel_count = int(pixel_count)

    def __repr__(self):
        return 'Score(sse=%i, rmse=%.4f)' % (self.sse, self.rmse)

    def __eq__(self, other):
        return isinstance(other, Score) and (self.sse, self.pixel_count) == (other.sse, other.pixel_count)

    @property
    def rmse(self):
        return rmse_from_sse(self.sse, self.pixel_count)


def rmse_from_sse(sse, pixel_count):
    return math.sqrt(float(sse) / (pixel_count * 3))


def full_sse(a, b):
    """
    Score of image a against image b.
    Raises DimensionMismatchError for different sizes.
    """
    a.check_same_size(b)
    diff = a.pixels.astype(np.int64) - b.pixels.astype(np.int64)
    return Score(int((diff * diff).sum()), a.width * a.height)


def blend_values(current, color_values, alpha):
    """Blend formula on int64 arrays, result in [0, 255]."""
    return round_half_up_div(current * (255 - alpha) + color_values * alpha, 255)


def blend_spans_inplace(pixels, spans, color):
    """
    Blends color into the covered pixels of an (H, W, 3) uint8 array.
    Uncovered pixels are not touched.
    """
    if spans.is_empty or color.alpha == 0:
        return pixels
    flat = pixels.reshape(-1, 3)
    index = spans.flat_indices(pixels.shape[1])
    current = flat[index].astype(np.int64)
    rgb = np.array(color.rgb, dtype=np.int64)
    flat[index] = blend_values(current, rgb, color.alpha).astype(np.uint8)
    return pixels


def blend_spans(canvas, spans, color):
    """Returns a new RasterImage with color blended into spans."""
    pixels = canvas.pixels.copy()
    blend_spans_inplace(pixels, spans, color)
    return RasterImage(pixels)


def _optimal_rgb(target, current, alpha):
    """
    Least squares colour for covered target / current int64 (n, 3) arrays.
    Per channel: round(sum(t * 255 - cur * (255 - a)) / (a * n)), clamped.
    """
    numerator = (target * 255 - current * (255 - alpha)).sum(axis=0)
    denominator = alpha * target.shape[0]
    return np.clip(round_half_up_div(numerator, denominator), 0, 255)


def optimal_color(target, canvas, spans, alpha):
    """
    Colour that minimises the post-blend SSE over the covered pixels.
    Raises EmptySpansError for empty spans.
    """
    if spans.is_empty:
        raise EmptySpansError('cannot choose a colour for an empty shape')
    if alpha < 1:
        raise ValueError('alpha must be >= 1')
    index = spans.flat_indices(target.width)
    rgb = _optimal_rgb(target.flat[index].astype(np.int64),
                       canvas.flat[index].astype(np.int64), alpha)
    return Color(rgb[0], rgb[1], rgb[2], alpha)


def _delta(target, current, rgb, alpha):
    before = target - current
    after = target - blend_values(current, rgb, alpha)
    return int((after * after).sum() - (before * before).sum())


def sse_delta(target, canvas, spans, color, alpha=None):
    """
    SSE after blending color into spans minus SSE before,
    computed over covered pixels only.
    """
    if alpha is None:
        alpha = color.alpha
    if spans.is_empty or alpha == 0:
        return 0
    index = spans.flat_indices(target.width)
    return _delta(target.flat[index].astype(np.int64), canvas.flat[index].astype(np.int64),
                  np.array(color.rgb, dtype=np.int64), alpha)


@njit(cache=True, nogil=True)
def _channel_delta(t, cur, c, alpha):
    blended = (2 * (cur * (255 - alpha) + c * alpha) + 255) // 510
    return (t - blended) * (t - blended) - (t - cur) * (t - cur)


@njit(cache=True, nogil=True)
def score_spans(ys, x1s, x2s, target, canvas, alpha):
    """
    Optimal colour and its SSE delta over covered pixels, both passes
    in one kernel. target and canvas are (H, W, 3) uint8 arrays.

    @return: (pixel count, r, g, b, delta), all zero for empty spans.
    """
    count = 0
    sums = np.zeros(3, np.int64)
    for i in range(ys.shape[0]):
        y = ys[i]
        for x in range(x1s[i], x2s[i] + 1):
            count += 1
            for ch in range(3):
                sums[ch] += np.int64(target[y, x, ch]) * 255 - np.int64(canvas[y, x, ch]) * (255 - alpha)
    if count == 0:
        return 0, 0, 0, 0, 0
    den = alpha * count
    rgb = np.empty(3, np.int64)
    for ch in range(3):
        rgb[ch] = min(max((2 * sums[ch] + den) // (2 * den), 0), 255)
    delta = 0
    for i in range(ys.shape[0]):
        y = ys[i]
        for x in range(x1s[i], x2s[i] + 1):
            for ch in range(3):
                delta += _channel_delta(np.int64(target[y, x, ch]), np.int64(canvas[y, x, ch]),
                                        rgb[ch], alpha)
    return count, rgb[0], rgb[1], rgb[2], delta


@njit(cache=True, nogil=True)
def score_shape(kind, p0, p1, p2, p3, p4, p5, cos, sin, target, canvas, alpha):
    """score_spans of a shape given by scanline.kernel_args."""
    ys, x1s, x2s = shape_spans(kind, p0, p1, p2, p3, p4, p5, cos, sin,
                               target.shape[1], target.shape[0])
    return score_spans(ys, x1s, x2s, target, canvas, alpha)


def background_color(target):
    """Per channel mean of all pixels rounded half up, alpha 255."""
    sums = target.flat.astype(np.int64).sum(axis=0)
    count = target.width * target.height
    mean = [round_half_up_div(int(s), count) for s in sums]
    return Color(mean[0], mean[1], mean[2], 255)
