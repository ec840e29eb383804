#!/usr/bin/env python

"""
Module raster_image.py - pixel buffers and colours.

Class Color       - 8 bit RGB colour with the opacity used at blend time.
Class RasterImage - W x H RGB image, row-major, 8 bits per channel.

load_image        - decodes PNG/JPEG into a RasterImage.
"""

import io
import logging

import numpy as np
from PIL import Image, UnidentifiedImageError

from shapecompiler.util.errors import ImageDecodeError, DimensionMismatchError

logger = logging.getLogger(__name__)


class Color:
    """
    Straight (not premultiplied) RGB colour plus alpha.
    All four values are in [0, 255].
    """
    __slots__ = ('r', 'g', 'b', 'alpha')

    def __init__(self, r, g, b, alpha=255):
        for value in (r, g, b, alpha):
            if not 0 <= int(value) <= 255:
                raise ValueError('colour channel out of range: %s' % value)
        self.r = int(r)
        self.g = int(g)
        self.b = int(b)
        self.alpha = int(alpha)

    def __repr__(self):
        return 'Color(%i, %i, %i, alpha=%i)' % (self.r, self.g, self.b, self.alpha)

    def __eq__(self, other):
        return isinstance(other, Color) and self.rgba == other.rgba

    def __hash__(self):
        return hash(self.rgba)

    @property
    def rgb(self):
        return (self.r, self.g, self.b)

    @property
    def rgba(self):
        return (self.r, self.g, self.b, self.alpha)

    @property
    def hex(self):
        """'#rrggbb'"""
        return '#%02x%02x%02x' % self.rgb

    def with_alpha(self, alpha):
        return Color(self.r, self.g, self.b, alpha)


class RasterImage:
    """
    Fixed size RGB pixel buffer.

    The pixel array has shape (H, W, 3) and dtype uint8. Images handed
    around are not written to; the only in-place writer is the fitting
    loop that owns its canvas (see raster.scoring.blend_spans_inplace).
    """
    def __init__(self, pixels):
        pixels = np.asarray(pixels)
        if pixels.ndim != 3 or pixels.shape[2] != 3:
            raise ValueError('expected (H, W, 3) pixels, got shape %s' % (pixels.shape,))
        if pixels.shape[0] < 1 or pixels.shape[1] < 1:
            raise ValueError('image must be at least 1x1')
        self.pixels = np.ascontiguousarray(pixels, dtype=np.uint8)

    def __repr__(self):
        return 'RasterImage(%ix%i)' % (self.width, self.height)

    def __eq__(self, other):
        return isinstance(other, RasterImage) and np.array_equal(self.pixels, other.pixels)

    @property
    def width(self):
        return self.pixels.shape[1]

    @property
    def height(self):
        return self.pixels.shape[0]

    @property
    def size(self):
        """(W, H)"""
        return (self.width, self.height)

    @property
    def flat(self):
        """(W * H, 3) view of the pixels."""
        return self.pixels.reshape(-1, 3)

    def copy(self):
        return RasterImage(self.pixels.copy())

    @classmethod
    def filled(cls, width, height, color):
        pixels = np.empty((height, width, 3), dtype=np.uint8)
        pixels[:, :] = color.rgb
        return cls(pixels)

    def check_same_size(self, other):
        if self.size != other.size:
            raise DimensionMismatchError('image sizes differ: %ix%i vs %ix%i'
                                         % (self.size + other.size))

    def resized_to_fit(self, max_size):
        """
        Bilinear downscale so that max(W, H) == max_size, aspect preserved.
        Images that already fit are returned unchanged.
        """
        if max(self.size) <= max_size:
            return self
        scale = float(max_size) / max(self.size)
        width = max(1, int(round(self.width * scale)))
        height = max(1, int(round(self.height * scale)))
        image = Image.fromarray(self.pixels, 'RGB').resize((width, height), Image.BILINEAR)
        return RasterImage(np.asarray(image))

    def to_pil(self):
        return Image.fromarray(self.pixels, 'RGB')

    def to_png_bytes(self):
        buf = io.BytesIO()
        self.to_pil().save(buf, format='PNG', optimize=False)
        return buf.getvalue()

    def save_png(self, path):
        self.to_pil().save(path, format='PNG', optimize=False)


def load_image(path):
    """
    Decodes PNG or JPEG into a RasterImage (alpha and palettes dropped).
    Raises ImageDecodeError for unreadable or empty files.
    """
    try:
        with Image.open(path) as image:
            image = image.convert('RGB')
            pixels = np.asarray(image)
    except (IOError, OSError, UnidentifiedImageError, ValueError) as e:
        raise ImageDecodeError('cannot decode image %s: %s' % (path, e))
    if pixels.size == 0:
        raise ImageDecodeError('empty image %s' % path)
    logger.debug('loaded %s (%ix%i)', path, pixels.shape[1], pixels.shape[0])
    return RasterImage(pixels)
