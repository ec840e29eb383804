#!/usr/bin/env python

"""
Shannon entropy of the grayscale histogram of an image.
"""

import numpy as np
from scipy.stats import entropy as scipy_entropy

from shapecompiler.util.util import round_half_up_div


class EntropyValue(float):
    """Entropy in bits, 0 <= value <= 8."""

    def __repr__(self):
        return 'EntropyValue(%.6f bits)' % self

    @property
    def bits(self):
        return float(self)


def luma(image):
    """round(0.299 r + 0.587 g + 0.114 b) per pixel, exact, as int64 (H, W)."""
    pixels = image.pixels.astype(np.int64)
    weighted = 299 * pixels[:, :, 0] + 587 * pixels[:, :, 1] + 114 * pixels[:, :, 2]
    return round_half_up_div(weighted, 1000)


def gray_histogram(image):
    return np.bincount(luma(image).ravel(), minlength=256)


def shannon_entropy(image):
    """-sum p log2 p over the non-empty bins of the 256 bin luma histogram."""
    counts = gray_histogram(image)
    counts = counts[counts > 0]
    bits = float(scipy_entropy(counts, base=2))
    return EntropyValue(min(max(bits, 0.0), 8.0))
