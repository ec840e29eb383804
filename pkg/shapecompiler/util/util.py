#!/usr/bin/env python

"""
Collection of small helpers shared by all packages.
round_half_up_div - integer division rounded half up (exact).
clamp             - limits a value to a closed range.
format_number     - locale independent, shortest decimal text of a number.
parse_int_list    - '10,30,50' ---> [10, 30, 50]
parse_float_list  - '0.2,0.4' ---> [0.2, 0.4]
stable_key        - 32 bit key of a string that does not change between runs.
RandomStream      - seeded numpy generator that can derive child streams.
atomic_write      - replaces a file only once the new content is on disk.
"""

import os
import zlib

import numpy as np


def round_half_up_div(num, den):
    """
    Returns round(num / den) with halves rounded up, exactly.
    Works for python ints and numpy integer arrays, den > 0.

    >>> round_half_up_div(5, 2)
    3
    >>> round_half_up_div(-5, 2)
    -2
    """
    return (2 * num + den) // (2 * den)


def clamp(value, low, high):
    if value < low:
        return low
    if value > high:
        return high
    return value


def format_number(value, decimals=4):
    """
    Formats a number without trailing zeros.
    Integral values are written without a decimal point.

    >>> format_number(4.5)
    '4.5'
    >>> format_number(10.0)
    '10'
    """
    if float(value) == int(value):
        return str(int(value))
    text = ('%.' + str(decimals) + 'f') % value
    return text.rstrip('0').rstrip('.')


def parse_int_list(text):
    """'10,30,50' ---> [10, 30, 50]"""
    if isinstance(text, (list, tuple)):
        return [int(x) for x in text]
    return [int(x) for x in str(text).split(',') if x.strip()]


def parse_float_list(text):
    """'0.2,0.4' ---> [0.2, 0.4]"""
    if isinstance(text, (list, tuple)):
        return [float(x) for x in text]
    return [float(x) for x in str(text).split(',') if x.strip()]


def stable_key(text):
    """crc32 of the utf-8 text, stable across processes (unlike hash())."""
    return zlib.crc32(str(text).encode('utf-8')) & 0xffffffff


class RandomStream:
    """
    Deterministic source of random numbers.

    A stream is identified by the run seed and a path of integer keys,
    e.g. (seed, shape_index, attempt, lane). Two streams with the same
    identity produce the same numbers, in any process and any order.

    @type seed:  int
    @param seed: 64 bit run seed.
    @type path:  tuple of int
    @param path: keys that identify the stream below the seed.
    """
    def __init__(self, seed, *path):
        self.seed = int(seed)
        self.path = tuple(int(key) for key in path)
        self._generator = None

    def __repr__(self):
        return 'RandomStream(%i, %s)' % (self.seed, ', '.join(str(k) for k in self.path))

    @property
    def generator(self):
        """numpy Generator created lazily from the stream identity."""
        if self._generator is None:
            entropy = [self.seed & 0xffffffffffffffff] + list(self.path)
            self._generator = np.random.default_rng(np.random.SeedSequence(entropy))
        return self._generator

    def child(self, *keys):
        """Returns an independent stream one level below this one."""
        return RandomStream(self.seed, *(self.path + tuple(keys)))


def atomic_write(path, data):
    """
    Writes text or bytes to path through a temporary file in the same
    directory; the file is flushed to disk before it replaces path.
    """
    mode = 'wb' if isinstance(data, bytes) else 'w'
    tmp_path = '%s.tmp%i' % (path, os.getpid())
    with open(tmp_path, mode) as f:
        f.write(data)
        f.flush()
        os.fsync(f.fileno())
    os.replace(tmp_path, path)
