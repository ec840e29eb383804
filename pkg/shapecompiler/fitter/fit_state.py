#!/usr/bin/env python

"""
Module fit_state.py

Class FitState      - everything a running fit owns.
Class Checkpoint    - snapshot of a fit at one level.
Class CheckpointSet - one Checkpoint per configured level.
"""

from shapecompiler.raster.raster_image import RasterImage
from shapecompiler.raster.scoring import rmse_from_sse
from shapecompiler.fitter.trajectory import Trajectory


class FitState:
    """
    Fit in progress.

    Invariants kept by fitter.accept:
    - canvas equals the background with all placed shapes blended in order,
    - sse equals full_sse(target, canvas).

    @ivar original_size: (W0, H0) of the input before resizing.
    @ivar canvas_pixels: (H, W, 3) uint8 array written in place,
                         owned by this state only.
    """
    def __init__(self, target, background, canvas_pixels, sse, original_size=None):
        self.target = target
        self.background = background
        self.canvas_pixels = canvas_pixels
        self.placed = []
        self.sse = int(sse)
        self.original_size = tuple(original_size or target.size)
        self.trajectory = Trajectory()

    def __repr__(self):
        return 'FitState(%ix%i, %i shapes, rmse %.4f)' % (
            self.target.width, self.target.height, len(self.placed), self.rmse)

    @property
    def canvas(self):
        """Copy of the current canvas as a RasterImage."""
        return RasterImage(self.canvas_pixels.copy())

    @property
    def size(self):
        return self.target.size

    @property
    def rmse(self):
        return rmse_from_sse(self.sse, self.target.width * self.target.height)


class Checkpoint:
    """
    @ivar document: ShapeListDocument with the first `level` shapes.
    """
    def __init__(self, level, rmse, svg_bytes, document):
        self.level = level
        self.rmse = rmse
        self.svg_bytes = svg_bytes
        self.document = document

    def __repr__(self):
        return 'Checkpoint(%i shapes, rmse %.4f, %i svg bytes)' % (self.level, self.rmse, self.svg_bytes)


class CheckpointSet(list):
    """Checkpoints of one fit in level order."""

    @property
    def levels(self):
        return [cp.level for cp in self]

    def get_checkpoint(self, level):
        for cp in self:
            if cp.level == level:
                return cp
        raise KeyError('no checkpoint at level %s' % level)
