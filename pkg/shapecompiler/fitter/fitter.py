#!/usr/bin/env python

"""
Module fitter.py - builds an abstraction one shape at a time.

init_state  - working resolution target, background canvas.
accept      - places a proposed shape (require-improvement policy).
fit         - runs the loop up to the last level and snapshots every level.

Process of one step:
1. propose_shape searches the best shape for the current canvas.
2. accept blends it in when it lowers the SSE; otherwise up to
   max_retries new proposals are made and, if none improves,
   the best one is placed anyway and the step is marked forced.
3. when the shape count reaches a level, a Checkpoint is taken.
"""

import logging
from contextlib import contextmanager

from joblib import Parallel
from tqdm import tqdm

from shapecompiler.emit.shape_list import ShapeListDocument
from shapecompiler.emit.svg_output import emit_svg
from shapecompiler.fitter.fit_state import FitState, Checkpoint, CheckpointSet
from shapecompiler.fitter.hill_climb import propose_shape
from shapecompiler.fitter.trajectory import TrajectoryStep
from shapecompiler.geometry.scanline import rasterize
from shapecompiler.raster.raster_image import RasterImage, load_image
from shapecompiler.raster.scoring import background_color, blend_spans_inplace, full_sse
from shapecompiler.util.util import RandomStream

logger = logging.getLogger(__name__)


def init_state(target, config):
    """
    Prepares a FitState.

    @type target:  RasterImage or path
    @param target: image to approximate; paths are decoded (ImageDecodeError).
    """
    if not isinstance(target, RasterImage):
        target = load_image(target)
    original_size = target.size
    working = target.resized_to_fit(config.working_size)
    background = background_color(working)
    canvas = RasterImage.filled(working.width, working.height, background)
    sse = full_sse(working, canvas).sse
    logger.debug('working size %ix%i for %ix%i input, background %s',
                 working.width, working.height, original_size[0], original_size[1], background)
    return FitState(working, background, canvas.pixels.copy(), sse, original_size)


def place(state, candidate, forced=False):
    """Blends candidate into the canvas and records the step."""
    blend_spans_inplace(state.canvas_pixels, rasterize(candidate.shape, state.size), candidate.color)
    state.sse += candidate.delta
    state.placed.append(candidate.to_placed())
    state.trajectory.append(TrajectoryStep(len(state.placed), state.sse, state.rmse,
                                           forced, candidate.shape.kind.value))
    return state


def accept(state, candidate, config, stream=None, parallel=None):
    """
    Adds candidate if it lowers the SSE. Otherwise re-proposes up to
    config.max_retries times (needs stream); when nothing improves,
    the best candidate seen is placed and the step is marked forced.

    @type stream:  RandomStream
    @param stream: stream of the current shape index,
                   retry n proposes from stream.child(n).
    """
    best = candidate
    attempt = 0
    while best.delta >= 0 and stream is not None and attempt < config.max_retries:
        attempt += 1
        retry = propose_shape(state, config, stream.child(attempt), parallel)
        if retry.rank_key < best.rank_key:
            best = retry
    forced = best.delta >= 0
    if forced:
        logger.debug('step %i forced after %i retries (delta %i)',
                     len(state.placed) + 1, attempt, best.delta)
    return place(state, best, forced)


def take_checkpoint(state):
    document = ShapeListDocument.from_state(state)
    svg_bytes = len(emit_svg(document).encode('utf-8'))
    return Checkpoint(len(state.placed), state.rmse, svg_bytes, document)


@contextmanager
def evaluators(workers):
    """joblib process pool (loky) for workers > 1, None (run in order) otherwise."""
    if workers > 1:
        with Parallel(n_jobs=workers) as parallel:
            yield parallel
    else:
        yield None


def fit(target, config, source=None, warnings=None, progress=False):
    """
    Fits config.total_shapes shapes to target.

    @type source:    string
    @param source:   name used in warnings and progress output.
    @type warnings:  CompilerWarnings or None
    @rtype:          tuple
    @return:         (FitState, CheckpointSet, Trajectory)
    """
    state = init_state(target, config)
    checkpoints = CheckpointSet()
    levels = set(config.levels)
    root = RandomStream(config.seed)
    steps = tqdm(range(config.total_shapes), desc=source or 'fit', unit='shape',
                 disable=not progress, leave=False)
    with evaluators(config.workers) as parallel:
        for index in steps:
            shape_stream = root.child(index)
            candidate = propose_shape(state, config, shape_stream.child(0), parallel)
            accept(state, candidate, config, shape_stream, parallel)
            if state.trajectory[-1].forced and warnings is not None:
                warnings.add_forced_step(source, index + 1)
            if len(state.placed) in levels:
                checkpoints.append(take_checkpoint(state))
                logger.info('%s: level %i rmse %.4f', source or 'fit', len(state.placed), state.rmse)
    return state, checkpoints, state.trajectory
