#!/usr/bin/env python

"""
Module hill_climb.py - candidate search for the next shape.

Class Candidate      - shape with its optimal colour and SSE delta.
Class ShapeEvaluator - scores shapes against the current canvas.
propose_shape        - random probes, then hill climbing of the best ones.

Search streams
==============
Probes are drawn in `climbers` lanes, lane j from stream (.., PROBE, j).
The climb of the k-th best probe uses stream (.., CLIMB, k).
Lanes and climbs are independent tasks, so they may run on any number
of workers; results are merged by (delta, lane, probe index), which
makes the proposal independent of the worker count.
"""

import logging

from joblib import delayed

from shapecompiler.fitter.placed_shape import PlacedShape
from shapecompiler.geometry.scanline import kernel_args
from shapecompiler.geometry.shape_factory import ShapeFactory
from shapecompiler.raster.raster_image import Color
from shapecompiler.raster.scoring import score_shape

logger = logging.getLogger(__name__)

PROBE = 0
CLIMB = 1


class Candidate:
    """
    Scored shape, colour kept as a plain rgb tuple until it is placed.

    @ivar delta: SSE change if the shape is blended onto the canvas.
    @ivar empty: True when the shape covers no pixel (loses ties).
    """
    __slots__ = ('shape', 'rgb', 'alpha', 'delta', 'empty')

    def __init__(self, shape, rgb, alpha, delta, empty=False):
        self.shape = shape
        self.rgb = rgb
        self.alpha = alpha
        self.delta = delta
        self.empty = empty

    def __repr__(self):
        return 'Candidate(%s, delta %i)' % (self.shape, self.delta)

    @property
    def rank_key(self):
        return (self.delta, self.empty)

    @property
    def color(self):
        return Color(self.rgb[0], self.rgb[1], self.rgb[2], self.alpha)

    def to_placed(self):
        return PlacedShape(self.shape, self.color)


class ShapeEvaluator:
    """
    Scores shapes against the canvas of a FitState.
    Only reads the state; the canvas must not change while it is used.
    """
    def __init__(self, state, config):
        self.bounds = state.size
        self.target_pixels = state.target.pixels
        self.canvas_pixels = state.canvas_pixels
        self.alpha = config.alpha
        self.empty_rgb = state.background.rgb
        self.factory = ShapeFactory.from_config(self.bounds, config)

    def evaluate(self, shape):
        count, r, g, b, delta = score_shape(*kernel_args(shape), self.target_pixels,
                                            self.canvas_pixels, self.alpha)
        if count == 0:
            return Candidate(shape, self.empty_rgb, self.alpha, 0, True)
        return Candidate(shape, (r, g, b), self.alpha, delta)


def lane_sizes(probes, lanes):
    """Splits probes over lanes, earlier lanes take the remainder."""
    base, extra = divmod(probes, lanes)
    return [base + (1 if lane < extra else 0) for lane in range(lanes)]


def run_probe_lane(evaluator, stream, count, lane):
    """
    Scores count random shapes.
    Returns list of (rank_key, lane, probe index, Candidate).
    """
    rng = stream.generator
    result = []
    for index in range(count):
        candidate = evaluator.evaluate(evaluator.factory.random_shape(rng))
        result.append((candidate.rank_key, lane, index, candidate))
    return result


def climb(evaluator, candidate, stream, max_age):
    """
    Hill climb: mutate the best shape so far, keep strict improvements.
    Stops after max_age mutations in a row without improvement.
    """
    rng = stream.generator
    best = candidate
    age = 0
    while age < max_age:
        trial = evaluator.evaluate(evaluator.factory.mutate(best.shape, rng))
        if trial.rank_key < best.rank_key:
            best = trial
            age = 0
        else:
            age += 1
    return best


def run_tasks(parallel, tasks):
    """Runs joblib delayed tasks on parallel, or in order when it is None."""
    if parallel is None:
        return [func(*args, **kwargs) for func, args, kwargs in tasks]
    return parallel(tasks)


def propose_shape(state, config, stream, parallel=None):
    """
    Proposes the next shape for state.

    1. draws config.probes random shapes and scores each with its optimal colour,
    2. takes the config.climbers best,
    3. hill climbs each of them,
    4. returns the best climbed Candidate.

    @type stream:    RandomStream
    @type parallel:  joblib.Parallel or None
    @rtype:          Candidate
    """
    evaluator = ShapeEvaluator(state, config)
    lanes = config.climbers
    sizes = lane_sizes(config.probes, lanes)
    lane_results = run_tasks(parallel, [
        delayed(run_probe_lane)(evaluator, stream.child(PROBE, lane), sizes[lane], lane)
        for lane in range(lanes)])
    probes = sorted((item for result in lane_results for item in result),
                    key=lambda item: item[:3])
    best_probes = [item[3] for item in probes[:config.climbers]]
    climbed = run_tasks(parallel, [
        delayed(climb)(evaluator, candidate, stream.child(CLIMB, rank), config.max_age)
        for rank, candidate in enumerate(best_probes)])
    rank, best = min(enumerate(climbed), key=lambda pair: (pair[1].rank_key, pair[0]))
    logger.debug('proposed %s (climber %i)', best, rank)
    return best
