#!/usr/bin/env python

"""
Unit Tests for hill_climb.py module.
"""

import json
from unittest import main, TestCase

from shapecompiler.fitter.fitter import init_state, evaluators
from shapecompiler.fitter.hill_climb import Candidate, ShapeEvaluator, lane_sizes, climb, \
    propose_shape, run_probe_lane
from shapecompiler.geometry.shape import Shape, ShapeKind
from shapecompiler.raster.raster_image import Color, RasterImage
from shapecompiler.util.util import RandomStream
from tests.test_data.golden import check_golden
from tests.test_data.images import tiny_config, scene, uniform


class HillClimbTests(TestCase):
    """
    Tests for probing, climbing and proposals.
    """
    def setUp(self):
        self.config = tiny_config()
        self.state = init_state(scene(16, 12, seed=4), self.config)
        self.evaluator = ShapeEvaluator(self.state, self.config)

    def test_lane_sizes(self):
        self.assertEqual(lane_sizes(10, 4), [3, 3, 2, 2])
        self.assertEqual(lane_sizes(8, 2), [4, 4])
        self.assertEqual(sum(lane_sizes(1000, 7)), 1000)

    def test_rank_key(self):
        """Empty shapes lose ties against covering ones."""
        shape = Shape(ShapeKind.CIRCLE, [1, 1, 1])
        self.assertLess(Candidate(shape, (0, 0, 0), 128, -5).rank_key,
                        Candidate(shape, (0, 0, 0), 128, 0).rank_key)
        self.assertLess(Candidate(shape, (0, 0, 0), 128, 0).rank_key,
                        Candidate(shape, (0, 0, 0), 128, 0, True).rank_key)
        self.assertEqual(Candidate(shape, (1, 2, 3), 128, 0).color, Color(1, 2, 3, 128))

    def test_evaluate_empty(self):
        candidate = self.evaluator.evaluate(Shape(ShapeKind.TRIANGLE, [0, 0, 5, 5, 10, 10]))
        self.assertTrue(candidate.empty)
        self.assertEqual(candidate.delta, 0)
        self.assertEqual(candidate.color, self.state.background.with_alpha(128))

    def test_probe_lane(self):
        items = run_probe_lane(self.evaluator, RandomStream(1).child(0, 3), 5, 3)
        self.assertEqual([item[1:3] for item in items], [(3, i) for i in range(5)])

    def test_climb_never_worse(self):
        rng_stream = RandomStream(2)
        start = self.evaluator.evaluate(Shape(ShapeKind.RECTANGLE, [0, 0, 3, 3]))
        best = climb(self.evaluator, start, rng_stream, 10)
        self.assertLessEqual(best.rank_key, start.rank_key)

    def test_proposal_deterministic(self):
        a = propose_shape(self.state, self.config, RandomStream(9))
        b = propose_shape(self.state, self.config, RandomStream(9))
        self.assertEqual(a.to_placed(), b.to_placed())
        self.assertEqual(a.delta, b.delta)

    def test_proposal_worker_independent(self):
        """Process pool and in-order runs give the same proposal."""
        serial = propose_shape(self.state, self.config, RandomStream(3))
        with evaluators(2) as parallel:
            threaded = propose_shape(self.state, self.config, RandomStream(3), parallel)
        self.assertEqual(serial.to_placed(), threaded.to_placed())

    def test_proposal_golden(self):
        """Proposal on a two colour image is frozen, shape colour and delta included."""
        pixels = uniform(16, 16, (0, 0, 0)).pixels
        pixels[:, 8:] = (255, 255, 255)
        state = init_state(RasterImage(pixels), self.config)
        candidate = propose_shape(state, self.config, RandomStream(0))
        self.assertLess(candidate.delta, 0)
        record = dict(candidate.to_placed().to_dict(), delta=candidate.delta)
        check_golden(self, 'proposal_two_colors.json', json.dumps(record, sort_keys=True) + '\n')

    def test_proposal_improves_scene(self):
        """On a non uniform image some shape lowers the error."""
        candidate = propose_shape(self.state, self.config.clone(probes=40, max_age=20), RandomStream(0))
        self.assertLess(candidate.delta, 0)


if __name__ == '__main__':
    main()
