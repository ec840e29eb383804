#!/usr/bin/env python

"""
Module trajectory.py - per step record of a fit.

Class TrajectoryStep - score after one accepted shape.
Class Trajectory     - list of steps, written as line-delimited JSON (trace).
"""

import json


class TrajectoryStep:
    """
    @ivar forced: True when no improving shape was found within the retry
                  budget and the best candidate was accepted anyway.
    """
    def __init__(self, step, sse, rmse, forced=False, kind=None):
        self.step = step
        self.sse = sse
        self.rmse = rmse
        self.forced = forced
        self.kind = kind

    def __repr__(self):
        return 'Step %i: rmse %.4f%s' % (self.step, self.rmse, ' (forced)' if self.forced else '')

    def to_dict(self):
        return {'step': self.step, 'sse': self.sse, 'rmse': self.rmse,
                'forced': self.forced, 'kind': self.kind}


class Trajectory(list):
    """Steps of one fit in acceptance order."""

    @property
    def rmse_values(self):
        return [step.rmse for step in self]

    @property
    def forced_steps(self):
        return [step.step for step in self if step.forced]

    @property
    def forced_fraction(self):
        if not self:
            return 0.0
        return len(self.forced_steps) / float(len(self))

    def to_jsonl(self):
        return ''.join(json.dumps(step.to_dict(), sort_keys=True) + '\n' for step in self)

    def write_jsonl(self, path):
        with open(path, 'w') as f:
            f.write(self.to_jsonl())
