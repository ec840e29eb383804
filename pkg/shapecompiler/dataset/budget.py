#!/usr/bin/env python

"""
Entropy budget: how many shapes an image gets when budgeting is on.
"""

import math

from shapecompiler.util.util import clamp


def entropy_budget(entropy, policy):
    """
    Maps entropy linearly from [low_entropy, high_entropy]
    onto [min_shapes, max_shapes], clamped and rounded half up.

    @type policy:  BudgetPolicy
    @rtype:        int
    """
    h = clamp(float(entropy), policy.low_entropy, policy.high_entropy)
    fraction = (h - policy.low_entropy) / (policy.high_entropy - policy.low_entropy)
    value = policy.min_shapes + (policy.max_shapes - policy.min_shapes) * fraction
    return int(math.floor(value + 0.5))


def budget_levels(levels, budget):
    """Levels below the budget, then the budget itself as the last level."""
    return [level for level in levels if level < budget] + [budget]
