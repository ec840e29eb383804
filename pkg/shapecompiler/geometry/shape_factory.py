#!/usr/bin/env python

"""
Module shape_factory.py
produces random Shape objects and their mutations.

random_shape  - new shape of a given kind anchored uniformly on the canvas.
mutate        - copy of a shape with exactly one mutation site perturbed.
ShapeFactory  - keeps bounds, mode and step sizes of one fit together.

All functions draw only from the numpy Generator they are given,
so results are a pure function of (inputs, generator state).
"""

from shapecompiler.geometry.shape import Shape, ShapeKind, MODE_KINDS

SIGMA = 16
ANGLE_SIGMA = 32
MAX_INITIAL_EXTENT = 32
# Redraws of a collinear triangle before it is accepted (random_shape)
# or the input is returned (mutate).
TRIANGLE_RETRIES = 10


def _pick(u, low, high):
    """Maps a uniform u in [0, 1) to an integer in [low, high]."""
    return min(low + int(u * (high - low + 1)), high)


def random_shape(kind, bounds, rng, max_extent=MAX_INITIAL_EXTENT):
    """
    Returns a random Shape of the given kind.
    The parameters of one draw come from a single rng.random call.

    @type bounds:  tuple
    @param bounds: canvas size (W, H), both >= 1.
    @type rng:     numpy.random.Generator
    """
    kind = ShapeKind(kind)
    width, height = bounds
    if kind == ShapeKind.TRIANGLE:
        shape = None
        for _ in range(TRIANGLE_RETRIES + 1):
            u = rng.random(6).tolist()
            x, y = _pick(u[0], 0, width - 1), _pick(u[1], 0, height - 1)
            params = [x, y]
            for i in (2, 4):
                params.append(x + _pick(u[i], -max_extent, max_extent))
                params.append(y + _pick(u[i + 1], -max_extent, max_extent))
            shape = Shape(kind, params).clamped(bounds)
            if not shape.is_degenerate():
                break
        # degenerate triangles only survive on canvases too small for any area
        return shape
    u = rng.random(5).tolist()
    x, y = _pick(u[0], 0, width - 1), _pick(u[1], 0, height - 1)
    if kind == ShapeKind.RECTANGLE:
        params = [x, y, x + _pick(u[2], 0, max_extent - 1), y + _pick(u[3], 0, max_extent - 1)]
    elif kind in (ShapeKind.ROTATED_RECTANGLE, ShapeKind.ROTATED_ELLIPSE):
        params = [x, y, _pick(u[2], 1, max_extent), _pick(u[3], 1, max_extent), _pick(u[4], 0, 359)]
    elif kind == ShapeKind.ELLIPSE:
        params = [x, y, _pick(u[2], 1, max_extent), _pick(u[3], 1, max_extent)]
    else:
        params = [x, y, _pick(u[2], 1, max_extent)]
    return Shape(kind, params).clamped(bounds)


# Mutation sites per kind: each site is the tuple of parameters it moves.
MUTATION_SITES = {
    ShapeKind.TRIANGLE: [('x1', 'y1'), ('x2', 'y2'), ('x3', 'y3')],
    ShapeKind.RECTANGLE: [('x1', 'y1'), ('x2', 'y2')],
    ShapeKind.ROTATED_RECTANGLE: [('cx', 'cy'), ('w',), ('h',), ('angle',)],
    ShapeKind.ELLIPSE: [('cx', 'cy'), ('rx',), ('ry',)],
    ShapeKind.ROTATED_ELLIPSE: [('cx', 'cy'), ('rx',), ('ry',), ('angle',)],
    ShapeKind.CIRCLE: [('cx', 'cy'), ('r',)],
    }


def mutate(shape, bounds, rng, sigma=SIGMA, angle_sigma=ANGLE_SIGMA):
    """
    Returns a new Shape that differs from shape in one mutation site.
    The input is not modified.

    A triangle that would become collinear is redrawn;
    after TRIANGLE_RETRIES failures the input is returned unchanged.
    """
    sites = MUTATION_SITES[shape.kind]
    for _ in range(TRIANGLE_RETRIES + 1):
        site = sites[_pick(rng.random(), 0, len(sites) - 1)]
        steps = rng.normal(size=len(site)).tolist()
        changes = {}
        for name, step in zip(site, steps):
            scale = angle_sigma if name == 'angle' else sigma
            changes[name] = shape[name] + int(round(step * scale))
        mutated = shape.replace(**changes).clamped(bounds)
        if not mutated.is_degenerate():
            return mutated
    return shape


class ShapeFactory:
    """
    Random shapes for one canvas and mode.

    @type mode:  int
    @param mode: 0 draws kinds uniformly from all six kinds, 1 only triangles.
    """
    def __init__(self, bounds, mode=0, sigma=SIGMA, angle_sigma=ANGLE_SIGMA,
                 max_extent=MAX_INITIAL_EXTENT):
        self.bounds = tuple(bounds)
        self.mode = mode
        self.kinds = MODE_KINDS[mode]
        self.sigma = sigma
        self.angle_sigma = angle_sigma
        self.max_extent = max_extent

    def __repr__(self):
        return 'ShapeFactory(%ix%i, mode %i)' % (self.bounds + (self.mode,))

    @classmethod
    def from_config(cls, bounds, config):
        return cls(bounds, config.mode, config.sigma, config.angle_sigma,
                   config.max_initial_extent)

    def random_kind(self, rng):
        if len(self.kinds) == 1:
            return self.kinds[0]
        return self.kinds[_pick(rng.random(), 0, len(self.kinds) - 1)]

    def random_shape(self, rng):
        return random_shape(self.random_kind(rng), self.bounds, rng, self.max_extent)

    def mutate(self, shape, rng):
        return mutate(shape, self.bounds, rng, self.sigma, self.angle_sigma)
