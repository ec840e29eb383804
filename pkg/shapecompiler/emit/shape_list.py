#!/usr/bin/env python

"""
Module shape_list.py - the archival shape-list document.

Class ShapeListDocument - sizes, background and placed shapes of one abstraction.
document_to_json        - compact, byte-deterministic JSON text.
document_from_json      - parses and validates JSON text (DocumentError).

JSON layout (version 1):
    {"bg":[r,g,b],"h":H,"h0":H0,"shapes":[{...}],"v":1,"w":W,"w0":W0}
Each shape record holds "kind", the integer parameters of the kind
and "color" [r, g, b, a].
"""

import json

from shapecompiler.fitter.placed_shape import PlacedShape
from shapecompiler.geometry.shape import ShapeKind, PARAM_NAMES
from shapecompiler.raster.raster_image import Color
from shapecompiler.util.errors import DocumentError

VERSION = 1
DOCUMENT_KEYS = ('v', 'w0', 'h0', 'w', 'h', 'bg', 'shapes')


class ShapeListDocument:
    """
    Replayable abstraction: rendering the shapes over the background
    at working size gives back the canvas of the fit.

    @type original_size: tuple
    @param original_size: (W0, H0) of the source image.
    @type working_size:  tuple
    @param working_size:  (W, H) the shapes were fitted at.
    @type shapes:        list of PlacedShape
    """
    def __init__(self, original_size, working_size, background, shapes=(), version=VERSION):
        self.original_size = tuple(int(v) for v in original_size)
        self.working_size = tuple(int(v) for v in working_size)
        self.background = background
        self.shapes = list(shapes)
        self.version = version

    def __repr__(self):
        return 'ShapeListDocument(%ix%i, %i shapes)' % (self.working_size + (len(self.shapes),))

    def __eq__(self, other):
        return isinstance(other, ShapeListDocument) and self.to_dict() == other.to_dict()

    def __len__(self):
        return len(self.shapes)

    @classmethod
    def from_state(cls, state):
        """Document of everything placed so far in a FitState."""
        return cls(state.original_size, state.size, state.background.with_alpha(255), state.placed)

    def prefix(self, count):
        """Document with the first count shapes."""
        return ShapeListDocument(self.original_size, self.working_size, self.background,
                                 self.shapes[:count], self.version)

    @property
    def scale(self):
        """(sx, sy) from working to original coordinates."""
        return (float(self.original_size[0]) / self.working_size[0],
                float(self.original_size[1]) / self.working_size[1])

    def to_dict(self):
        return {'v': self.version,
                'w0': self.original_size[0], 'h0': self.original_size[1],
                'w': self.working_size[0], 'h': self.working_size[1],
                'bg': list(self.background.rgb),
                'shapes': [shape.to_dict() for shape in self.shapes]}

    @classmethod
    def from_dict(cls, data):
        if not isinstance(data, dict):
            raise DocumentError('shape list must be a JSON object')
        missing = [key for key in DOCUMENT_KEYS if key not in data]
        if missing:
            raise DocumentError('shape list lacks keys: %s' % ', '.join(missing))
        if data['v'] != VERSION:
            raise DocumentError('unsupported shape list version: %s' % data['v'])
        try:
            sizes = [int(data[key]) for key in ('w0', 'h0', 'w', 'h')]
            background = Color(*data['bg'])
        except (TypeError, ValueError) as e:
            raise DocumentError('bad size or background: %s' % e)
        if min(sizes) < 1:
            raise DocumentError('document sizes must be >= 1')
        shapes = [_shape_from_record(n, record) for n, record in enumerate(data['shapes'])]
        return cls(sizes[:2], sizes[2:], background, shapes, data['v'])


def _shape_from_record(number, record):
    try:
        kind = ShapeKind(record['kind'])
    except (KeyError, TypeError, ValueError):
        raise DocumentError('shape %i: unknown kind %r' % (number, record.get('kind')
                                                            if isinstance(record, dict) else record))
    missing = [name for name in PARAM_NAMES[kind] + ('color',) if name not in record]
    if missing:
        raise DocumentError('shape %i (%s) lacks: %s' % (number, kind.value, ', '.join(missing)))
    try:
        return PlacedShape.from_dict(record)
    except (TypeError, ValueError) as e:
        raise DocumentError('shape %i (%s): %s' % (number, kind.value, e))


def document_to_json(document):
    return json.dumps(document.to_dict(), sort_keys=True, separators=(',', ':'))


def document_from_json(text):
    try:
        data = json.loads(text)
    except ValueError as e:
        raise DocumentError('shape list is not valid JSON: %s' % e)
    return ShapeListDocument.from_dict(data)


def write_document(document, path):
    with open(path, 'w') as f:
        f.write(document_to_json(document))


def read_document(path):
    with open(path) as f:
        return document_from_json(f.read())
