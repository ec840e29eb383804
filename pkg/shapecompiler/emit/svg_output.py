#!/usr/bin/env python

"""
Module svg_output.py

Classes:
SvgTranslator - produces one svgwrite element per placed shape.

emit_svg   - SVG text of a ShapeListDocument.
minify_svg - shorter equivalent SVG text.
parse_svg  - reads back background and shapes from emitted SVG.

Element layout:
- the root is W0 x H0, all drawables sit in one <g> scaled from working
  to original coordinates,
- the first drawable is the background rect (no fill-opacity),
- triangles are polygons, rectangles rects, circles and ellipses keep
  their own elements; rotated kinds carry rotate(angle cx cy) about
  the centre of their centre pixel.
"""

import re
import xml.etree.ElementTree as ET

import svgwrite

from shapecompiler.fitter.placed_shape import PlacedShape
from shapecompiler.geometry.shape import Shape, ShapeKind
from shapecompiler.raster.raster_image import Color
from shapecompiler.util.errors import DocumentError
from shapecompiler.util.util import format_number

SVG_NS = '{http://www.w3.org/2000/svg}'
SCALE_DECIMALS = 6


def opacity_str(alpha):
    return '%.4f' % (alpha / 255.0)


class SvgTranslator:
    """
    Translates PlacedShape objects into svgwrite elements.
    All numbers are passed as preformatted strings.
    """
    def __init__(self, drawing=None):
        self.drawing = drawing or svgwrite.Drawing(debug=False)

    def get_element(self, placed):
        kind = placed.shape.kind
        if kind == ShapeKind.TRIANGLE:
            element = self.get_polygon(placed.shape)
        elif kind in (ShapeKind.RECTANGLE, ShapeKind.ROTATED_RECTANGLE):
            element = self.get_rect(placed.shape)
        elif kind == ShapeKind.CIRCLE:
            element = self.get_circle(placed.shape)
        else:
            element = self.get_ellipse(placed.shape)
        element['fill'] = placed.color.hex
        element['fill-opacity'] = opacity_str(placed.color.alpha)
        return element

    def get_polygon(self, shape):
        p = shape.params
        return self.drawing.polygon(points=[(p[0], p[1]), (p[2], p[3]), (p[4], p[5])])

    def get_rect(self, shape):
        if shape.kind == ShapeKind.RECTANGLE:
            x1, y1, x2, y2 = shape.params
            return self.drawing.rect(insert=(str(min(x1, x2)), str(min(y1, y2))),
                                     size=(str(abs(x2 - x1) + 1), str(abs(y2 - y1) + 1)))
        cx, cy, w, h, angle = shape.params
        rect = self.drawing.rect(insert=(format_number(cx + 0.5 - w / 2.0), format_number(cy + 0.5 - h / 2.0)),
                                 size=(str(w), str(h)))
        rect['transform'] = self.get_rotation(shape)
        return rect

    def get_circle(self, shape):
        cx, cy, r = shape.params
        return self.drawing.circle(center=(format_number(cx + 0.5), format_number(cy + 0.5)), r=str(r))

    def get_ellipse(self, shape):
        cx, cy, rx, ry = shape.params[:4]
        ellipse = self.drawing.ellipse(center=(format_number(cx + 0.5), format_number(cy + 0.5)),
                                       r=(str(rx), str(ry)))
        if shape.kind == ShapeKind.ROTATED_ELLIPSE:
            ellipse['transform'] = self.get_rotation(shape)
        return ellipse

    def get_rotation(self, shape):
        return 'rotate(%i %s %s)' % (shape['angle'], format_number(shape['cx'] + 0.5),
                                     format_number(shape['cy'] + 0.5))

    def get_background(self, document):
        width, height = document.working_size
        return self.drawing.rect(insert=('0', '0'), size=(str(width), str(height)),
                                 fill=document.background.hex)


def emit_svg(document):
    """
    Returns the SVG text of document, identical bytes for identical documents.
    """
    sx, sy = document.scale
    drawing = svgwrite.Drawing(size=document.original_size, debug=False)
    translator = SvgTranslator(drawing)
    group = drawing.g(transform='scale(%s %s)' % (format_number(sx, SCALE_DECIMALS),
                                                  format_number(sy, SCALE_DECIMALS)))
    group.add(translator.get_background(document))
    for placed in document.shapes:
        group.add(translator.get_element(placed))
    drawing.add(group)
    return drawing.tostring()


_BETWEEN_TAGS = re.compile(r'>\s+<')
_LONG_HEX = re.compile(r'"#([0-9a-fA-F])\1([0-9a-fA-F])\2([0-9a-fA-F])\3"')
_OPACITY = re.compile(r'fill-opacity="([0-9]+)\.([0-9]*)"')
_EMPTY_DEFS = re.compile(r'<defs\s*/>|<defs>\s*</defs>')


def _trim_opacity(match):
    fraction = match.group(2).rstrip('0')
    if not fraction:
        return 'fill-opacity="%s"' % match.group(1)
    return 'fill-opacity="%s.%s"' % (match.group(1), fraction)


def minify_svg(svg):
    """
    Removes whitespace between tags and the empty defs element,
    writes #aabbcc as #abc and trims trailing opacity zeros.
    Raises DocumentError when svg is not emitted SVG.
    """
    parse_svg(svg)
    svg = _BETWEEN_TAGS.sub('><', svg)
    svg = _EMPTY_DEFS.sub('', svg)
    svg = _LONG_HEX.sub(r'"#\1\2\3"', svg)
    return _OPACITY.sub(_trim_opacity, svg)


def _color(element):
    fill = element.get('fill', '')
    if not re.match(r'^#([0-9a-fA-F]{3}|[0-9a-fA-F]{6})$', fill):
        raise DocumentError('bad fill %r' % fill)
    digits = fill[1:]
    if len(digits) == 3:
        digits = ''.join(d * 2 for d in digits)
    rgb = [int(digits[i:i + 2], 16) for i in (0, 2, 4)]
    opacity = element.get('fill-opacity')
    alpha = 255 if opacity is None else int(round(float(opacity) * 255))
    return Color(rgb[0], rgb[1], rgb[2], alpha)


def _centre(value):
    return int(round(float(value) - 0.5))


def _rotation_angle(element):
    match = re.match(r'^rotate\(([-0-9.]+)[ ,]', element.get('transform', ''))
    if not match:
        raise DocumentError('rotated element without rotate transform')
    return int(round(float(match.group(1))))


def _shape(element):
    tag = element.tag.replace(SVG_NS, '')
    rotated = 'transform' in element.attrib
    get = lambda name: float(element.get(name))
    if tag == 'polygon':
        values = [int(round(float(v))) for v in re.split(r'[ ,]+', element.get('points').strip())]
        return Shape(ShapeKind.TRIANGLE, values)
    elif tag == 'rect' and not rotated:
        x, y = int(get('x')), int(get('y'))
        return Shape(ShapeKind.RECTANGLE, [x, y, x + int(get('width')) - 1, y + int(get('height')) - 1])
    elif tag == 'rect':
        w, h = int(get('width')), int(get('height'))
        return Shape(ShapeKind.ROTATED_RECTANGLE, [_centre(get('x') + w / 2.0), _centre(get('y') + h / 2.0),
                                                   w, h, _rotation_angle(element)])
    elif tag == 'circle':
        return Shape(ShapeKind.CIRCLE, [_centre(get('cx')), _centre(get('cy')), int(get('r'))])
    elif tag == 'ellipse':
        params = [_centre(get('cx')), _centre(get('cy')), int(get('rx')), int(get('ry'))]
        if rotated:
            return Shape(ShapeKind.ROTATED_ELLIPSE, params + [_rotation_angle(element)])
        return Shape(ShapeKind.ELLIPSE, params)
    raise DocumentError('unexpected element <%s>' % tag)


def parse_svg(svg):
    """
    Reads SVG written by emit_svg or minify_svg.

    @rtype:  tuple
    @return: (background Color, list of PlacedShape)
    """
    try:
        root = ET.fromstring(svg)
    except ET.ParseError as e:
        raise DocumentError('SVG is not well-formed: %s' % e)
    groups = root.findall(SVG_NS + 'g')
    if root.tag != SVG_NS + 'svg' or len(groups) != 1:
        raise DocumentError('not an emitted shape SVG')
    elements = list(groups[0])
    if not elements or elements[0].tag != SVG_NS + 'rect':
        raise DocumentError('emitted SVG starts with a background rect')
    try:
        background = _color(elements[0])
        shapes = [PlacedShape(_shape(element), _color(element)) for element in elements[1:]]
    except (TypeError, ValueError) as e:
        raise DocumentError('malformed shape element: %s' % e)
    return background, shapes
