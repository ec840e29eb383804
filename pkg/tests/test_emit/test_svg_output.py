#!/usr/bin/env python

"""
Unit Tests for svg_output.py module.
"""

import xml.etree.ElementTree as ET
from unittest import main, TestCase

from shapecompiler.emit.shape_list import ShapeListDocument
from shapecompiler.emit.svg_output import SvgTranslator, emit_svg, minify_svg, parse_svg, SVG_NS
from shapecompiler.fitter.fitter import fit
from shapecompiler.fitter.placed_shape import PlacedShape
from shapecompiler.geometry.shape import Shape, ShapeKind
from shapecompiler.raster.raster_image import Color
from shapecompiler.util.errors import DocumentError
from tests.test_data.golden import check_golden
from tests.test_data.images import tiny_config, scene
from tests.test_emit.sample_documents import one_of_each, background_only, ONE_OF_EACH


class SvgOutputTests(TestCase):
    """
    Tests for SVG emission, minification and parsing.
    """
    def setUp(self):
        self.document = one_of_each()
        self.svg = emit_svg(self.document)

    def test_background_only(self):
        """Root is W0 x H0, the group holds one background rect."""
        root = ET.fromstring(emit_svg(background_only(4, 3)))
        self.assertEqual((root.get('width'), root.get('height')), ('4', '3'))
        group = root.find(SVG_NS + 'g')
        self.assertEqual(group.get('transform'), 'scale(1 1)')
        elements = list(group)
        self.assertEqual(len(elements), 1)
        self.assertEqual(elements[0].get('fill'), '#112233')
        self.assertIsNone(elements[0].get('fill-opacity'))

    def test_scale_transform(self):
        root = ET.fromstring(self.svg)
        self.assertEqual(root.find(SVG_NS + 'g').get('transform'), 'scale(2 2)')
        odd = one_of_each((30, 10))
        group = ET.fromstring(emit_svg(odd)).find(SVG_NS + 'g')
        self.assertEqual(group.get('transform'), 'scale(3 2)')

    def test_elements(self):
        translator = SvgTranslator()
        opaque = PlacedShape(Shape(ShapeKind.CIRCLE, [3, 4, 2]), Color(1, 2, 3, 255))
        element = translator.get_element(opaque)
        self.assertEqual(element['fill-opacity'], '1.0000')
        self.assertEqual(element['fill'], '#010203')
        tags = [e.tag.replace(SVG_NS, '') for e in ET.fromstring(self.svg).find(SVG_NS + 'g')]
        self.assertEqual(tags, ['rect', 'polygon', 'rect', 'rect', 'circle', 'ellipse', 'ellipse'])
        self.assertIn('rotate(30 5.5 5.5)', self.svg)

    def test_deterministic(self):
        self.assertEqual(self.svg, emit_svg(one_of_each()))

    def test_golden(self):
        """Byte exact output of a fixed three shape document is frozen."""
        document = ShapeListDocument((10, 10), (10, 10), Color(40, 50, 60), ONE_OF_EACH[:3])
        check_golden(self, 'three_shapes.svg', emit_svg(document))

    def test_parse(self):
        """Emitted SVG gives back background and shapes."""
        background, shapes = parse_svg(self.svg)
        self.assertEqual(background, self.document.background)
        self.assertEqual(shapes, self.document.shapes)

    def test_parse_fitted(self):
        _, checkpoints, _ = fit(scene(16, 12, seed=2), tiny_config(levels=[6], probes=12))
        document = checkpoints.get_checkpoint(6).document
        self.assertEqual(parse_svg(emit_svg(document))[1], document.shapes)

    def test_minify(self):
        minified = minify_svg(self.svg)
        self.assertLess(len(minified), len(self.svg))
        self.assertIn('"#abc"', minified)
        self.assertNotIn('#aabbcc', minified)
        self.assertNotIn('<defs', minified)
        self.assertIn('fill-opacity="0.502"', minified)
        self.assertIn('fill-opacity="1"', minified)
        self.assertEqual(minify_svg(minified), minified)
        self.assertEqual(parse_svg(minified), parse_svg(self.svg))

    def test_errors(self):
        self.assertRaises(DocumentError, parse_svg, '<svg')
        self.assertRaises(DocumentError, parse_svg, '<svg xmlns="http://www.w3.org/2000/svg"/>')
        self.assertRaises(DocumentError, minify_svg, '<html></html>')
        bad = self.svg.replace('<circle', '<path')
        self.assertRaises(DocumentError, parse_svg, bad)


if __name__ == '__main__':
    main()
