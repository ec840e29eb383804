#!/usr/bin/env python

"""
Unit Tests for size_report.py module.
"""

from unittest import main, TestCase

from shapecompiler.emit.size_report import size_report, element_sizes, format_size_report
from shapecompiler.emit.svg_output import emit_svg, minify_svg
from tests.test_emit.sample_documents import one_of_each, background_only


class SizeReportTests(TestCase):
    def setUp(self):
        self.document = one_of_each()

    def test_report(self):
        report = size_report(self.document)
        self.assertEqual(report['svg_bytes'], len(emit_svg(self.document).encode('utf-8')))
        self.assertEqual(report['minified_bytes'], len(minify_svg(emit_svg(self.document))))
        self.assertLess(report['minified_bytes'], report['svg_bytes'])
        self.assertGreater(report['png_bytes'], 0)
        self.assertEqual(sorted(report['per_kind_mean_element_bytes']),
                         ['circle', 'ellipse', 'rectangle', 'rotated_ellipse', 'rotated_rectangle', 'triangle'])

    def test_no_png(self):
        report = size_report(background_only(), png=False)
        self.assertIsNone(report['png_bytes'])
        self.assertEqual(report['per_kind_mean_element_bytes'], {})
        self.assertNotIn('png bytes', format_size_report(report))

    def test_element_sizes(self):
        """Rotated kinds cost more bytes than their plain versions."""
        sizes = element_sizes(self.document)
        self.assertEqual(sum(len(v) for v in sizes.values()), 6)
        self.assertGreater(sizes['rotated_ellipse'][0], sizes['ellipse'][0])

    def test_format(self):
        text = format_size_report(size_report(self.document), source_bytes=1000)
        self.assertIn('svg bytes:', text)
        self.assertIn('svg / source:', text)


if __name__ == '__main__':
    main()
