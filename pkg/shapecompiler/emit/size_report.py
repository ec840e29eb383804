#!/usr/bin/env python

"""
Byte sizes of the serializations of one document.
"""

from collections import OrderedDict

import numpy as np

from shapecompiler.emit.render import render, ORIGINAL
from shapecompiler.emit.svg_output import SvgTranslator, emit_svg, minify_svg


def element_sizes(document):
    """{kind value: [serialized element bytes, ...]} in document order."""
    translator = SvgTranslator()
    sizes = OrderedDict()
    for placed in document.shapes:
        text = translator.get_element(placed).tostring()
        sizes.setdefault(placed.kind.value, []).append(len(text.encode('utf-8')))
    return sizes


def size_report(document, png=True):
    """
    @rtype:  dict
    @return: svg_bytes, minified_bytes, png_bytes (original size render,
             None when png is False), per_kind_mean_element_bytes.
    """
    svg = emit_svg(document)
    report = {
        'svg_bytes': len(svg.encode('utf-8')),
        'minified_bytes': len(minify_svg(svg).encode('utf-8')),
        'png_bytes': len(render(document, ORIGINAL).to_png_bytes()) if png else None,
        'per_kind_mean_element_bytes': dict(
            (kind, float(np.mean(values))) for kind, values in element_sizes(document).items()),
        }
    return report


def format_size_report(report, source_bytes=None):
    lines = ['svg bytes:       %i' % report['svg_bytes'],
             'minified bytes:  %i' % report['minified_bytes']]
    if report['png_bytes'] is not None:
        lines.append('png bytes:       %i' % report['png_bytes'])
    if source_bytes:
        lines.append('svg / source:    %.4f' % (report['svg_bytes'] / float(source_bytes)))
    for kind in sorted(report['per_kind_mean_element_bytes']):
        lines.append('  %-18s %.1f' % (kind, report['per_kind_mean_element_bytes'][kind]))
    return '\n'.join(lines)
