#!/usr/bin/env python

"""
Class Compiler: turns one raster image (path or RasterImage)
                into shape abstractions at every configured level.
"""

import logging
import os

from shapecompiler.definitions.config import FitConfig, write_config_file
from shapecompiler.emit.render import render, WORKING, ORIGINAL
from shapecompiler.emit.shape_list import document_to_json
from shapecompiler.emit.svg_output import emit_svg, minify_svg
from shapecompiler.fitter.fitter import fit
from shapecompiler.raster.raster_image import RasterImage, load_image
from shapecompiler.util.util import atomic_write
from shapecompiler.util.warnings import CompilerWarnings

logger = logging.getLogger(__name__)

RESOLVED_CONFIG_NAME = 'resolved_config.txt'
TRACE_NAME = 'trace.jsonl'


class Compiler:
    """
    Compiler fits shapes to an image and keeps one checkpoint per level.

    comp = Compiler('photo.jpg', FitConfig(levels=[10, 30]))
    comp.translate()
    comp.write_outputs('out/')
    """
    def __init__(self, input_data, config=None, name=None):
        """
        @type input_data:  RasterImage or path
        @param name:       stem of the output files, defaults to the input file name.
        """
        if isinstance(input_data, RasterImage):
            self.image = input_data
            self.name = name or 'image'
        else:
            self.image = load_image(input_data)
            self.name = name or os.path.splitext(os.path.basename(str(input_data)))[0]
        self.config = config or FitConfig()
        self.warnings = CompilerWarnings()
        self.state = None
        self.checkpoints = None
        self.trajectory = None

    def __repr__(self):
        return 'Compiler(%s, %s)' % (self.name, self.image)

    def translate(self, progress=False):
        """
        Runs the fit. Returns the CheckpointSet (one ShapeListDocument per level).
        """
        self.state, self.checkpoints, self.trajectory = fit(
            self.image, self.config, self.name, self.warnings, progress)
        if self.warnings.forced_steps:
            logger.warning('%s: %i forced steps', self.name, len(self.warnings.forced_steps))
        return self.checkpoints

    def get_svg(self, level=None, minify=False):
        """SVG text of a level, the last level by default."""
        svg = emit_svg(self._get_document(level))
        return minify_svg(svg) if minify else svg

    def get_shape_list(self, level=None):
        return document_to_json(self._get_document(level))

    def get_image(self, level=None, at=ORIGINAL):
        return render(self._get_document(level), at)

    def _get_document(self, level):
        if self.checkpoints is None:
            self.translate()
        if level is None:
            return self.checkpoints[-1].document
        return self.checkpoints.get_checkpoint(level).document

    def output_stem(self, level):
        return '%s_%i_%i' % (self.name, self.config.mode, level)

    def write_outputs(self, output_dir, minify=False, trace=False, png=True, resolved_config=None):
        """
        Writes <stem>_<mode>_<level>.{svg,json,png} for every level,
        <stem>_<mode>_<level>.min.svg with minify, trace.jsonl with trace
        and resolved_config.txt. Returns the written paths.
        """
        if self.checkpoints is None:
            self.translate()
        os.makedirs(output_dir, exist_ok=True)
        written = []
        for checkpoint in self.checkpoints:
            stem = os.path.join(output_dir, self.output_stem(checkpoint.level))
            svg = emit_svg(checkpoint.document)
            files = [(stem + '.svg', svg), (stem + '.json', document_to_json(checkpoint.document))]
            if minify:
                files.append((stem + '.min.svg', minify_svg(svg)))
            if png:
                files.append((stem + '.png', render(checkpoint.document, ORIGINAL).to_png_bytes()))
            for path, data in files:
                atomic_write(path, data.encode('utf-8') if not isinstance(data, bytes) else data)
                written.append(path)
        if trace:
            path = os.path.join(output_dir, TRACE_NAME)
            self.trajectory.write_jsonl(path)
            written.append(path)
        path = os.path.join(output_dir, RESOLVED_CONFIG_NAME)
        write_config_file(path, resolved_config or self.config.to_dict())
        written.append(path)
        logger.info('%s: wrote %i files to %s', self.name, len(written), output_dir)
        return written

    def check_replay(self):
        """True when the last document renders to the fitted canvas."""
        return render(self.checkpoints[-1].document, WORKING) == self.state.canvas
