#!/usr/bin/env python

"""
Module builder.py - fits every image of a corpus and writes the dataset.

Output layout below the output root:
    <mode>/<level>/<class>/<stem>.svg   abstraction as SVG
    <mode>/<level>/<class>/<stem>.json  shape list (archival, replayable)
    <mode>/<level>/<class>/<stem>.png   render at source size
    manifest.jsonl                      one ManifestEntry per image
    warnings.json                       CompilerWarnings of the build

Process:
1. images are listed and assigned to splits,
2. with resume, complete entries of the old manifest are kept,
3. the remaining images are fitted in a joblib pool; every finished
   image is appended to the manifest once its files are on disk,
4. the manifest is rewritten in corpus order.
"""

import logging
import os

import numpy as np
from joblib import Parallel, delayed
from tqdm import tqdm

from shapecompiler.dataset.budget import entropy_budget, budget_levels
from shapecompiler.dataset.corpus import discover_images, image_stem
from shapecompiler.dataset.manifest import (DatasetManifest, LevelOutput, ManifestEntry,
                                            ManifestWriter, load_manifest, MANIFEST_NAME,
                                            WARNINGS_NAME, STATUS_FAILED)
from shapecompiler.dataset.splits import plan_splits
from shapecompiler.emit.render import render, ORIGINAL
from shapecompiler.emit.shape_list import document_to_json
from shapecompiler.emit.svg_output import emit_svg
from shapecompiler.fitter.fitter import fit
from shapecompiler.raster.entropy import shannon_entropy
from shapecompiler.raster.raster_image import load_image
from shapecompiler.util.errors import DatasetError, ImageDecodeError
from shapecompiler.util.util import atomic_write, stable_key
from shapecompiler.util.warnings import CompilerWarnings

logger = logging.getLogger(__name__)


def image_seed(seed, rel_path):
    """Fit seed of one image, fixed by the run seed and the image path."""
    sequence = np.random.SeedSequence([int(seed) & 0xffffffffffffffff, stable_key(rel_path)])
    return int(sequence.generate_state(1)[0])


def output_path(mode, level, rel_path, extension):
    label = rel_path.split('/')[0]
    return '%i/%i/%s/%s.%s' % (mode, level, label, image_stem(rel_path), extension)


def write_checkpoint(root, rel_path, mode, checkpoint):
    """Writes svg, json and png of one checkpoint, returns its LevelOutput."""
    paths = dict((ext, output_path(mode, checkpoint.level, rel_path, ext))
                 for ext in ('svg', 'json', 'png'))
    os.makedirs(os.path.dirname(os.path.join(root, paths['svg'])), exist_ok=True)
    svg = emit_svg(checkpoint.document).encode('utf-8')
    png = render(checkpoint.document, ORIGINAL).to_png_bytes()
    atomic_write(os.path.join(root, paths['svg']), svg)
    atomic_write(os.path.join(root, paths['json']), document_to_json(checkpoint.document).encode('utf-8'))
    atomic_write(os.path.join(root, paths['png']), png)
    return LevelOutput(mode, checkpoint.level, paths['svg'], paths['json'], paths['png'],
                       checkpoint.rmse, len(svg), len(png))


def image_levels(config, entropy_bits):
    """Checkpoint levels of one image, the budget ladder when budgeting is on."""
    levels = config.fit.levels
    if config.budget is not None:
        levels = budget_levels(levels, entropy_budget(entropy_bits, config.budget))
    return levels


def expected_cells(config, entropy_bits):
    """Sorted (mode, level) pairs a fit of the image writes under config."""
    return sorted((mode, level) for mode in config.modes
                  for level in image_levels(config, entropy_bits))


def process_image(image, split, config):
    """
    Fits one image in every mode and writes its outputs.
    A decode failure gives a failed entry, it does not raise.

    @rtype:  tuple
    @return: (ManifestEntry, CompilerWarnings)
    """
    warnings = CompilerWarnings()
    try:
        target = load_image(image.path)
    except ImageDecodeError as e:
        warnings.add_failed_image(image.rel_path, e)
        return ManifestEntry(image.rel_path, image.label, split, status=STATUS_FAILED,
                             reason=str(e)), warnings
    # the manifest keeps 6 decimals; budgets come from the stored value
    entropy_bits = round(shannon_entropy(target).bits, 6)
    levels = image_levels(config, entropy_bits)
    seed = image_seed(config.fit.seed, image.rel_path)
    outputs = []
    forced_steps = []
    for mode in config.modes:
        fit_config = config.fit.clone(mode=mode, levels=levels, seed=seed, workers=1)
        state, checkpoints, trajectory = fit(target, fit_config, image.rel_path, warnings)
        forced_steps.extend([mode, step] for step in trajectory.forced_steps)
        for checkpoint in checkpoints:
            outputs.append(write_checkpoint(config.output_root, image.rel_path, mode, checkpoint))
    entry = ManifestEntry(image.rel_path, image.label, split, entropy_bits,
                          source_bytes=os.path.getsize(image.path), outputs=outputs,
                          forced_steps=forced_steps)
    return entry, warnings


def reusable_entries(manifest_path, config, splits):
    """
    Complete entries of an earlier run whose split is unchanged and
    whose (mode, level) cells are the ones config asks for.
    """
    if not os.path.isfile(manifest_path):
        return {}
    reuse = {}
    stale = 0
    for entry in load_manifest(manifest_path, tolerant=True):
        if entry.source not in splits or entry.split != splits[entry.source]:
            continue
        if not entry.is_complete(config.output_root):
            continue
        if entry.cells != expected_cells(config, entry.entropy):
            stale += 1
            continue
        reuse[entry.source] = entry
    if stale:
        logger.info('%i earlier entries have other levels or modes, refitting them', stale)
    return reuse


def build_dataset(config, warnings=None, progress=False):
    """
    Builds the dataset described by a DatasetConfig.

    Raises DatasetError when the output root already holds a manifest
    and resume is off.

    @rtype:  DatasetManifest
    """
    warnings = warnings if warnings is not None else CompilerWarnings()
    root = config.output_root
    manifest_path = os.path.join(root, MANIFEST_NAME)
    if os.path.exists(manifest_path) and not config.resume:
        raise DatasetError('output collision: %s exists, use resume to continue' % manifest_path)
    images = discover_images(config.input_root)
    splits = plan_splits(images, config.split, config.split_seed, warnings, config.input_root)
    os.makedirs(root, exist_ok=True)

    previous = reusable_entries(manifest_path, config, splits)
    for entry in previous.values():
        warnings.add_resumed(entry.source)
        for mode, step in entry.forced_steps:
            warnings.add_forced_step(entry.source, step)
    todo = [image for image in images if image.rel_path not in previous]
    logger.info('%i images to fit, %i reused', len(todo), len(previous))

    done = {}
    ordered_previous = [previous[i.rel_path] for i in images if i.rel_path in previous]
    with ManifestWriter(manifest_path, ordered_previous) as writer:
        parallel = Parallel(n_jobs=config.fit.workers, return_as='generator')
        results = parallel(delayed(process_image)(image, splits[image.rel_path], config)
                           for image in todo)
        for entry, image_warnings in tqdm(results, total=len(todo), desc='images',
                                          unit='image', disable=not progress):
            writer.append(entry)
            warnings.merge(image_warnings)
            done[entry.source] = entry

    manifest = DatasetManifest(previous.get(i.rel_path) or done[i.rel_path] for i in images)
    manifest.write(manifest_path)
    warnings.write(os.path.join(root, WARNINGS_NAME))
    logger.info('dataset written to %s: %s', root, warnings.get_summary_str())
    return manifest
