#!/usr/bin/env python

"""
Module manifest.py - the line-delimited record of a dataset build.

Classes:
LevelOutput     - files and scores of one (mode, level) of one image.
ManifestEntry   - one source image with its split, entropy and outputs.
DatasetManifest - list of entries in corpus order.
ManifestWriter  - appends entries to an open manifest, one durable line each.

load_manifest   - reads and validates manifest.jsonl (ManifestError).
verify_manifest - lists missing files and size mismatches.

All output paths are relative to the dataset output root and use '/'.
"""

import json
import logging
import os

from shapecompiler.util.errors import ManifestError
from shapecompiler.util.util import atomic_write

logger = logging.getLogger(__name__)

SCHEMA = 1
MANIFEST_NAME = 'manifest.jsonl'
WARNINGS_NAME = 'warnings.json'
STATUS_OK = 'ok'
STATUS_FAILED = 'failed'


class LevelOutput:
    def __init__(self, mode, level, svg, json, png, rmse, svg_bytes, png_bytes):
        self.mode = int(mode)
        self.level = int(level)
        self.svg = svg
        self.json = json
        self.png = png
        self.rmse = float(rmse)
        self.svg_bytes = int(svg_bytes)
        self.png_bytes = int(png_bytes)

    def __repr__(self):
        return 'LevelOutput(mode %i, level %i, rmse %.4f)' % (self.mode, self.level, self.rmse)

    @property
    def paths(self):
        return [self.svg, self.json, self.png]

    def to_dict(self):
        return {'mode': self.mode, 'level': self.level, 'svg': self.svg, 'json': self.json,
                'png': self.png, 'rmse': self.rmse, 'svg_bytes': self.svg_bytes,
                'png_bytes': self.png_bytes}

    @classmethod
    def from_dict(cls, data):
        return cls(data['mode'], data['level'], data['svg'], data['json'], data['png'],
                   data['rmse'], data['svg_bytes'], data['png_bytes'])


class ManifestEntry:
    """
    @ivar source:        path of the image relative to the corpus root.
    @ivar forced_steps:  [mode, step] pairs of forced steps over all fits.
    @ivar reason:        why the image failed, None for status ok.
    """
    def __init__(self, source, label, split, entropy=None, status=STATUS_OK, reason=None,
                 source_bytes=0, outputs=None, forced_steps=None):
        self.source = source
        self.label = label
        self.split = split
        self.entropy = entropy
        self.status = status
        self.reason = reason
        self.source_bytes = int(source_bytes)
        self.outputs = list(outputs or [])
        self.forced_steps = [list(pair) for pair in (forced_steps or [])]

    def __repr__(self):
        return 'ManifestEntry(%s, %s, %s, %i outputs)' % (self.source, self.split, self.status,
                                                          len(self.outputs))

    def __eq__(self, other):
        return isinstance(other, ManifestEntry) and self.to_dict() == other.to_dict()

    @property
    def ok(self):
        return self.status == STATUS_OK

    @property
    def cells(self):
        """Sorted (mode, level) pairs with outputs."""
        return sorted((out.mode, out.level) for out in self.outputs)

    def get_output(self, mode, level):
        for out in self.outputs:
            if out.mode == mode and out.level == level:
                return out
        raise KeyError('%s has no output for mode %s level %s' % (self.source, mode, level))

    def is_complete(self, root):
        """True for ok entries whose output files all exist below root."""
        return self.ok and bool(self.outputs) and all(
            os.path.isfile(os.path.join(root, path)) for out in self.outputs for path in out.paths)

    def to_dict(self):
        return {'schema': SCHEMA, 'source': self.source, 'class': self.label, 'split': self.split,
                'entropy': self.entropy, 'status': self.status, 'reason': self.reason,
                'source_bytes': self.source_bytes,
                'outputs': [out.to_dict() for out in self.outputs],
                'forced_steps': self.forced_steps}

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data):
        if data.get('schema') != SCHEMA:
            raise ManifestError('unsupported manifest schema: %s' % data.get('schema'))
        return cls(data['source'], data['class'], data['split'], data.get('entropy'),
                   data['status'], data.get('reason'), data.get('source_bytes', 0),
                   [LevelOutput.from_dict(out) for out in data['outputs']],
                   data.get('forced_steps'))


class DatasetManifest(list):
    """ManifestEntry objects in corpus order."""

    @property
    def ok_entries(self):
        return [entry for entry in self if entry.ok]

    @property
    def failed_entries(self):
        return [entry for entry in self if not entry.ok]

    @property
    def splits(self):
        return sorted(set(entry.split for entry in self))

    def get_entry(self, source):
        for entry in self:
            if entry.source == source:
                return entry
        raise KeyError('no manifest entry for %s' % source)

    def to_jsonl(self):
        return ''.join(entry.to_json() + '\n' for entry in self)

    def write(self, path):
        """Replaces path atomically with the whole manifest."""
        atomic_write(path, self.to_jsonl())


class ManifestWriter:
    """
    Appends entries to a manifest file; every line is flushed and synced
    before append returns, so an interrupted build leaves whole lines
    (at worst one truncated last line).
    """
    def __init__(self, path, entries=()):
        self.path = path
        DatasetManifest(entries).write(path)
        self.handle = None

    def __enter__(self):
        self.handle = open(self.path, 'a')
        return self

    def __exit__(self, exc_type, exc_value, traceback):
        self.close()

    def append(self, entry):
        self.handle.write(entry.to_json() + '\n')
        self.handle.flush()
        os.fsync(self.handle.fileno())

    def close(self):
        if self.handle is not None:
            self.handle.close()
            self.handle = None


def load_manifest(path, tolerant=False):
    """
    Reads manifest.jsonl.

    @type tolerant:  bool
    @param tolerant: skip a malformed last line (interrupted write)
                     instead of raising ManifestError.
    """
    if not os.path.isfile(path):
        raise ManifestError('manifest not found: %s' % path)
    with open(path) as f:
        lines = f.read().split('\n')
    while lines and not lines[-1].strip():
        lines.pop()
    manifest = DatasetManifest()
    for number, line in enumerate(lines, 1):
        if not line.strip():
            continue
        try:
            manifest.append(ManifestEntry.from_dict(json.loads(line)))
        except ManifestError as e:
            raise ManifestError('%s line %i: %s' % (path, number, e))
        except (ValueError, KeyError, TypeError) as e:
            if tolerant and number == len(lines):
                logger.warning('%s: ignoring incomplete last line %i', path, number)
                continue
            raise ManifestError('%s line %i: malformed entry (%s)' % (path, number, e))
    return manifest


def verify_manifest(manifest, root):
    """
    Checks that every ok entry has its files below root and that
    the recorded svg sizes match the files.

    @rtype:  list of strings
    @return: problems, empty when the manifest is complete.
    """
    problems = []
    for entry in manifest.ok_entries:
        for out in entry.outputs:
            for path in out.paths:
                if not os.path.isfile(os.path.join(root, path)):
                    problems.append('%s: missing %s' % (entry.source, path))
            svg_path = os.path.join(root, out.svg)
            if os.path.isfile(svg_path) and os.path.getsize(svg_path) != out.svg_bytes:
                problems.append('%s: %s has %i bytes, manifest says %i'
                                % (entry.source, out.svg, os.path.getsize(svg_path), out.svg_bytes))
    return problems
