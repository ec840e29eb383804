#!/usr/bin/env python

"""
Class CompilerWarnings: collects info on non-fatal problems
                        so they can be reported next to the outputs.
"""

import json
import logging

logger = logging.getLogger(__name__)


class CompilerWarnings:
    """
    Stores information on problems met while fitting images
    and building a dataset. Nothing here stops a run.
    """
    def __init__(self):
        """"""
        # (source, step) pairs where a non-improving shape had to be accepted.
        self.forced_steps = []
        # class label: image count, classes too small for the requested split.
        self.small_classes = {}
        # source: reason
        self.failed_images = {}
        # sources reused from an earlier run (resume).
        self.resumed = []

    def __len__(self):
        return len(self.forced_steps) + len(self.small_classes) + len(self.failed_images)

    def add_forced_step(self, source, step):
        self.forced_steps.append((str(source), step))

    def add_small_class(self, label, count):
        logger.warning('class %s has only %i images, all assigned to train', label, count)
        self.small_classes[label] = count

    def add_failed_image(self, source, reason):
        logger.warning('failed image %s: %s', source, reason)
        self.failed_images[str(source)] = str(reason)

    def add_resumed(self, source):
        self.resumed.append(str(source))

    def merge(self, other):
        """Adds problems collected by another CompilerWarnings object."""
        self.forced_steps.extend(other.forced_steps)
        self.small_classes.update(other.small_classes)
        self.failed_images.update(other.failed_images)
        self.resumed.extend(other.resumed)

    def to_dict(self):
        return {
            'forced_steps': [[source, step] for source, step in self.forced_steps],
            'small_classes': dict(self.small_classes),
            'failed_images': dict(self.failed_images),
            'resumed': list(self.resumed),
            }

    def get_summary_str(self):
        """One line summary used by the command line interface."""
        return '%i forced steps, %i small classes, %i failed images, %i resumed' % (
            len(self.forced_steps), len(self.small_classes),
            len(self.failed_images), len(self.resumed))

    def write(self, path):
        with open(path, 'w') as f:
            json.dump(self.to_dict(), f, indent=4, sort_keys=True)
