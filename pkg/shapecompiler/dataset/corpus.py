#!/usr/bin/env python

"""
Module corpus.py - walks a class structured image tree.

    root/<class>/<image>.{jpg,jpeg,png}

Images are listed in a fixed order: classes sorted by name,
files sorted by name inside each class.
"""

import logging
import os
from collections import namedtuple

from shapecompiler.util.errors import DatasetError

logger = logging.getLogger(__name__)

IMAGE_EXTENSIONS = ('.jpg', '.jpeg', '.png')

# rel_path uses '/' on every platform: '<class>/<file name>'.
SourceImage = namedtuple('SourceImage', 'rel_path label path')


def image_stem(rel_path):
    return os.path.splitext(rel_path.split('/')[-1])[0]


def discover_images(root):
    """
    Returns the list of SourceImage objects below root.
    Files in root itself and non-image files are ignored.
    Raises DatasetError when root is not a directory or holds no images.
    """
    if not os.path.isdir(root):
        raise DatasetError('corpus root is not a directory: %s' % root)
    images = []
    for label in sorted(os.listdir(root)):
        class_dir = os.path.join(root, label)
        if not os.path.isdir(class_dir):
            continue
        for name in sorted(os.listdir(class_dir)):
            path = os.path.join(class_dir, name)
            if os.path.isfile(path) and os.path.splitext(name)[1].lower() in IMAGE_EXTENSIONS:
                images.append(SourceImage('%s/%s' % (label, name), label, path))
    if not images:
        raise DatasetError('no images found below %s' % root)
    logger.info('found %i images in %i classes', len(images), len(set(i.label for i in images)))
    return images
