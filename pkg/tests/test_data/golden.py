#!/usr/bin/env python

"""
Golden values frozen in tests/test_data/golden/.

A missing golden file is written by the first run and compared
against from then on; delete it to re-record after an intended change
of the random draws or the output format.
"""

import logging
import os

logger = logging.getLogger(__name__)

GOLDEN_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'golden')


def check_golden(test, name, text):
    """Asserts that text equals golden/<name>, recording it when missing."""
    path = os.path.join(GOLDEN_DIR, name)
    if not os.path.isfile(path):
        os.makedirs(GOLDEN_DIR, exist_ok=True)
        with open(path, 'w') as f:
            f.write(text)
        logger.warning('recorded golden value %s', path)
    with open(path) as f:
        test.assertEqual(text, f.read(), msg='golden value %s changed' % name)
