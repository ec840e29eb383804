# -*- coding: utf-8 -*-
#
# Sphinx configuration of the shapecompiler documentation.
# Build with `python setup.py docs`; the API pages are regenerated
# into docs/_rst by sphinx-apidoc on every build.

import inspect
import os
import subprocess
import sys

__location__ = os.path.join(os.getcwd(), os.path.dirname(
    inspect.getfile(inspect.currentframe())))

output_dir = os.path.join(__location__, "../docs/_rst")
module_dir = os.path.join(__location__, "../shapecompiler")
cmd_line = "sphinx-apidoc -f -o {outputdir} {moduledir}".format(outputdir=output_dir, moduledir=module_dir)
subprocess.call(cmd_line, shell=True)

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.intersphinx', 'sphinx.ext.autosummary',
              'sphinx.ext.viewcode', 'sphinx.ext.doctest']

source_suffix = '.rst'
master_doc = 'index'
exclude_patterns = ['_build']

project = u'shapecompiler'
copyright = u'2026, shapecompiler developers'
version = ''  # Is set by calling `setup.py docs`
release = ''  # Is set by calling `setup.py docs`

try:
    from shapecompiler import __name__ as proj_name
    from shapecompiler import __version__ as proj_version
except ImportError:
    pass
else:
    html_title = ' '.join([proj_name, ''.join(['v', proj_version]), 'documentation'])
    version = release = proj_version

pygments_style = 'sphinx'
html_theme = 'default'
htmlhelp_basename = 'shapecompiler-doc'

python_version = '.'.join(map(str, sys.version_info[0:2]))
intersphinx_mapping = {
    'python': ('https://docs.python.org/' + python_version, None),
    'numpy': ('https://numpy.org/doc/stable/', None),
    'scipy': ('https://docs.scipy.org/doc/scipy/', None),
    'PIL': ('https://pillow.readthedocs.io/en/stable/', None),
    'joblib': ('https://joblib.readthedocs.io/en/stable/', None),
    'numba': ('https://numba.readthedocs.io/en/stable/', None),
}
