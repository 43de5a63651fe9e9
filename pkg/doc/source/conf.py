# -*- coding: utf-8 -*-
#
# gentle-thick documentation build configuration file.
#
# This file is execfile()d with the current directory set to its containing
# dir.
#
# All configuration values have a default; values that are commented out
# serve to show the default.

import os
import sys

# If extensions (or modules to document with autodoc) are in another
# directory, add these directories to sys.path here.
sys.path.insert(0, os.path.abspath('../..'))

from gentle_thick.version import version_info as gentle_thick_version  # noqa

# -- General configuration ---------------------------------------------------

# Add any Sphinx extension module names here, as strings.
extensions = ['sphinx.ext.autodoc', 'sphinx.ext.coverage',
              'sphinxcontrib.programoutput']

# Add any paths that contain templates here, relative to this directory.
templates_path = ['_templates']

# The suffix of source filenames.
source_suffix = '.rst'

# The master toctree document.
master_doc = 'index'

# General information about the project.
project = u'gentle-thick'
copyright = u'gentle-thick developers'

# The full version, including alpha/beta/rc tags.
release = gentle_thick_version.version_string_with_vcs()
# The short X.Y version.
version = gentle_thick_version.canonical_version_string()

# List of patterns, relative to source directory, that match files and
# directories to ignore when looking for source files.
exclude_patterns = []

# The name of the Pygments (syntax highlighting) style to use.
pygments_style = 'sphinx'

# -- Options for HTML output -------------------------------------------------

html_theme = 'default'

# Output file base name for HTML help builder.
htmlhelp_basename = 'GentleThickdoc'

# -- Options for manual page output ------------------------------------------

# One entry per manual page. List of tuples
# (source start file, name, description, authors, manual section).
man_pages = [
    ('index', 'gentle-thick', u'gentle-thick Documentation',
     [u'gentle-thick developers'], 1)
]
