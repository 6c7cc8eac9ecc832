# Sphinx configuration for the aqcoalg documentation.
#
# The API pages in source/ are generated with sphinx-apidoc from the package
# one directory up, so that directory has to be importable.

import os
import sys

sys.path.insert(0, os.path.abspath(".."))

from aqcoalg import __version__  # noqa: E402

project = "aqcoalg"
copyright = "2019, G.J.J. van den Burg"
author = "G.J.J. van den Burg"
version = release = __version__

master_doc = "index"

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.coverage",
    "sphinx.ext.mathjax",
    "sphinx.ext.napoleon",
]

# the docstrings are numpy style throughout
napoleon_google_docstring = False
napoleon_numpy_docstring = True
autodoc_member_order = "bysource"

templates_path = ["_templates"]
exclude_patterns = ["_build", "Thumbs.db", ".DS_Store"]

html_theme = "sphinx_rtd_theme"
html_static_path = ["_static"]
