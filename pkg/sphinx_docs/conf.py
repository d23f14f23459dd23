"""Configuration file for the Sphinx documentation builder."""

# To generate rst files: sphinx-apidoc -o ./rst ../
import os
import sys


sys.path.insert(0, os.path.abspath(".."))


# -- Project information -----------------------------------------------------

import analysis  # noqa: E402

project = "Riemannian VQE laboratory - technical documentation"
copyright = "2026, riemannian-vqe-lab contributors"
author = "riemannian-vqe-lab contributors"

# The full version, including alpha/beta/rc tags, read from the package
release = analysis.__version__
version = ".".join(release.split(".")[:2])


# -- General configuration ---------------------------------------------------

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.autosummary",
    "sphinx.ext.napoleon",
    "sphinx.ext.mathjax",
    "sphinx.ext.viewcode",
    "sphinx.ext.coverage",
]

autoclass_content = "both"
autodoc_inherit_docstrings = True
autosummary_generate = True
napoleon_google_docstring = True
html_show_sourcelink = False

exclude_patterns = ["_build", "**/*.txt"]


# -- Options for HTML output -------------------------------------------------

html_theme = "sphinx_rtd_theme"
html_title = f"riemannian-vqe-lab {release}"
html_short_title = "riemannian-vqe-lab"
