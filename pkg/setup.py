#!/usr/bin/env python
# -*- coding: utf-8 -*-

import io
import os

from setuptools import find_packages, setup

NAME = "aqcoalg"
DESCRIPTION = "Exact homological invariants of unstable coalgebras"
AUTHOR = "Gertjan van den Burg"
EMAIL = "gertjanvandenburg@gmail.com"
LICENSE = "MIT"
REQUIRES_PYTHON = ">=3.6.0"

# cleo and clikit are pinned, the console config subclasses their internals
REQUIRED = [
    "cleo==0.7.6",
    "clikit==0.4.0",
    "pandas>=0.24.1",
    "regex>=2018.11",
]

docs_require = ["sphinx", "sphinx_rtd_theme", "m2r"]
test_require = ["hypothesis>=4.0"]
dev_require = ["green"]

EXTRAS = {
    "docs": docs_require,
    "tests": test_require,
    "dev": docs_require + test_require + dev_require,
}

here = os.path.abspath(os.path.dirname(__file__))

try:
    with io.open(os.path.join(here, "README.md"), encoding="utf-8") as f:
        long_description = "\n" + f.read()
except FileNotFoundError:
    long_description = DESCRIPTION

about = {}
with open(os.path.join(here, NAME, "__version__.py")) as f:
    exec(f.read(), about)

setup(
    name=NAME,
    version=about["__version__"],
    description=DESCRIPTION,
    long_description=long_description,
    long_description_content_type="text/markdown",
    author=AUTHOR,
    author_email=EMAIL,
    python_requires=REQUIRES_PYTHON,
    packages=find_packages(exclude=["tests", "tests.*", "examples*"]),
    install_requires=REQUIRED,
    extras_require=EXTRAS,
    include_package_data=True,
    license=LICENSE,
    entry_points={"console_scripts": ["aqcoalg = aqcoalg.__main__:main"]},
    classifiers=[
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.6",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
)
