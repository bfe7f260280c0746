#!/usr/bin/env python
# -*- coding: utf-8 -*-
import os
import sys

from setuptools import find_packages
from setuptools import setup

sys.path.append(os.path.join(os.path.dirname(__file__), "src"))

# noqa
from subfactorkit import __version__  # isort:skip  # noqa


def get_path(fname):
    return os.path.join(os.path.dirname(__file__), fname)


install_requirements = [
    "Django>=3.2,<5",
    "numpy>=1.21",
    "scipy>=1.7",
    "mpmath>=1.2",
]

test_requirements = [
    "pytest>=7",
    "pytest-django",
    "pytest-cov",
    "coverage",
    "hypothesis>=6",
]

test_lint_requirements = [
    "flake8>=3.7",
    "black>=22.3",
    "pre-commit",
]

development_requirements = test_requirements + test_lint_requirements

extras_requirements = {
    "devel": development_requirements,
    "test": test_requirements,
    "testlint": test_lint_requirements,
}

setup(
    name="subfactorkit",
    version=__version__,
    description=(
        "Finite-dimensional tools for Pimsner-Popa bases, commuting squares "
        "and relative dimension sets of subfactors."
    ),
    license="GPLv3",
    keywords=["subfactors", "commuting squares", "hadamard matrices", "von neumann algebras"],
    packages=find_packages("src"),
    package_dir={"": "src"},
    long_description=open(get_path("README.rst")).read(),
    zip_safe=False,
    python_requires=">=3.8",
    install_requires=install_requirements,
    classifiers=[
        "Development Status :: 4 - Beta",
        "License :: OSI Approved :: GNU General Public License v3 (GPLv3)",
        "Environment :: Console",
        "Framework :: Django",
        "Intended Audience :: Science/Research",
        "Operating System :: OS Independent",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3 :: Only",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: Implementation :: CPython",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    include_package_data=True,
    tests_require=test_requirements,
    extras_require=extras_requirements,
    entry_points={"console_scripts": ["subfactorkit = subfactorkit.cli:main"]},
)
