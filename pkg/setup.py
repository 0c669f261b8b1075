"""Setuptools installer for python-metricgap."""

from os.path import (
    dirname,
    join,
)

from setuptools import (
    find_packages,
    setup,
)


# The directory in which setup.py lives.
here = dirname(__file__)


def read(filename):
    """Return the whitespace-stripped content of `filename`."""
    path = join(here, filename)
    with open(path, "r") as fin:
        return fin.read().strip()


setup(
    name="python-metricgap",
    author="metricgap developers",
    version="0.1.0",
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "Programming Language :: Python :: 3 :: Only",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    packages=find_packages(
        include={"metricgap", "metricgap.*"},
        exclude={"*.tests", "*.testing"},
    ),
    python_requires=">= 3.8",
    install_requires=[
        "argcomplete >= 1.0",
        "colorclass >= 1.2.0",
        "numpy >= 1.17",
        "PyYAML >= 3.11",
        "terminaltables >= 2.1.0",
    ],
    test_suite="metricgap",
    tests_require=[
        "fixtures >= 1.0.0",
        "networkx >= 2.4",
        "setuptools",
        "testscenarios",
        "testtools",
    ],
    description="Exact spectral gaps of graphs mapped into graph metrics.",
    long_description=read("README"),
    long_description_content_type="text/markdown",
    entry_points={
        "console_scripts": {
            "metricgap = metricgap.flesh:main",
        },
    },
)
