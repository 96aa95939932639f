"""Build script; metadata lives in pyproject.toml.

The solver hot loops ship as an optional Cython extension.  When Cython (or a
C compiler) is unavailable the package still installs and runs on the pure
Python kernels, selected automatically at import time.  Set SIERPDOM_NO_EXT=1
to skip the extension build explicitly.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("SIERPDOM_NO_EXT", "") not in ("1", "true", "yes"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "sierpdom.solvers._core",
                    ["src/sierpdom/solvers/_core.pyx"],
                )
            ],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
