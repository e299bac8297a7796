"""Build script.

The exact-arithmetic hot kernels live in quiverbelt/_kernels_c.pyx.  When
Cython and a C compiler are available the extension is compiled; otherwise
the package silently falls back to the pure-Python kernels selected at
import time in quiverbelt.kernels.  Set QUIVERBELT_NO_EXT=1 to skip the
extension build entirely.
"""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("QUIVERBELT_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/quiverbelt/_kernels_c.pyx"], language_level="3"
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
