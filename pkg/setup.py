"""Build script: compiles the optional Cython kernel core.

The package works without the extension (pure-Python kernels are selected at
import time), so a missing compiler or QTURAN_NO_EXT=1 just skips the build.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("QTURAN_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("qturan._kernels._speed", ["src/qturan/_kernels/_speed.pyx"])],
            language_level="3",
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
