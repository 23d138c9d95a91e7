"""Build script: compiles the optional exact-arithmetic kernel.

The package works without the extension (a pure-Python kernel is selected
at import time); set POLYRED_PURE_BUILD=1 to skip compilation entirely.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("POLYRED_PURE_BUILD") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("polyred._kernel._core", ["src/polyred/_kernel/_core.pyx"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
