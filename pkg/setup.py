"""Build script: compiles the optional Cython product kernel.

The package works without the extension (a NumPy fallback is selected at
import time), so the extension is marked optional and any build failure is
non-fatal.  Set CLIFFALG_NO_EXTENSION=1 to skip compilation entirely.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("CLIFFALG_NO_EXTENSION") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "cliffalg._kernels",
                    ["src/cliffalg/_kernels.pyx"],
                    optional=True,
                )
            ],
            language_level="3",
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
