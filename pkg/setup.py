"""Build script: compiles the optional walk-enumeration extension.

The package is fully functional without the extension (a pure-Python
kernel is selected at import time); set ZEROSHEAR_NO_EXT=1 to skip the
Cython build entirely.
"""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("ZEROSHEAR_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/zeroshear/_walkcore.pyx"],
            language_level="3",
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
