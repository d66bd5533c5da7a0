"""Build script: compiles the scanner kernel when Cython is available.

The package works without the extension; prodoc.reader.tokenizer falls back
to the pure-Python scanner.  Set PRODOC_PURE=1 to skip the extension build.
"""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("PRODOC_PURE") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("prodoc.reader._scan_c", ["src/prodoc/reader/_scan_c.pyx"])],
            language_level="3",
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
