"""Build script: compiles the optional Cython kernel.

The package works without the extension (a pure-Python fallback is
selected at import); the build therefore never fails hard on a missing
compiler or Cython.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/plumblat/_boxmin.pyx"], language_level=3
    )
    for ext in ext_modules:
        ext.optional = True
except ImportError:
    pass

setup(ext_modules=ext_modules)
