"""Build script: compiles the exact linear-algebra kernels when Cython
and a C toolchain are available; the package falls back to the pure
Python kernels at import time if the extension is missing."""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/matlislab/_kernels.pyx"],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
