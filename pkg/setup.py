"""Build script.

The compiled kernel (lctkit._speedups) is optional: if Cython or a C
compiler is missing, the install still succeeds and the package falls
back to the pure-Python kernel at import time.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/lctkit/_speedups.pyx"],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
