"""Build script. The compiled kernel extension is optional: when Cython or a
C compiler is unavailable the package installs pure-Python only and selects
the fallback kernels at import time.

Build in place for development:

    python setup.py build_ext --inplace
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        "src/chibound/_kernels/_ckernels.pyx",
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
