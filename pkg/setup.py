"""Build script: compiles the optional Cython solver kernel.

If Cython or a C compiler is unavailable the install still succeeds;
slowcolor falls back to the pure-Python kernel at import time.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("slowcolor._kernel_c", ["src/slowcolor/_kernel_c.pyx"])],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
