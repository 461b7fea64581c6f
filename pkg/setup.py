import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("FOLIATION_PURE_PYTHON") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("foliation._intpoly", ["src/foliation/_intpoly.pyx"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        # No Cython: install pure-Python only; foliation.kernels falls back.
        ext_modules = []

setup(ext_modules=ext_modules)
