"""Build hook for the optional compiled enumeration kernels.

The package is pure Python unless Cython and a C compiler are available,
in which case ffcount._speedups is built from the .pyx source.  A missing
or broken toolchain is never an install error; kernel selection happens at
import time.  Build in place with:  python setup.py build_ext --inplace
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Swallow compiler failures: the pure lane is a full implementation."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # no compiler, broken headers, ...
            print(f"skipping compiled kernels: {exc}")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"skipping {ext.name}: {exc}")


extensions = []
if not os.environ.get("FFCOUNT_PURE"):
    try:
        from Cython.Build import cythonize

        extensions = cythonize(
            [Extension("ffcount._speedups", ["src/ffcount/_speedups.pyx"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        pass

setup(ext_modules=extensions, cmdclass={"build_ext": optional_build_ext})
