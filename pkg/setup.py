"""Build hook for the optional compiled kernel.

The package is pure Python apart from ``hobchar._speedups``, a small
Cython module that accelerates the induced-character folds.  If Cython
or a C compiler is unavailable the build falls back to pure Python and
``hobchar`` selects the interpreted kernels at import time.
"""

import sys

from setuptools import setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Build the speedup module if possible, warn and continue if not."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(
            f"WARNING: compiled kernel skipped ({exc}); "
            "hobchar will use the pure-Python kernels",
            file=sys.stderr,
        )


try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/hobchar/_speedups.pyx"],
        language_level="3",
    )
except ImportError:
    ext_modules = []

setup(
    ext_modules=ext_modules,
    cmdclass={"build_ext": optional_build_ext},
)
