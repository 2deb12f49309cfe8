"""Build script for the compiled word-statistics core.

The package is fully functional without the extension: qdomains._kernels
falls back to the pure-Python twin when the compiled module is missing.
"""

import warnings

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Skip the extension (with a warning) when compilation fails."""

    def run(self):
        try:
            super().run()
        except Exception as exc:
            warnings.warn(f"compiled word kernels skipped: {exc}")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            warnings.warn(f"compiled word kernels skipped ({ext.name}): {exc}")


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        warnings.warn("Cython not available; using pure-Python word kernels")
        return []
    ext = Extension("qdomains._wordkit", sources=["src/qdomains/_wordkit.pyx"])
    return cythonize([ext], language_level=3)


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
