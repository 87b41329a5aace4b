"""Build script for the optional compiled kernels.

The package is pure Python plus one Cython extension holding the hot grid
loops.  The extension is a strict accelerator: if Cython or a C compiler is
missing the install falls back to the numpy implementation selected at
import time, so the build must never hard-fail on the extension.
"""

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Build the extension if possible, warn and continue otherwise."""

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
        import warnings

        warnings.warn(
            "building the compiled kernels failed (%s); "
            "falling back to the pure numpy backend" % (exc,)
        )


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension(
        "heatseries._series",
        ["src/heatseries/_series.pyx"],
        extra_compile_args=["-O3"],
    )
    return cythonize([ext], compiler_directives={"language_level": "3"})


setup(ext_modules=extensions(), cmdclass={"build_ext": optional_build_ext})
