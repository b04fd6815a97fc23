"""Build script: compiles the optional Cython kernel.

The package works without the extension (a pure-Python twin is selected at
import time), so a missing compiler or Cython must not break installation.
"""

from setuptools import setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Build the speedup extension, but never fail the install over it."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # noqa: BLE001 - any build failure is non-fatal
            print(f"warning: skipping compiled kernel ({exc}); using pure-Python fallback")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # noqa: BLE001
            print(f"warning: could not compile {ext.name} ({exc}); using pure-Python fallback")


try:
    from Cython.Build import cythonize

    extensions = cythonize(
        ["src/foldlie/_speedups.pyx"],
        language_level=3,
    )
except ImportError:
    extensions = []

setup(
    ext_modules=extensions,
    cmdclass={"build_ext": OptionalBuildExt},
    package_data={"foldlie": ["*.pyx"]},
)
