"""Build script: compiles the optional mod-p row-reduction kernel.

The package is pure Python except for superbracket._rowred_fast, a small
Cython extension accelerating dense RREF over prime fields.  If Cython or a
C compiler is unavailable the build silently skips the extension and the
package falls back to the pure-Python kernel at import time.

To build the extension in a source checkout:

    python setup.py build_ext --inplace
"""

import sys

from setuptools import setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """build_ext that degrades to the pure-Python fallback on failure."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # missing compiler, etc.
            sys.stderr.write(
                f"warning: skipping compiled kernel ({exc}); "
                "superbracket will use the pure-Python row reduction\n"
            )

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            sys.stderr.write(
                f"warning: could not build {ext.name} ({exc}); "
                "falling back to pure Python\n"
            )


def _extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        sys.stderr.write("warning: Cython not found, compiled kernel disabled\n")
        return []
    from setuptools import Extension

    ext = Extension(
        "superbracket._rowred_fast",
        sources=["src/superbracket/_rowred_fast.pyx"],
    )
    return cythonize([ext], compiler_directives={"language_level": "3"})


setup(
    ext_modules=_extensions(),
    cmdclass={"build_ext": OptionalBuildExt},
)
