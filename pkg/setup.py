"""Build script for the optional compiled core.

The package is pure Python except for legchi._core, a small Cython module
holding the hot summation loops. If the extension cannot be built the
package still works: legchi._backend falls back to the NumPy implementation
at import time.
"""
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "legchi._core",
                ["src/legchi/_core.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
