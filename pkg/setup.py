"""Build script for the optional compiled search kernels.

The package is fully functional without the extension (a pure-Python
implementation of the same kernels is selected at import time), so the
extension is marked optional: a failed compile degrades to the fallback
instead of breaking the install.
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
                "groupgraphs._kernels",
                ["src/groupgraphs/_kernels.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
