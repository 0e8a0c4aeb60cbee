"""Build hook for the optional compiled kernel extension.

The package works without the extension (a pure-Python fallback is selected
at import time), so a missing Cython or C compiler must not fail the install.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # pragma: no cover - build-time only
    cythonize = None


def extensions():
    if cythonize is None:
        return []
    ext = Extension(
        "nlkg_dispersion._kernels._core",
        ["src/nlkg_dispersion/_kernels/_core.pyx"],
    )
    return cythonize([ext], compiler_directives={"language_level": "3"})


setup(ext_modules=extensions())
