"""Build script.

The package is pure Python; if Cython is available the exponent-vector
reduction kernel is additionally compiled as ``binoidtop._ckernel``.
The import machinery in ``binoidtop._kernel`` falls back to the pure
implementation when the extension is absent, so a failed extension build
never breaks the install.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("binoidtop._ckernel", ["src/binoidtop/_ckernel.pyx"])],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
