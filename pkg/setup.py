"""Build script for the optional compiled kernels.

If Cython or a C compiler is unavailable the package still installs and
runs on the pure-Python kernels.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

ext_modules = []
if cythonize is not None:
    ext_modules = cythonize(
        [Extension("fracweyl._kernels", ["src/fracweyl/_kernels.pyx"])],
        language_level=3,
    )

setup(ext_modules=ext_modules)
