"""Build script.

The package is pure Python except for an optional Cython extension holding the
hot polynomial/convolution kernels.  If Cython or a C compiler is unavailable
the build silently falls back to the pure-Python kernels in
``bassunits._kernels_py``.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [Extension("bassunits._kernels_c", ["src/bassunits/_kernels_c.pyx"])],
        language_level=3,
    )
except Exception:
    pass

setup(ext_modules=ext_modules)
