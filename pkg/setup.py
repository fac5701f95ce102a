"""Build script: compiles the optional C kernel when Cython is available.

The package works without the extension (a pure-Python fallback is selected
at import time), so the extension is marked optional and any build failure
degrades to the pure install.
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
                "loreseval._kernels._speedups",
                ["src/loreseval/_kernels/_speedups.pyx"],
                optional=True,
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
