"""Build the optional Cython kernel.

The package works without it: ``egstat._backend`` falls back to the
pure-Python kernel when the extension is missing.
"""
import os

from setuptools import setup

ext_modules = []
if not os.environ.get("EGSTAT_NO_EXT"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [
                Extension(
                    "egstat._kernels",
                    ["src/egstat/_kernels.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={
                "language_level": "3",
                "boundscheck": False,
                "wraparound": False,
            },
        )

setup(ext_modules=ext_modules)
