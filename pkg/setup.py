import os

from setuptools import Extension, setup

# The sparse-rank kernel is an optional speedup: if Cython or a C compiler
# is unavailable (or QHSERIES_PURE is set), the package installs without it
# and falls back to the pure-Python elimination at import time.
ext_modules = []
if not os.environ.get("QHSERIES_PURE"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "qhseries._rankcore",
                    ["src/qhseries/_rankcore.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            language_level=3,
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
