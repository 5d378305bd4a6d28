"""Build script for the optional compiled coloring kernel.

The package is pure Python except for ``triplanekit._colorops_c``, a thin
Cython translation of ``triplanekit._colorops_py``.  The extension is marked
optional: if Cython or a C compiler is unavailable the install still succeeds
and the package falls back to the pure kernel at import time.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "triplanekit._colorops_c",
                ["src/triplanekit/_colorops_c.pyx"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
