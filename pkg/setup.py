"""Build hook for the optional compiled census kernel.

The package is pure Python except for cubeforge._census, an int64 scan loop
used by the representation oracle when |m| is small enough for machine words.
If Cython or a C compiler is unavailable the build still succeeds and the
package falls back to the pure-Python kernel at import time.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "cubeforge._census",
                ["src/cubeforge/_census.pyx"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": 3},
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
