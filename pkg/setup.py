"""Build the optional compiled elimination kernel.

If Cython or a C compiler is missing the package still installs and runs on
the pure-Python kernel.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "quiverserre.linalg._kernel",
                ["src/quiverserre/linalg/_kernel.pyx"],
                extra_compile_args=["-O2"],
            )
        ],
        compiler_directives={"language_level": "3"},
        quiet=True,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
