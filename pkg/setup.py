from setuptools import setup

# The compiled kernel is an optimization, not a requirement: the package
# selects hilbsym._kernel._polycore_py at import time if the extension is
# missing (or if HILBSYM_PURE_PYTHON=1).
try:
    from Cython.Build import cythonize
    from setuptools.extension import Extension

    ext_modules = cythonize(
        [
            Extension(
                "hilbsym._kernel._polycore_cy",
                ["src/hilbsym/_kernel/_polycore_cy.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level="3",
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
