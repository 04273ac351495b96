from setuptools import setup
from Cython.Build import cythonize

setup(
    ext_modules=cythonize(
        ["src/ontofreight/_kernels/_speedups.pyx"],
        language_level=3,
    ),
)
