from setuptools import Extension, setup
from Cython.Build import cythonize

extensions = [
    Extension(
        "adfactor.kernels._core",
        ["src/adfactor/kernels/_core.pyx"],
        extra_compile_args=["-O2"],
    ),
]

setup(ext_modules=cythonize(extensions, language_level=3))
