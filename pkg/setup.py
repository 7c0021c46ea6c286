from Cython.Build import cythonize
from setuptools import Extension, setup

extensions = [
    Extension(
        name="qblocks._ckernels",
        sources=["src/qblocks/_ckernels.pyx"],
        language="c++",
        extra_compile_args=["-O2"],
    ),
]

setup(ext_modules=cythonize(extensions, compiler_directives={"language_level": "3"}))
