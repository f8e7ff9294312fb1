import numpy as np
from Cython.Build import cythonize
from setuptools import Extension, setup

fastcore = Extension(
    "nfwpt.kernels._fastcore",
    sources=["src/nfwpt/kernels/_fastcore.pyx"],
    include_dirs=[np.get_include()],
    define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
    extra_compile_args=["-O3", "-fopenmp", "-fno-math-errno"],
    extra_link_args=["-fopenmp"],
)

setup(ext_modules=cythonize([fastcore], language_level=3))
