import numpy as np
from setuptools import setup, Extension
from Cython.Build import cythonize

# -ffp-contract=off: the compiled scan must produce bit-identical floats to
# the NumPy fallback, so FMA contraction is disabled.
ext = Extension(
    "vocemo.gbdt._scan_cy",
    ["src/vocemo/gbdt/_scan_cy.pyx"],
    include_dirs=[np.get_include()],
    extra_compile_args=["-O3", "-ffp-contract=off"],
    define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
)

setup(ext_modules=cythonize([ext], language_level=3))
