from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

if cythonize is not None:
    extensions = cythonize(
        [Extension("qwtrain._kernels", ["src/qwtrain/_kernels.pyx"])],
        compiler_directives={"language_level": "3"},
    )
else:
    # No Cython available: install the pure-Python package; the numpy
    # fallback kernels are selected automatically at import time.
    extensions = []

setup(ext_modules=extensions)
