from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

if cythonize is not None:
    ext = Extension(
        "relaysim._kernels_c",
        ["src/relaysim/_kernels_c.pyx"],
        extra_compile_args=["-O3"],
    )
    # Compilation failures fall back to the pure-Python kernels at import time.
    ext.optional = True
    ext_modules = cythonize([ext], language_level=3)
else:
    ext_modules = []

setup(ext_modules=ext_modules)
