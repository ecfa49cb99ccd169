from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("lieideals._rowreduce_c", ["src/lieideals/_rowreduce_c.pyx"])],
        language_level=3,
    )
except ImportError:
    # No Cython available: install pure-Python only, the kernel selector
    # falls back to the numpy implementation at import time.
    pass

setup(ext_modules=ext_modules)
