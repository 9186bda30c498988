import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("COALITION_KIT_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("coalition_kit._fastkernel", ["src/coalition_kit/_fastkernel.pyx"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        # pure-Python fallback is selected at import time
        ext_modules = []

setup(ext_modules=ext_modules)
