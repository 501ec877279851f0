"""Build hook: compile the optional search kernel if Cython is available.

The package works without the extension; the solver falls back to the pure
Python kernel at import time.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("domlab._gamma_cy", ["src/domlab/_gamma_cy.pyx"])],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
