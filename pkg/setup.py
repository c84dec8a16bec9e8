"""Build script: compiles the optional Cython kernel extension.

The package works without the extension (a pure-Python fallback is selected
at import time), so any failure to cythonize or compile is non-fatal.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/steinerkit/_kernels.pyx"],
        language_level=3,
    )
except Exception as exc:  # noqa: BLE001
    print(f"skipping compiled kernels ({exc}); pure-Python backend will be used")

setup(ext_modules=ext_modules)
