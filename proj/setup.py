"""Builds the _setcodes pybind11 extension straight from the C++ sources.

The library is header-only in its dependencies (Boost.Multiprecision), so the
extension compiles the core .cpp files directly instead of linking a prebuilt
archive.
"""

from glob import glob

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "setcodes._setcodes",
    sorted(glob("src/*.cpp")) + ["bindings/pymodule.cpp"],
    include_dirs=["include", "vendor"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
