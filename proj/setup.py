import glob
import os

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

vendor = "vendor" if os.path.exists("vendor/json.hpp") else "/opt/vendor"

ext = Pybind11Extension(
    "_montverify",
    sorted(glob.glob("src/*.cpp")) + ["bindings/module.cpp"],
    include_dirs=["include", vendor],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
