from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "powfact._core",
    sources=[
        "bindings/module.cpp",
        "src/word.cpp",
        "src/powers.cpp",
        "src/classes.cpp",
        "src/rauzy.cpp",
        "src/extremal.cpp",
        "src/search.cpp",
    ],
    include_dirs=["include"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
