from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "dplane._dplane",
    sources=[
        "bindings/py_module.cpp",
        "src/lattice.cpp",
        "src/maps.cpp",
        "src/curves.cpp",
        "src/convexity.cpp",
        "src/retract.cpp",
        "src/afpp.cpp",
        "src/fixtures.cpp",
        "src/grid_io.cpp",
        "src/svg_render.cpp",
    ],
    include_dirs=["include", "vendor"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
