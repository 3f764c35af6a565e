from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

extension = Pybind11Extension(
    "cumbound._core",
    sources=[
        "python/bindings.cpp",
        "src/numeric.cpp",
        "src/combinatorics.cpp",
        "src/transforms.cpp",
        "src/bounds.cpp",
        "src/asymptotics.cpp",
        "src/distributions.cpp",
        "src/tail.cpp",
        "src/output.cpp",
    ],
    include_dirs=["include", "vendor"],
    cxx_std=20,
)

setup(ext_modules=[extension], cmdclass={"build_ext": build_ext})
