import glob
import subprocess

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup


def eigen_include():
    try:
        flags = subprocess.run(
            ["pkg-config", "--cflags-only-I", "eigen3"],
            capture_output=True, text=True, check=True,
        ).stdout.split()
        for flag in flags:
            if flag.startswith("-I"):
                return flag[2:]
    except (OSError, subprocess.CalledProcessError):
        pass
    return "/usr/include/eigen3"


setup(
    ext_modules=[
        Pybind11Extension(
            "pcwkit._core",
            sorted(glob.glob("src/*.cpp")) + ["python/bindings.cpp"],
            include_dirs=["include", "vendor", eigen_include()],
            cxx_std=20,
        )
    ],
    cmdclass={"build_ext": build_ext},
)
