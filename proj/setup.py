"""Builds the _core extension with CMake so the wheel and the plain CMake
build share one definition of the native target."""

import os
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        source_dir = Path(__file__).parent.resolve()
        out_dir = Path(self.get_ext_fullpath(ext.name)).parent.resolve()
        build_dir = Path(self.build_temp).resolve()
        build_dir.mkdir(parents=True, exist_ok=True)

        cmake_args = [
            f"-DCMAKE_BUILD_TYPE={os.environ.get('CUTBAT_BUILD_TYPE', 'Release')}",
            f"-DPython_EXECUTABLE={sys.executable}",
            "-DCUTBAT_BUILD_TESTS=OFF",
            "-DCUTBAT_BUILD_CLI=OFF",
            "-DSKBUILD=ON",
        ]
        import pybind11

        cmake_args.append(f"-Dpybind11_DIR={pybind11.get_cmake_dir()}")

        subprocess.run(
            ["cmake", "-S", str(source_dir), "-B", str(build_dir)] + cmake_args,
            check=True,
        )
        subprocess.run(
            ["cmake", "--build", str(build_dir), "--target", "_core", "-j"],
            check=True,
        )

        built = build_dir / "python" / "cutbat"
        out_dir.mkdir(parents=True, exist_ok=True)
        for artifact in built.iterdir():
            if artifact.suffix in (".so", ".pyd") or ".so." in artifact.name:
                self.copy_file(artifact, out_dir / artifact.name)


setup(
    packages=["cutbat"],
    package_dir={"cutbat": "python/cutbat"},
    ext_modules=[CMakeExtension("cutbat._core")],
    cmdclass={"build_ext": CMakeBuild},
    zip_safe=False,
)
