"""CMake-driven extension build: compiles the C++ core and the pybind11 module
through the project's CMakeLists, then places the built library where setuptools
expects it (site-packages or, for editable installs, python/strutgeo/)."""

import shutil
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
        build_dir = Path(self.build_temp).resolve() / "cmake"
        build_dir.mkdir(parents=True, exist_ok=True)

        subprocess.run(
            [
                "cmake",
                "-S", str(source_dir),
                "-B", str(build_dir),
                "-DCMAKE_BUILD_TYPE=Release",
                f"-DPython3_EXECUTABLE={sys.executable}",
            ],
            check=True,
        )
        subprocess.run(
            ["cmake", "--build", str(build_dir), "--target", "_strutgeo"],
            check=True,
        )

        target = Path(self.get_ext_fullpath(ext.name)).resolve()
        target.parent.mkdir(parents=True, exist_ok=True)
        built = sorted((build_dir / "python" / "strutgeo").glob("_strutgeo.*"))
        if not built:
            raise RuntimeError("cmake did not produce the _strutgeo module")
        shutil.copy2(built[0], target)


setup(
    ext_modules=[CMakeExtension("strutgeo._strutgeo")],
    cmdclass={"build_ext": CMakeBuild},
)
