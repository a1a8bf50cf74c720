import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    # The pure-Python kernels cover every platform the extension cannot build on.
    def run(self):
        try:
            super().run()
        except Exception as exc:
            print(f"warning: skipping compiled kernels ({exc})")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: skipping {ext.name} ({exc})")


def extensions():
    if os.environ.get("MNWORDS_NO_EXT"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension("mnwords._kernels", ["src/mnwords/_kernels.pyx"])
    return cythonize([ext], language_level=3, quiet=True)


setup(
    ext_modules=extensions(),
    cmdclass={"build_ext": optional_build_ext},
)
