import sys

from setuptools import Extension, setup

# The compiled kernel is an optional speedup: without Cython or a working
# compiler the package installs pure-Python and selects the fallback at
# import. -ffp-contract=off keeps the compiled kernel bit-identical to the
# fallback (no FMA contraction).


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        print("powergeom: Cython unavailable, skipping the compiled kernel",
              file=sys.stderr)
        return []
    ext = Extension(
        "powergeom._speedups",
        ["src/powergeom/_speedups.pyx"],
        extra_compile_args=["-O2", "-ffp-contract=off"],
    )
    return cythonize([ext], language_level="3")


try:
    setup(ext_modules=extensions())
except SystemExit:
    print("powergeom: extension build failed, retrying pure-Python",
          file=sys.stderr)
    setup(ext_modules=[])
