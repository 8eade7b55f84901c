from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # No Cython: the package runs on the pure-Python kernels.
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "kgoscillator._sturm",
                ["src/kgoscillator/_sturm.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
