from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # Pure-Python fallback in lensframe._sweeps_py keeps the package fully
    # functional without the extension.
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "lensframe._sweeps_cy",
                ["src/lensframe/_sweeps_cy.pyx"],
                extra_compile_args=["-O2"],
                optional=True,
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
