from setuptools import setup
from setuptools.extension import Extension

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    # optional=True: a failed build falls back to the pure-Python kernel
    ext_modules = cythonize(
        [
            Extension(
                "digirth._mapcore_c",
                ["src/digirth/_mapcore_c.pyx"],
                optional=True,
            )
        ],
        language_level="3",
    )

setup(ext_modules=ext_modules)
