from codecs import open  # to use a consistent encoding
from os import path
from setuptools import setup

here = path.abspath(path.dirname(__file__))

# get versions from graverlab/_version.py,
# but without importing from graverlab (which would break setup)
with open(path.join(here, "graverlab/_version.py"), encoding='utf-8') as f:
    code = compile(f.read(), "graverlab/_version.py", 'exec')
    _version = {}
    exec(code, _version)
    version = _version["__version__"]  # X.Y or X.Y.Z or X.Y.Z.dev1 etc.


with open(path.join(here, 'README.rst'), encoding='utf-8') as f:
    long_description = f.read()


# Additional requirements for development/build/release
requirements_dev = [
    "flake8",
    "sphinx",
    "sphinx-rtd-theme",
    "tox",
    "twine",
    "wheel",
]

# Additional requirements for running tests
requirements_test = [
    "hypothesis",
]


setup(
    name="django-graverlab",
    version=version,
    description='Exact Graver bases, circuits and augmentation algorithms for '
                'integer and linear programs, as a Django app with management commands',
    keywords="Django, integer programming, linear programming, Graver basis, circuits, "
             "augmentation, N-fold, steepest descent, circuit diameter",
    license="BSD License",
    packages=["graverlab", "graverlab.rules", "graverlab.management", "graverlab.management.commands"],
    zip_safe=False,
    python_requires='>=3.8',
    install_requires=["django>=3.2", "sympy>=1.12", "networkx>=2.6"],
    extras_require={
        # Development/test-only requirements (install with python -m pip -e '.[dev,test]')
        "dev": requirements_dev,
        "test": requirements_test,
    },
    entry_points={
        "console_scripts": ["graverlab=graverlab.__main__:main"],
    },
    include_package_data=True,
    tests_require=requirements_test,
    classifiers=[
        "Development Status :: 4 - Beta",
        "Programming Language :: Python",
        "Programming Language :: Python :: Implementation :: CPython",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "License :: OSI Approved :: BSD License",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Topic :: Software Development :: Libraries :: Python Modules",
        "Intended Audience :: Science/Research",
        "Framework :: Django",
        "Framework :: Django :: 3.2",
        "Framework :: Django :: 4.0",
        "Framework :: Django :: 4.1",
    ],
    long_description=long_description,
    long_description_content_type="text/x-rst",
)
