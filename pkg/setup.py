from setuptools import setup, find_packages
import codecs
import os

here = os.path.abspath(os.path.dirname(__file__))

with codecs.open(os.path.join(here, "README.md"), encoding="utf-8") as fh:
    long_description = "\n" + fh.read()

VERSION = '1.0.0'
DESCRIPTION = 'Python package which checks ZX-calculus rules semantically, with exact cyclotomic and float backends, the supplementarity to cyclotomic derivation chain and a complete Euler equality solver, classifier and enumerator'

# Setting up
setup(
    name="zx_axiom_verifier",
    version=VERSION,
    description=DESCRIPTION,
    long_description_content_type="text/markdown",
    long_description=long_description,
    packages=find_packages(exclude=['tests', 'tests.*']),
    package_data={'zx_axiom_verifier': ['rules/axioms/*.rule']},
    install_requires=['numpy', 'sympy', 'pandas', 'seaborn', 'matplotlib'],
    extras_require={'test': ['pytest', 'hypothesis']},
    entry_points={'console_scripts': ['zx-verify=zx_axiom_verifier.cli:main']},
    classifiers=[
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.9",
    ],
    python_requires='>=3.9',
)
