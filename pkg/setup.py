from setuptools import find_packages, setup

config = {
    "version": "0.1.0",
    "name": "bezout-subres",
    "description": "Bézout-type subresultants for several univariate polynomials",
    "author": "bezout-subres developers",
    "install_requires": [
        "click==7.1.2",
        "pybase62==0.4.3",
        "srsly==2.4.2",
    ],
    "python_requires": ">=3.7",
    "packages": find_packages(exclude=["tests", "integration_tests"]),
    "scripts": ["bezout-subres"],
}

setup(**config)
