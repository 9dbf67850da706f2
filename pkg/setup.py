#!/usr/bin/env python3
"""Setup para Cocycle - Ciclos, cociclos y proyecciones oblicuas en grafos orientados."""

from pathlib import Path

from setuptools import find_packages, setup

HERE = Path(__file__).parent

long_description = (HERE / "README.md").read_text(encoding="utf-8")
requirements = [
    line.strip()
    for line in (HERE / "requirements.txt").read_text(encoding="utf-8").splitlines()
    if line.strip() and not line.startswith("#")
]

setup(
    name="cocycle",
    version="1.0.0",
    author="CodeAndRes",
    description="Verificación exacta de identidades entre ciclos, cociclos, matrices de Kirchhoff-Symanzik y proyecciones oblicuas",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_packages(exclude=["examples", "examples.*"]),
    python_requires=">=3.10",
    install_requires=requirements,
    entry_points={"console_scripts": ["cocycle=cocycle.main:main"]},
    classifiers=[
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
        "License :: OSI Approved :: MIT License",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
)
