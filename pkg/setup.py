"""Setup script"""
from setuptools import setup, find_packages

setup(
    name="smoothrig",
    version="1.0.0",
    description="Гладкая жёсткость нулевых множеств: неравенства Ремеза, вложенные овалы и оценки производных",
    packages=find_packages(exclude=["examples", "examples.*"]),
    install_requires=[
        "python-dotenv>=1.0.0",
        "lxml>=4.9.3",
        "click>=8.1.7",
        "numpy>=1.24",
        "scipy>=1.10",
    ],
    entry_points={
        "console_scripts": [
            "smoothrig=smoothrig.cli:main",
        ],
    },
    python_requires=">=3.8",
)
