#!/usr/bin/env python3
"""
Setup script for powersum-cert

Exact power sums of arithmetic progressions and finiteness certificates
"""

from setuptools import setup, find_packages
import os


# Read version from package
def get_version():
    """Get version from package __init__.py"""
    version_file = os.path.join(os.path.dirname(__file__), 'powersum_cert', '__init__.py')
    with open(version_file, 'r') as f:
        for line in f:
            if line.startswith('__version__'):
                return line.split('=')[1].strip().strip('"').strip("'")
    return "0.1.0"


# Read long description from README
def get_long_description():
    """Get long description from README.md"""
    readme_path = os.path.join(os.path.dirname(__file__), 'README.md')
    if os.path.exists(readme_path):
        with open(readme_path, 'r', encoding='utf-8') as f:
            return f.read()
    return "Exact power sums of arithmetic progressions and finiteness certificates"


# Read requirements
def get_requirements():
    """Get runtime requirements from requirements.txt"""
    req_path = os.path.join(os.path.dirname(__file__), 'requirements.txt')
    requirements = []
    if os.path.exists(req_path):
        with open(req_path, 'r') as f:
            for line in f:
                line = line.split('#')[0].strip()
                if line and not line.startswith(('pytest', 'sympy', 'black', 'flake8', 'mypy')):
                    requirements.append(line)
    return requirements


setup(
    # Basic package information
    name="powersum-cert",
    version=get_version(),
    description="Exact power sums of arithmetic progressions and finiteness certificates",
    long_description=get_long_description(),
    long_description_content_type="text/markdown",

    # Author information
    author="powersum-cert Development Team",

    # Package discovery and structure
    packages=find_packages(exclude=['tests*', 'examples*']),
    include_package_data=True,

    # Dependencies
    install_requires=get_requirements(),
    extras_require={
        'dev': [
            'pytest>=7.4.0',
            'pytest-cov>=4.1.0',
            'pytest-mock>=3.11.0',
            'sympy>=1.12',
            'black>=23.0.0',
            'flake8>=6.0.0',
            'mypy>=1.5.0',
        ],
    },

    # Entry points for command-line tools
    entry_points={
        'console_scripts': [
            'powersum-cert=powersum_cert.tools.cli:main',
        ],
    },

    # Python version requirements
    python_requires=">=3.9",

    # Package classification
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "Intended Audience :: Education",
        "Topic :: Scientific/Engineering :: Mathematics",
        "License :: OSI Approved :: Apache Software License",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
        "Programming Language :: Python :: 3.13",
        "Operating System :: OS Independent",
        "Environment :: Console",
    ],

    # Keywords for PyPI search
    keywords=[
        "bernoulli-polynomials", "euler-polynomials", "power-sums",
        "diophantine-equations", "number-theory", "exact-arithmetic",
    ],

    license="Apache License 2.0",
    zip_safe=False,
)
