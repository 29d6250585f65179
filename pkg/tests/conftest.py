"""
Shared fixtures for the powersum-cert test suite
"""

import pytest
from click.testing import CliRunner

from powersum_cert.core.polynomial import Poly
from powersum_cert.utils.logger import reset_global_logger


@pytest.fixture
def x():
    """The polynomial x"""
    return Poly.x()


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture(autouse=True)
def library_logging():
    """CLI runs attach handlers to the package logger; hand it back afterwards"""
    yield
    reset_global_logger()


@pytest.fixture
def config_file(tmp_path):
    path = tmp_path / "powersum-cert.yaml"
    path.write_text(
        "max_k: 32\n"
        "chunk_size: 16\n"
        "ell_max: 6\n"
        "primes: [2, 3, 5]\n"
        "base_shifts: [0, 1/2, -1]\n"
        "log_level: ERROR\n"
    )
    return path
