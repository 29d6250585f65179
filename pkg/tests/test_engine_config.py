"""
Tests for EngineConfig loading and validation
"""

import json
from fractions import Fraction
from pathlib import Path

import pytest

from powersum_cert.core.engine_config import EngineConfig
from powersum_cert.core.exceptions import ConfigurationError


def test_defaults_are_valid():
    config = EngineConfig()
    assert config.max_k == 64
    assert config.effective_workers == 1
    assert config.primes == [2, 3, 5, 7]
    assert Fraction(-1, 3) in config.shift_values()
    assert config.critical_values()[-1] == 2
    assert str(config) == "EngineConfig(max_k=64, workers=1)"


@pytest.mark.parametrize("overrides", [
    {"max_k": 0},
    {"chunk_size": 0},
    {"ell_max": 1},
    {"max_k": "64"},
    {"workers": 0},
    {"primes": [2, 4]},
    {"primes": []},
    {"base_shifts": ["1/0"]},
    {"critical_points": ["0.5"]},
    {"log_level": "LOUD"},
    {"log_format": "xml"},
])
def test_invalid_settings(overrides):
    with pytest.raises(ConfigurationError):
        EngineConfig(**overrides)


def test_workers_capped_by_cpu_count(mocker):
    mocker.patch("powersum_cert.core.engine_config.psutil.cpu_count", return_value=2)
    assert EngineConfig(workers=2).effective_workers == 2
    with pytest.raises(ConfigurationError) as excinfo:
        EngineConfig(workers=3)
    assert excinfo.value.error_code == "E001"


def test_yaml_file(config_file):
    config = EngineConfig.from_file(str(config_file))
    assert config.max_k == 32
    assert config.chunk_size == 16
    assert config.primes == [2, 3, 5]
    assert config.shift_values() == [Fraction(0), Fraction(1, 2), Fraction(-1)]
    assert config.log_level == "ERROR"


def test_shipped_sample_config_loads():
    sample = Path(__file__).resolve().parent.parent / "powersum-cert.yaml"
    config = EngineConfig.from_file(str(sample))
    assert config.to_dict() == EngineConfig().to_dict()


@pytest.mark.parametrize("fmt, suffix", [("yaml", ".yaml"), ("json", ".json")])
def test_save_and_reload(tmp_path, fmt, suffix):
    original = EngineConfig(max_k=40, ell_max=5, base_shifts=["0", "-2/3"])
    path = tmp_path / f"engine{suffix}"
    original.save_to_file(str(path), format=fmt)
    assert EngineConfig.from_file(str(path)).to_dict() == original.to_dict()


def test_file_errors(tmp_path):
    with pytest.raises(ConfigurationError):
        EngineConfig.from_file(str(tmp_path / "missing.yaml"))

    unknown = tmp_path / "unknown.json"
    unknown.write_text(json.dumps({"max_k": 10, "shards": 4}))
    with pytest.raises(ConfigurationError) as excinfo:
        EngineConfig.from_file(str(unknown))
    assert excinfo.value.config_key == "shards"

    text = tmp_path / "engine.txt"
    text.write_text("max_k: 10\n")
    with pytest.raises(ConfigurationError):
        EngineConfig.from_file(str(text))

    broken = tmp_path / "broken.yaml"
    broken.write_text("max_k: [1, 2\n")
    with pytest.raises(ConfigurationError):
        EngineConfig.from_file(str(broken))

    invalid = tmp_path / "invalid.yaml"
    invalid.write_text("max_k: 0\n")
    with pytest.raises(ConfigurationError) as excinfo:
        EngineConfig.from_file(str(invalid))
    assert excinfo.value.details["config_file"] == str(invalid)


def test_environment(monkeypatch):
    monkeypatch.setenv("POWERSUM_MAX_K", "24")
    monkeypatch.setenv("POWERSUM_PRIMES", "2, 3")
    monkeypatch.setenv("POWERSUM_BASE_SHIFTS", "0,1/5")
    monkeypatch.setenv("POWERSUM_LOG_FORMAT", "json")
    config = EngineConfig.from_environment()
    assert config.max_k == 24
    assert config.primes == [2, 3]
    assert config.shift_values() == [Fraction(0), Fraction(1, 5)]
    assert config.log_format == "json"


def test_environment_rejects_non_integers(monkeypatch):
    monkeypatch.setenv("POWERSUM_CHUNK_SIZE", "many")
    with pytest.raises(ConfigurationError):
        EngineConfig.from_environment()
