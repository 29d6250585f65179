#!/usr/bin/env python3
"""
Engine Configuration Module

Runtime settings for powersum-cert: table sizes, search chunking, worker
count, default shift sets and logging.

Author: powersum-cert Development Team
License: Apache License 2.0
"""

import json
import os
from dataclasses import dataclass, field, fields
from fractions import Fraction
from typing import Any, Dict, List, Optional

import psutil
import yaml

from .constants import (
    DEFAULT_BASE_SHIFTS,
    DEFAULT_CHUNK_SIZE,
    DEFAULT_COPRIME_PRIMES,
    DEFAULT_CRITICAL_POINTS,
    DEFAULT_ELL_MAX,
    DEFAULT_LOG_FORMAT,
    DEFAULT_LOG_LEVEL,
    DEFAULT_MAX_K,
    DEFAULT_WORKERS,
    ENV_PREFIX,
    LOG_FORMATS,
    LOG_LEVELS,
)
from .exceptions import ConfigurationError, PolyParseError
from .rational import parse_rational


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


@dataclass
class EngineConfig:
    """
    Engine configuration for powersum-cert

    Attributes:
        max_k: Bernoulli/Euler tables are built eagerly up to this index
        chunk_size: number of x values per search chunk
        workers: process count for scans and sweeps, None means 1
        ell_max: exponent cap for searches with an unknown exponent
        primes: ell values reported in coprime multiplicity counts
        base_shifts: shift sample set for the shifted Bernoulli/Euler checks
        critical_points: q values whose critical shifts -P_k(q) are added
        log_level: logging level
        log_format: 'simple', 'structured' or 'json'
        log_file: optional rotating log file
    """

    max_k: int = DEFAULT_MAX_K
    chunk_size: int = DEFAULT_CHUNK_SIZE
    workers: Optional[int] = None
    ell_max: int = DEFAULT_ELL_MAX
    primes: List[int] = field(default_factory=lambda: list(DEFAULT_COPRIME_PRIMES))
    base_shifts: List[str] = field(default_factory=lambda: list(DEFAULT_BASE_SHIFTS))
    critical_points: List[str] = field(default_factory=lambda: list(DEFAULT_CRITICAL_POINTS))
    log_level: str = DEFAULT_LOG_LEVEL
    log_format: str = DEFAULT_LOG_FORMAT
    log_file: Optional[str] = None

    def __post_init__(self):
        """Post-initialization validation"""
        self.validate()

    def validate(self) -> None:
        """Validate configuration settings"""
        for name in ("max_k", "chunk_size", "ell_max"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise ConfigurationError(f"{name} must be an integer", config_key=name)

        if self.max_k < 1:
            raise ConfigurationError("max_k must be at least 1", config_key="max_k")
        if self.chunk_size < 1:
            raise ConfigurationError("chunk_size must be positive", config_key="chunk_size")
        if self.ell_max < 2:
            raise ConfigurationError("ell_max must be at least 2", config_key="ell_max")

        if self.workers is not None:
            if isinstance(self.workers, bool) or not isinstance(self.workers, int) or self.workers < 1:
                raise ConfigurationError("workers must be a positive integer", config_key="workers")
            available = psutil.cpu_count() or 1
            if self.workers > available:
                raise ConfigurationError(
                    f"workers={self.workers} exceeds available CPUs ({available})",
                    config_key="workers",
                )

        if not self.primes or not all(isinstance(p, int) and _is_prime(p) for p in self.primes):
            raise ConfigurationError(f"primes must be a list of primes, got {self.primes}",
                                     config_key="primes")

        for key in ("base_shifts", "critical_points"):
            try:
                [parse_rational(str(value)) for value in getattr(self, key)]
            except PolyParseError as e:
                raise ConfigurationError(f"invalid rational in {key}: {e.message}", config_key=key)

        if self.log_level.upper() not in LOG_LEVELS:
            raise ConfigurationError(f"Log level must be one of: {LOG_LEVELS}", config_key="log_level")
        if self.log_format not in LOG_FORMATS:
            raise ConfigurationError(f"Log format must be one of: {LOG_FORMATS}",
                                     config_key="log_format")

    @property
    def effective_workers(self) -> int:
        return self.workers if self.workers is not None else DEFAULT_WORKERS

    def shift_values(self) -> List[Fraction]:
        return [parse_rational(str(value)) for value in self.base_shifts]

    def critical_values(self) -> List[Fraction]:
        return [parse_rational(str(value)) for value in self.critical_points]

    @classmethod
    def from_file(cls, config_path: str) -> "EngineConfig":
        """
        Load configuration from file

        Args:
            config_path: Path to configuration file (YAML or JSON)

        Returns:
            EngineConfig instance
        """
        if not os.path.exists(config_path):
            raise ConfigurationError(f"Configuration file not found: {config_path}",
                                     config_file=config_path)

        try:
            with open(config_path, "r") as f:
                if config_path.endswith((".yaml", ".yml")):
                    data = yaml.safe_load(f)
                elif config_path.endswith(".json"):
                    data = json.load(f)
                else:
                    raise ConfigurationError("Configuration file must be YAML or JSON",
                                             config_file=config_path)
        except (yaml.YAMLError, json.JSONDecodeError) as e:
            raise ConfigurationError(f"Cannot parse configuration: {e}", config_file=config_path)

        data = data or {}
        if not isinstance(data, dict):
            raise ConfigurationError("Configuration root must be a mapping", config_file=config_path)

        known = {f.name for f in fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise ConfigurationError(f"Unknown configuration keys: {unknown}",
                                     config_file=config_path, config_key=unknown[0])

        # Rationals may be written as bare YAML numbers
        for key in ("base_shifts", "critical_points"):
            if key in data and data[key] is not None:
                data[key] = [str(value) for value in data[key]]

        try:
            return cls(**data)
        except ConfigurationError as e:
            e.config_file = config_path
            e.details["config_file"] = config_path
            raise

    @classmethod
    def from_environment(cls) -> "EngineConfig":
        """
        Load configuration from POWERSUM_* environment variables

        Returns:
            EngineConfig instance with environment-based settings
        """
        config_data: Dict[str, Any] = {}

        int_keys = ["max_k", "chunk_size", "workers", "ell_max"]
        str_keys = ["log_level", "log_format", "log_file"]
        list_keys = ["primes", "base_shifts", "critical_points"]

        for key in int_keys + str_keys + list_keys:
            value = os.environ.get(f"{ENV_PREFIX}{key.upper()}")
            if value is None:
                continue
            if key in int_keys:
                try:
                    config_data[key] = int(value)
                except ValueError:
                    raise ConfigurationError(f"{ENV_PREFIX}{key.upper()} must be an integer",
                                             config_key=key)
            elif key == "primes":
                try:
                    config_data[key] = [int(x.strip()) for x in value.split(",") if x.strip()]
                except ValueError:
                    raise ConfigurationError(f"{ENV_PREFIX}PRIMES must be integers", config_key=key)
            elif key in list_keys:
                config_data[key] = [x.strip() for x in value.split(",") if x.strip()]
            else:
                config_data[key] = value

        return cls(**config_data)

    def to_dict(self) -> Dict[str, Any]:
        """Convert configuration to dictionary"""
        return {
            "max_k": self.max_k,
            "chunk_size": self.chunk_size,
            "workers": self.workers,
            "ell_max": self.ell_max,
            "primes": list(self.primes),
            "base_shifts": list(self.base_shifts),
            "critical_points": list(self.critical_points),
            "log_level": self.log_level,
            "log_format": self.log_format,
            "log_file": self.log_file,
        }

    def save_to_file(self, config_path: str, format: str = "yaml") -> None:
        """
        Save configuration to file

        Args:
            config_path: Path to save configuration
            format: File format ('yaml' or 'json')
        """
        data = self.to_dict()

        if format.lower() not in ("yaml", "json"):
            raise ConfigurationError("Format must be 'yaml' or 'json'", config_file=config_path)

        with open(config_path, "w") as f:
            if format.lower() == "yaml":
                yaml.dump(data, f, default_flow_style=False, indent=2)
            else:
                json.dump(data, f, indent=2)

    def __str__(self) -> str:
        return f"EngineConfig(max_k={self.max_k}, workers={self.effective_workers})"
