#!/usr/bin/env python3
"""
powersum-cert Utilities Module

Logging and parallel execution helpers.

Author: powersum-cert Development Team
License: Apache License 2.0
"""

from .logger import CertLogger, get_logger, configure_global_logger, reset_global_logger
from .parallel import chunk_ranges, ordered_map

__all__ = [
    "CertLogger",
    "get_logger",
    "configure_global_logger",
    "reset_global_logger",
    "chunk_ranges",
    "ordered_map",
]
