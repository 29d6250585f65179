#!/usr/bin/env python3
"""
Certificate Logger Module

Logging utility for powersum-cert. Console output always goes to stderr so
that JSON written to stdout by the CLI stays a single document.

Author: powersum-cert Development Team
License: Apache License 2.0
"""

import json
import logging
import logging.handlers
import sys
import threading
import time
from datetime import datetime
from typing import Any, Dict, Optional

import colorlog

from ..core.constants import DEFAULT_LOG_FORMAT, DEFAULT_LOG_LEVEL, LOG_FORMATS, LOG_LEVELS

LOGGER_NAME = "powersum_cert"


class CertLogger:
    """
    Structured logger used across powersum-cert

    Features:
    - Structured ``key=value`` context on every call
    - Colored console output when stderr is a terminal
    - Optional rotating log file
    - Thread-safe message counting
    """

    def __init__(self,
                 name: str = LOGGER_NAME,
                 level: str = DEFAULT_LOG_LEVEL,
                 log_file: Optional[str] = None,
                 format_type: str = DEFAULT_LOG_FORMAT,
                 stream: Any = None,
                 console: bool = True):
        """
        Initialize certificate logger

        Args:
            name: Logger name
            level: Logging level
            log_file: Optional log file path
            format_type: Log format ('simple', 'structured', 'json')
            stream: Console stream, stderr by default
            console: Attach a console handler. Without console or log_file the
                package logger keeps its handlers, level and propagation
        """
        self.name = name
        self.level = level.upper() if level.upper() in LOG_LEVELS else DEFAULT_LOG_LEVEL
        self.log_file = log_file
        self.format_type = format_type if format_type in LOG_FORMATS else DEFAULT_LOG_FORMAT
        self.stream = stream if stream is not None else sys.stderr
        self.console = console

        self.logger = logging.getLogger(name)
        if console or log_file:
            self.logger.setLevel(getattr(logging, self.level))
            self.logger.propagate = False
            for handler in list(self.logger.handlers):
                self.logger.removeHandler(handler)
            self._configure_handlers()

        self.log_count = 0
        self.start_time = time.time()
        self._lock = threading.Lock()

    def _configure_handlers(self):
        """Attach console and optional file handlers"""
        if self.log_file:
            file_handler = logging.handlers.RotatingFileHandler(
                self.log_file,
                maxBytes=10 * 1024 * 1024,  # 10MB
                backupCount=3
            )
            file_handler.setFormatter(self._build_formatter(colored=False))
            self.logger.addHandler(file_handler)

        if not self.console:
            return
        console_handler = logging.StreamHandler(self.stream)
        is_tty = hasattr(self.stream, "isatty") and self.stream.isatty()
        console_handler.setFormatter(self._build_formatter(colored=is_tty))
        self.logger.addHandler(console_handler)

    def _build_formatter(self, colored: bool) -> logging.Formatter:
        if self.format_type == "json":
            return JSONFormatter()
        if self.format_type == "structured":
            return StructuredFormatter('%(asctime)s - %(name)s - %(levelname)s - %(message)s')
        if colored:
            return colorlog.ColoredFormatter(
                '%(log_color)s%(levelname)-8s%(reset)s %(message)s',
                log_colors={
                    'DEBUG': 'cyan',
                    'INFO': 'green',
                    'WARNING': 'yellow',
                    'ERROR': 'red',
                    'CRITICAL': 'bold_red',
                },
            )
        return logging.Formatter('%(levelname)s - %(message)s')

    def debug(self, message: str, **kwargs):
        """Log debug message"""
        self._log(logging.DEBUG, message, **kwargs)

    def info(self, message: str, **kwargs):
        """Log info message"""
        self._log(logging.INFO, message, **kwargs)

    def warning(self, message: str, **kwargs):
        """Log warning message"""
        self._log(logging.WARNING, message, **kwargs)

    def error(self, message: str, **kwargs):
        """Log error message"""
        self._log(logging.ERROR, message, **kwargs)

    def critical(self, message: str, **kwargs):
        """Log critical message"""
        self._log(logging.CRITICAL, message, **kwargs)

    def _log(self, level: int, message: str, **kwargs):
        if not self.logger.isEnabledFor(level):
            return
        if kwargs:
            if self.format_type == "json":
                self.logger.log(level, message, extra={"context": kwargs})
            else:
                context_str = " | ".join(f"{k}={v}" for k, v in kwargs.items())
                self.logger.log(level, f"{message} | {context_str}")
        else:
            self.logger.log(level, message)

        with self._lock:
            self.log_count += 1

    def log_certificate(self, theorem_id: int, k: int, a: int, b: int, verdict: str):
        """Log a finished finiteness certificate"""
        if verdict == "HYPOTHESIS_VIOLATED":
            self.warning("Certificate hypothesis violated",
                         theorem_id=theorem_id, k=k, a=a, b=b, verdict=verdict)
        else:
            self.debug("Certificate issued",
                       theorem_id=theorem_id, k=k, a=a, b=b, verdict=verdict)

    def log_lemma_record(self, lemma: str, k: int, verdict: str, **details):
        """Log one lemma-check record"""
        if verdict == "FAIL":
            self.warning("Lemma check failed", lemma=lemma, k=k, verdict=verdict, **details)
        else:
            self.debug("Lemma check", lemma=lemma, k=k, verdict=verdict, **details)

    def log_search_chunk(self, index: int, x_start: int, x_stop: int, found: int):
        """Log a completed search chunk"""
        self.debug("Search chunk complete",
                   chunk=index, x_start=x_start, x_stop=x_stop, solutions=found)

    def get_statistics(self) -> Dict[str, Any]:
        """Record count, level and uptime"""
        uptime = time.time() - self.start_time
        return {
            "log_count": self.log_count,
            "uptime_seconds": uptime,
            "level": self.level,
            "format": self.format_type,
        }

    def flush(self):
        """Flush all handlers"""
        for handler in self.logger.handlers:
            handler.flush()

    def close(self):
        """Close all handlers"""
        for handler in self.logger.handlers:
            handler.close()


class StructuredFormatter(logging.Formatter):
    """Appends record context as ` | key=value` pairs"""

    def format(self, record):
        formatted = super().format(record)
        if hasattr(record, 'context'):
            context_str = " | ".join(f"{k}={v}" for k, v in record.context.items())
            formatted = f"{formatted} | {context_str}"
        return formatted


class JSONFormatter(logging.Formatter):
    """One JSON object per record with context nested under a key"""

    def format(self, record):
        log_entry = {
            "timestamp": datetime.fromtimestamp(record.created).isoformat(),
            "level": record.levelname,
            "logger": record.name,
            "message": record.getMessage(),
            "module": record.module,
            "function": record.funcName,
            "line": record.lineno
        }
        if hasattr(record, 'context'):
            log_entry["context"] = record.context
        if record.exc_info:
            log_entry["exception"] = self.formatException(record.exc_info)
        return json.dumps(log_entry, default=str)


# Global logger instance
_global_logger: Optional[CertLogger] = None
_global_lock = threading.Lock()


def get_logger(name: str = LOGGER_NAME) -> CertLogger:
    """Process-wide CertLogger, created on first use"""
    global _global_logger
    with _global_lock:
        if _global_logger is None:
            _global_logger = CertLogger(name, console=False)
        return _global_logger


def configure_global_logger(level: str = DEFAULT_LOG_LEVEL,
                            log_file: Optional[str] = None,
                            format_type: str = DEFAULT_LOG_FORMAT,
                            stream: Any = None) -> CertLogger:
    """Replace the process-wide CertLogger"""
    global _global_logger
    with _global_lock:
        _global_logger = CertLogger(
            name=LOGGER_NAME,
            level=level,
            log_file=log_file,
            format_type=format_type,
            stream=stream,
        )
        return _global_logger


def reset_global_logger() -> None:
    """Drop the process-wide CertLogger and hand the package logger back to the application"""
    global _global_logger
    with _global_lock:
        if _global_logger is not None:
            _global_logger.close()
        _global_logger = None
        package_logger = logging.getLogger(LOGGER_NAME)
        for handler in list(package_logger.handlers):
            package_logger.removeHandler(handler)
        package_logger.addHandler(logging.NullHandler())
        package_logger.setLevel(logging.NOTSET)
        package_logger.propagate = True
