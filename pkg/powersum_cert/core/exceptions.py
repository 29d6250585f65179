#!/usr/bin/env python3
"""
Exceptions Module

Custom exception classes for powersum-cert.

Author: powersum-cert Development Team
License: Apache License 2.0
"""

from typing import Optional, Dict, Any


class PowerSumCertError(Exception):
    """
    Base exception class for powersum-cert

    Every error raised by powersum_cert carries an error code and a details dict.
    """

    def __init__(self, message: str, error_code: Optional[str] = None,
                 details: Optional[Dict[str, Any]] = None):
        """
        Initialize powersum-cert exception

        Args:
            message: Error message
            error_code: Optional error code for categorization
            details: Optional additional error details
        """
        super().__init__(message)
        self.message = message
        self.error_code = error_code or "E010"  # Unknown Error
        self.details = details or {}

    def to_dict(self) -> Dict[str, Any]:
        """error_type, error_code, message and details"""
        return {
            "error_type": self.__class__.__name__,
            "message": self.message,
            "error_code": self.error_code,
            "details": self.details
        }

    def __str__(self) -> str:
        """[Exxx] message"""
        if self.error_code:
            return f"[{self.error_code}] {self.message}"
        return self.message


class ConfigurationError(PowerSumCertError):
    """
    Invalid engine configuration file or value

    This includes invalid configuration files, unknown keys
    and out-of-range configuration values.
    """

    def __init__(self, message: str, config_file: Optional[str] = None,
                 config_key: Optional[str] = None):
        """
        Initialize configuration error

        Args:
            message: Error message
            config_file: Configuration file that caused the error
            config_key: Specific configuration key that caused the error
        """
        details = {}
        if config_file:
            details["config_file"] = config_file
        if config_key:
            details["config_key"] = config_key

        super().__init__(message, "E001", details)
        self.config_file = config_file
        self.config_key = config_key


class ParameterError(PowerSumCertError):
    """
    Exception raised for invalid mathematical parameters

    This includes non-coprime progressions, a zero leading coefficient
    on a right-hand side, exponents below 2 and malformed search boxes.
    """

    def __init__(self, message: str, parameter: Optional[str] = None,
                 value: Optional[Any] = None):
        """
        Initialize parameter error

        Args:
            message: Error message
            parameter: Name of the offending parameter
            value: Value that was rejected
        """
        details = {}
        if parameter:
            details["parameter"] = parameter
        if value is not None:
            details["value"] = str(value)

        super().__init__(message, "E002", details)
        self.parameter = parameter
        self.value = value


class DomainError(PowerSumCertError):
    """
    Exception raised when an operation is undefined for its input

    Typical cases are the gcd of two zero polynomials or the squarefree
    decomposition of the zero polynomial.
    """

    def __init__(self, message: str, operation: Optional[str] = None):
        """
        Initialize domain error

        Args:
            message: Error message
            operation: Operation that rejected the input
        """
        details = {}
        if operation:
            details["operation"] = operation

        super().__init__(message, "E003", details)
        self.operation = operation


class HypothesisError(PowerSumCertError):
    """
    Exception raised when a lemma check is requested outside its hypotheses
    """

    def __init__(self, message: str, lemma: Optional[str] = None,
                 k: Optional[int] = None):
        """
        Initialize hypothesis error

        Args:
            message: Error message
            lemma: Lemma or probe whose hypothesis failed
            k: Degree parameter that was rejected
        """
        details: Dict[str, Any] = {}
        if lemma:
            details["lemma"] = lemma
        if k is not None:
            details["k"] = k

        super().__init__(message, "E004", details)
        self.lemma = lemma
        self.k = k


class PolyParseError(PowerSumCertError):
    """
    Exception raised for text that does not follow the polynomial grammar
    """

    def __init__(self, message: str, text: Optional[str] = None,
                 position: Optional[int] = None):
        """
        Initialize parse error

        Args:
            message: Error message
            text: Input text that failed to parse
            position: Offset of the offending token
        """
        details: Dict[str, Any] = {}
        if text is not None:
            details["text"] = text
        if position is not None:
            details["position"] = position

        super().__init__(message, "E005", details)
        self.text = text
        self.position = position


class SearchCancelledError(PowerSumCertError):
    """Raised when a bounded search is cancelled at a chunk boundary"""

    def __init__(self, message: str, completed_chunks: int = 0,
                 total_chunks: int = 0):
        details = {
            "completed_chunks": completed_chunks,
            "total_chunks": total_chunks,
        }
        super().__init__(message, "E006", details)
        self.completed_chunks = completed_chunks
        self.total_chunks = total_chunks


# Errors the CLI reports as usage errors (exit code 2)
USAGE_ERRORS = (ConfigurationError, ParameterError, HypothesisError, PolyParseError)


def is_parameter_error(exception: Exception) -> bool:
    """Check if an exception should be reported as a usage error"""
    return isinstance(exception, USAGE_ERRORS)


def get_error_code(exception: Exception) -> str:
    """Error code of a package exception, E010 otherwise"""
    if isinstance(exception, PowerSumCertError):
        return exception.error_code
    return "E010"  # Unknown Error


def format_exception_for_logging(exception: Exception) -> Dict[str, Any]:
    """Logging record for any exception, package or not"""
    if isinstance(exception, PowerSumCertError):
        return exception.to_dict()

    return {
        "error_type": type(exception).__name__,
        "message": str(exception),
        "error_code": "E010",
        "details": {}
    }
