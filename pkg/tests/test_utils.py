"""
Tests for logging, parallel map, rationals and error records
"""

import io
import json
import logging
import threading
from fractions import Fraction

import pytest

from powersum_cert.core.exceptions import (
    DomainError,
    HypothesisError,
    ParameterError,
    PolyParseError,
    SearchCancelledError,
    format_exception_for_logging,
    get_error_code,
    is_parameter_error,
)
from powersum_cert.core.rational import (
    denominator_lcm,
    format_rational,
    integer_content,
    parse_rational,
    rational_height,
    to_rational,
)
from powersum_cert.utils.logger import (
    CertLogger,
    configure_global_logger,
    get_logger,
    reset_global_logger,
)
from powersum_cert.utils.parallel import chunk_ranges, ordered_map


def _square(n):
    return n * n


def test_structured_log_lines():
    stream = io.StringIO()
    logger = CertLogger("powersum_cert.test.structured", level="DEBUG", stream=stream)
    logger.info("Certificate issued", theorem_id=1, verdict="CERTIFIED")
    line = stream.getvalue().strip()
    assert "INFO" in line
    assert line.endswith("Certificate issued | theorem_id=1 | verdict=CERTIFIED")
    assert logger.get_statistics()["log_count"] == 1


def test_json_log_lines():
    stream = io.StringIO()
    logger = CertLogger("powersum_cert.test.json", level="INFO", format_type="json", stream=stream)
    logger.warning("Lemma check failed", lemma="4", k=8)
    entry = json.loads(stream.getvalue())
    assert entry["level"] == "WARNING"
    assert entry["message"] == "Lemma check failed"
    assert entry["context"] == {"lemma": "4", "k": 8}


def test_level_filtering():
    stream = io.StringIO()
    logger = CertLogger("powersum_cert.test.level", level="WARNING", stream=stream)
    logger.debug("hidden")
    logger.log_certificate(1, 2, 1, 0, "CERTIFIED")
    assert stream.getvalue() == ""
    logger.log_certificate(1, 2, 1, 0, "HYPOTHESIS_VIOLATED")
    assert "hypothesis violated" in stream.getvalue()


def test_log_file(tmp_path):
    path = tmp_path / "cert.log"
    logger = CertLogger("powersum_cert.test.file", level="DEBUG", log_file=str(path),
                        stream=io.StringIO())
    logger.log_search_chunk(0, 0, 99, 2)
    logger.flush()
    logger.close()
    assert "solutions=2" in path.read_text()


def test_global_logger_is_shared():
    stream = io.StringIO()
    configured = configure_global_logger(level="ERROR", stream=stream)
    assert get_logger() is configured
    get_logger().error("boom", code="E003")
    assert "boom | code=E003" in stream.getvalue()


def test_library_logging_defers_to_application(capsys, caplog):
    configure_global_logger(level="DEBUG", stream=io.StringIO())
    reset_global_logger()
    package_logger = logging.getLogger("powersum_cert")
    assert package_logger.propagate
    assert all(isinstance(h, logging.NullHandler) for h in package_logger.handlers)

    logger = get_logger()
    logger.log_certificate(2, 7, 1, 1, "HYPOTHESIS_VIOLATED")
    assert capsys.readouterr().err == ""
    assert package_logger.handlers and all(
        isinstance(h, logging.NullHandler) for h in package_logger.handlers
    )

    with caplog.at_level(logging.WARNING, logger="powersum_cert"):
        logger.log_certificate(2, 7, 1, 1, "HYPOTHESIS_VIOLATED")
    assert "Certificate hypothesis violated | theorem_id=2" in caplog.text


def test_chunk_ranges():
    assert chunk_ranges(0, 10, 4) == [(0, 4), (4, 8), (8, 11)]
    assert chunk_ranges(-3, -3, 5) == [(-3, -2)]
    with pytest.raises(ParameterError):
        chunk_ranges(0, 10, 0)


def test_ordered_map_inline_and_pool():
    items = list(range(-20, 21))
    assert ordered_map(_square, items) == [n * n for n in items]
    assert ordered_map(abs, items, workers=3) == [abs(n) for n in items]
    assert ordered_map(_square, []) == []


def test_ordered_map_reports_progress():
    seen = []
    ordered_map(_square, [3, 1, 2], on_result=lambda index, item, result: seen.append((index, item, result)))
    assert seen == [(0, 3, 9), (1, 1, 1), (2, 2, 4)]


def test_ordered_map_cancellation():
    cancel = threading.Event()

    def stop_after_first(index, item, result):
        cancel.set()

    with pytest.raises(SearchCancelledError) as excinfo:
        ordered_map(_square, [1, 2, 3], cancel=cancel, on_result=stop_after_first)
    assert excinfo.value.completed_chunks == 1
    assert excinfo.value.total_chunks == 3


def test_rationals():
    assert to_rational("-3/6") == Fraction(-1, 2)
    assert to_rational(4) == Fraction(4)
    assert parse_rational(" 7 ") == 7
    assert format_rational(Fraction(-1, 2)) == "-1/2"
    assert format_rational(Fraction(6, 3)) == "2"
    assert rational_height(Fraction(-7, 3)) == 7
    assert denominator_lcm([Fraction(1, 4), Fraction(1, 6), Fraction(2)]) == 12
    assert integer_content([12, -18, 30]) == 6
    with pytest.raises(ParameterError):
        to_rational(0.5)
    with pytest.raises(ParameterError):
        to_rational(True)
    with pytest.raises(PolyParseError):
        parse_rational("1/-2")


def test_error_records():
    error = HypothesisError("needs k >= 7", lemma="5", k=6)
    assert str(error) == "[E004] needs k >= 7"
    assert get_error_code(error) == "E004"
    assert error.to_dict()["error_type"] == "HypothesisError"
    assert is_parameter_error(ParameterError("bad", parameter="a", value=0))
    assert not is_parameter_error(DomainError("zero", operation="gcd"))
    record = format_exception_for_logging(DomainError("zero", operation="gcd"))
    assert record["error_code"] == "E003"
    assert record["details"] == {"operation": "gcd"}
