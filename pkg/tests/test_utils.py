"""Tests for logging helpers, span helpers and the exception hierarchy."""

import json
import logging

import pytest
from rich.logging import RichHandler

from src.exceptions import (
    ConfigurationError,
    DomainError,
    EdgeLabError,
    EmptySampleError,
    IndexOutOfRangeError,
    MatchingError,
    NumericError,
    ParameterError,
    SizeError,
)
from src.utils import LogContext, get_logger, log_execution_time, setup_logging
from src.utils.logfire_setup import ExperimentSpan, log_experiment_result, setup_logfire
from src.utils.logging import JSONFormatter
from src.config import Settings


@pytest.mark.unit
class TestLogging:
    """Test logging setup and formatters."""

    @pytest.fixture(autouse=True)
    def restore_root_logger(self):
        root = logging.getLogger()
        handlers, level = root.handlers[:], root.level
        yield
        for handler in root.handlers:
            if handler not in handlers:
                handler.close()
        root.handlers[:] = handlers
        root.setLevel(level)

    def test_setup_logging_level(self):
        """The root logger gets the requested level and one console handler."""
        setup_logging(level="WARNING", disable_colors=True)
        root = logging.getLogger()
        assert root.level == logging.WARNING
        assert len(root.handlers) == 1

    def test_console_handler_kinds(self):
        """rich by default, plain text without colors, JSON on request."""
        setup_logging(level="INFO")
        assert isinstance(logging.getLogger().handlers[0], RichHandler)
        setup_logging(level="INFO", disable_colors=True)
        handler = logging.getLogger().handlers[0]
        assert not isinstance(handler, RichHandler)
        assert not isinstance(handler.formatter, JSONFormatter)
        setup_logging(level="INFO", json_format=True)
        assert isinstance(logging.getLogger().handlers[0].formatter, JSONFormatter)

    def test_setup_logging_file(self, temp_dir):
        """A log file handler writes messages."""
        log_file = temp_dir / "logs" / "edgelab.log"
        setup_logging(level="INFO", log_file=log_file, disable_colors=True)
        get_logger("edgelab.test").info("written to file")
        for handler in logging.getLogger().handlers:
            handler.flush()
        assert "written to file" in log_file.read_text()

    def test_json_formatter_extra_fields(self):
        """Extra record attributes appear in the JSON object."""
        record = logging.LogRecord("src.test", logging.INFO, __file__, 10, "block %d", (3,), None)
        record.experiment_id = "duality-abc"
        payload = json.loads(JSONFormatter().format(record))
        assert payload["message"] == "block 3"
        assert payload["level"] == "INFO"
        assert payload["experiment_id"] == "duality-abc"

    def test_log_context(self):
        """LogContext stamps attributes on records and restores the factory."""
        factory = logging.getLogRecordFactory()
        with LogContext(experiment_id="x-1", seed=4):
            record = logging.getLogRecordFactory()("n", logging.INFO, "f", 1, "m", (), None)
            assert record.experiment_id == "x-1"
            assert record.seed == 4
        assert logging.getLogRecordFactory() is factory

    def test_log_execution_time(self, caplog):
        """The decorator returns the result and logs the duration."""
        logger = get_logger("edgelab.timing")

        @log_execution_time(logger)
        def add(a, b):
            return a + b

        with caplog.at_level(logging.DEBUG, logger="edgelab.timing"):
            assert add(2, 3) == 5
        assert any("add" in message for message in caplog.messages)


@pytest.mark.unit
class TestLogfireHelpers:
    """Test span helpers against a mocked logfire."""

    def test_setup_logfire(self, mock_logfire):
        """Logfire is configured without console output."""
        setup_logfire(Settings(logfire_project="lab"))
        kwargs = mock_logfire.configure.call_args.kwargs
        assert kwargs["service_name"] == "edgelab"
        assert kwargs["project_name"] == "lab"
        assert kwargs["send_to_logfire"] == "if-token-present"

    def test_experiment_result_levels(self, mock_logfire):
        """Failing runs are logged as warnings."""
        log_experiment_result("duality", "duality-1", True, 0.5)
        mock_logfire.info.assert_called_once()
        log_experiment_result("duality", "duality-1", False, 0.5)
        mock_logfire.warn.assert_called_once()

    def test_span_logs_errors(self, mock_logfire):
        """Exceptions inside a span are logged and re-raised."""
        with pytest.raises(ValueError):
            with ExperimentSpan("experiment.test", n=4):
                raise ValueError("boom")
        mock_logfire.span.assert_called_once_with("experiment.test", n=4)
        assert mock_logfire.error.call_args.kwargs["error_type"] == "ValueError"


@pytest.mark.unit
class TestExceptions:
    """Test the exception hierarchy."""

    @pytest.mark.parametrize("error", [
        ParameterError("beta", 3),
        SizeError("principal_submatrix", 1, 2),
        IndexOutOfRangeError(0, 5),
        NumericError("non-finite"),
        DomainError("edge_variance", "s <= 1"),
        EmptySampleError("ks_distance"),
        MatchingError("rademacher", 4),
        ConfigurationError("bad file"),
    ])
    def test_base_class(self, error):
        """Every error is an EdgeLabError with a message and details."""
        assert isinstance(error, EdgeLabError)
        assert error.message
        assert isinstance(error.details, dict)

    def test_messages(self):
        """Messages carry the offending values."""
        assert "beta" in str(ParameterError("beta", 3))
        assert str(IndexOutOfRangeError(7, 5)) == "Eigenvalue index 7 outside [1, 5]"
        assert str(DomainError("edge_variance", "s <= 1")) == "edge_variance: s <= 1"
        assert MatchingError("rademacher", 4).details == {"ensemble": "rademacher", "order": 4}
        assert SizeError("interlacing", 1, 2).minimum == 2
