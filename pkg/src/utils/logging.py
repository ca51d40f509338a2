"""Logging for EdgeLab.

Console output goes through rich unless JSON or plain text is requested.
Experiment metadata (experiment id, seed, block) travels as record
attributes so the JSON formatter can emit it as structured fields.
"""

import functools
import json
import logging
import sys
import time
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Callable, Dict, Optional, TypeVar

from rich.console import Console
from rich.logging import RichHandler

T = TypeVar("T")

PLAIN_FORMAT = "%(asctime)s %(levelname)-8s %(name)s: %(message)s"

# Attributes every LogRecord carries; anything else came in through extra= or LogContext
_STANDARD_ATTRS = frozenset(
    vars(logging.LogRecord("", logging.INFO, "", 0, "", (), None))
) | {"message", "asctime"}

# Compiler and pool chatter
_NOISY_LOGGERS = ("numba", "joblib")


class JSONFormatter(logging.Formatter):
    """One JSON object per record, extra attributes included."""

    def format(self, record: logging.LogRecord) -> str:
        payload: Dict[str, Any] = {
            "timestamp": datetime.fromtimestamp(record.created, timezone.utc).isoformat(),
            "level": record.levelname,
            "logger": record.name,
            "message": record.getMessage(),
            "where": f"{record.module}:{record.funcName}:{record.lineno}",
        }
        payload.update(
            (key, value) for key, value in vars(record).items() if key not in _STANDARD_ATTRS
        )
        if record.exc_info:
            payload["exception"] = self.formatException(record.exc_info)
        return json.dumps(payload, default=str)


def _console_handler(json_format: bool, disable_colors: bool) -> logging.Handler:
    if json_format:
        handler: logging.Handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(JSONFormatter())
    elif disable_colors:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(PLAIN_FORMAT))
    else:
        handler = RichHandler(
            console=Console(stderr=True),
            show_path=False,
            markup=False,
            rich_tracebacks=True,
        )
    return handler


def setup_logging(
    level: Optional[str] = None,
    log_file: Optional[Path] = None,
    json_format: bool = False,
    disable_colors: bool = False,
) -> None:
    """Install handlers on the root logger, replacing any existing ones.

    Args:
        level: Level name, INFO when omitted
        log_file: Also write records to this file (parent directories are created)
        json_format: Emit JSON on the console and in the file
        disable_colors: Plain text console output instead of rich
    """
    root = logging.getLogger()
    root.setLevel(getattr(logging, (level or "INFO").upper(), logging.INFO))
    for handler in root.handlers[:]:
        root.removeHandler(handler)

    root.addHandler(_console_handler(json_format, disable_colors))

    if log_file:
        path = Path(log_file)
        path.parent.mkdir(parents=True, exist_ok=True)
        file_handler = logging.FileHandler(path, encoding="utf-8")
        file_handler.setFormatter(JSONFormatter() if json_format else logging.Formatter(PLAIN_FORMAT))
        root.addHandler(file_handler)

    for name in _NOISY_LOGGERS:
        logging.getLogger(name).setLevel(logging.WARNING)


def get_logger(name: str) -> logging.Logger:
    return logging.getLogger(name)


class LogContext:
    """Attach attributes such as ``experiment`` and ``seed`` to every record
    created inside the ``with`` block."""

    def __init__(self, **fields: Any):
        self.fields = fields
        self._previous: Optional[Callable[..., logging.LogRecord]] = None

    def __enter__(self) -> "LogContext":
        previous = logging.getLogRecordFactory()
        fields = self.fields

        def factory(*args: Any, **kwargs: Any) -> logging.LogRecord:
            record = previous(*args, **kwargs)
            record.__dict__.update(fields)
            return record

        self._previous = previous
        logging.setLogRecordFactory(factory)
        return self

    def __exit__(self, exc_type, exc_val, exc_tb) -> None:
        if self._previous is not None:
            logging.setLogRecordFactory(self._previous)
            self._previous = None


def log_execution_time(logger: logging.Logger) -> Callable[[Callable[..., T]], Callable[..., T]]:
    """Log how long the wrapped call took, at DEBUG on success and ERROR on failure.

    Example:
        @log_execution_time(logger)
        def fold(values):
            ...
    """
    def decorator(func: Callable[..., T]) -> Callable[..., T]:
        @functools.wraps(func)
        def wrapper(*args: Any, **kwargs: Any) -> T:
            start = time.perf_counter()
            fields: Dict[str, Any] = {"function_name": func.__name__}
            try:
                result = func(*args, **kwargs)
            except Exception as e:
                fields["execution_time"] = time.perf_counter() - start
                logger.error(f"{func.__name__} failed after {fields['execution_time']:.3f}s: {e}", extra=fields)
                raise
            fields["execution_time"] = time.perf_counter() - start
            logger.debug(f"{func.__name__} took {fields['execution_time']:.3f}s", extra=fields)
            return result

        return wrapper
    return decorator
