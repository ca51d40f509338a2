"""Utility modules for EdgeLab."""

from .logging import LogContext, get_logger, log_execution_time, setup_logging

__all__ = [
    'setup_logging',
    'get_logger',
    'log_execution_time',
    'LogContext',
]
