"""Logfire setup and span helpers for experiment runs."""

from typing import Any, Optional

import logfire

from ..config.settings import Settings, get_settings


def setup_logfire(settings: Optional[Settings] = None) -> None:
    """
    Initialize Logfire from EdgeLab settings.

    Nothing leaves the machine unless a Logfire write token is present
    in the environment.

    Args:
        settings: Application settings. If None, loads the cached settings.
    """
    settings = settings or get_settings()

    configure_args = {
        "service_name": settings.logfire_service_name,
        "console": False,
        "send_to_logfire": "if-token-present",
    }
    if settings.logfire_project:
        configure_args["project_name"] = settings.logfire_project

    logfire.configure(**configure_args)

    logfire.info(
        "Logfire initialized",
        project=settings.logfire_project,
        service=settings.logfire_service_name,
    )


def log_experiment_result(
    experiment: str,
    experiment_id: str,
    passed: bool,
    wall_time: float,
    **kwargs: Any
) -> None:
    """
    Log the outcome of an experiment with structured data.

    Args:
        experiment: Experiment kind (counting-clt, duality, ...)
        experiment_id: Identifier of the run
        passed: Whether every acceptance check passed
        wall_time: Wall time in seconds
        **kwargs: Additional context
    """
    level = "info" if passed else "warn"
    getattr(logfire, level)(
        f"Experiment {experiment} {'passed' if passed else 'has failing checks'}",
        experiment=experiment,
        experiment_id=experiment_id,
        passed=passed,
        wall_time_ms=wall_time * 1000,
        **kwargs
    )


class ExperimentSpan:
    """Context manager for Logfire spans with automatic error handling."""

    def __init__(self, span_name: str, **attributes: Any):
        self.span_name = span_name
        self.attributes = attributes
        self.span = None

    def __enter__(self) -> "ExperimentSpan":
        self.span = logfire.span(self.span_name, **self.attributes).__enter__()
        return self

    def __exit__(self, exc_type, exc_val, exc_tb) -> bool:
        if exc_type is not None:
            logfire.error(
                f"{self.span_name} failed",
                error_type=exc_type.__name__,
                error_message=str(exc_val)
            )
        if self.span:
            self.span.__exit__(exc_type, exc_val, exc_tb)
        return False
