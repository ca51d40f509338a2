"""Command-line interface for edgelab."""

from . import main
from .main import cli

__all__ = ["cli", "main"]
