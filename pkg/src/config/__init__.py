"""Configuration management for EdgeLab."""

from .settings import Settings, get_settings
from .loader import ConfigLoader, read_config, write_config

__all__ = ['Settings', 'get_settings', 'ConfigLoader', 'read_config', 'write_config']
