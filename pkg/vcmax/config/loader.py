"""
Configuration loader for vcmax.
Holds the process-wide configuration instance.
"""

from pathlib import Path
from typing import Optional

from .models import VCMaxConfig

_config: Optional[VCMaxConfig] = None


def get_config() -> VCMaxConfig:
    """Get the process-wide configuration, building it on first use"""
    global _config
    if _config is None:
        _config = VCMaxConfig.from_sources()
    return _config


def reload_config(path: Optional[Path] = None) -> VCMaxConfig:
    """Rebuild configuration from its sources"""
    global _config
    _config = VCMaxConfig.from_sources(path)
    return _config


def resolve_cap(cap: Optional[int]) -> int:
    """Explicit cap if given, else the configured enumeration cap"""
    return get_config().caps.enumeration if cap is None else cap
