"""
Configuration system for vcmax: enumeration caps, run defaults and logging.
"""

from .models import CapsConfig, LoggingConfig, RunDefaults, VCMaxConfig, load_config_file
from .loader import get_config, reload_config, resolve_cap

__all__ = [
    'VCMaxConfig', 'CapsConfig', 'RunDefaults', 'LoggingConfig',
    'load_config_file', 'get_config', 'reload_config', 'resolve_cap',
]
