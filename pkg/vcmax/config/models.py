"""
Configuration models for vcmax.
Defaults, then config.toml, then .env / environment variables.
"""

import logging
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Optional

try:
    import tomllib  # Python 3.11+
except ImportError:
    import tomli as tomllib  # Fallback for older Python

from dotenv import load_dotenv

from ..errors import InputError

logger = logging.getLogger(__name__)

REPO_ROOT = Path(__file__).parent.parent.parent
OUTPUT_FORMATS = ("json", "tsv")


def load_config_file(path: Optional[Path] = None) -> Dict[str, Any]:
    """Load the [vcmax] tables of config.toml after loading .env into the environment.

    Args:
        path: explicit TOML path; defaults to $VCMAX_CONFIG or <repo>/config.toml

    Returns:
        The contents of the ``vcmax`` table, or an empty dict.
    """
    env_path = REPO_ROOT / ".env"
    if env_path.exists():
        load_dotenv(dotenv_path=env_path, override=False)
    load_dotenv(override=False)

    if path is None:
        path = Path(os.getenv("VCMAX_CONFIG", "") or REPO_ROOT / "config.toml")
    if not path.exists():
        return {}
    try:
        with open(path, "rb") as f:
            data = tomllib.load(f)
    except (OSError, tomllib.TOMLDecodeError) as e:
        logger.warning("ignoring unreadable config file %s: %s", path, e)
        return {}
    return data.get("vcmax", {})


def _env_int(name: str, current: int) -> int:
    raw = os.getenv(name)
    if not raw:
        return current
    try:
        return int(raw)
    except ValueError:
        logger.warning("ignoring %s=%r: not an integer", name, raw)
        return current


def _positive(name: str, value: int) -> int:
    if value <= 0:
        raise InputError(f"{name} must be positive, got {value}")
    return value


@dataclass
class CapsConfig:
    """Limits for exhaustive enumeration"""
    enumeration: int = 16
    exact_geometry: int = 12
    exhaustive_witness: int = 14

    def __post_init__(self):
        self.enumeration = _positive("VCMAX_CAP", _env_int("VCMAX_CAP", self.enumeration))
        self.exact_geometry = _positive(
            "VCMAX_GEOMETRY_CAP", _env_int("VCMAX_GEOMETRY_CAP", self.exact_geometry))
        self.exhaustive_witness = _positive(
            "VCMAX_WITNESS_CAP", _env_int("VCMAX_WITNESS_CAP", self.exhaustive_witness))


@dataclass
class RunDefaults:
    """Defaults for CLI runs"""
    seed: int = 0
    output_format: str = "json"

    def __post_init__(self):
        self.seed = _env_int("VCMAX_SEED", self.seed)
        fmt = os.getenv("VCMAX_FORMAT")
        if fmt:
            self.output_format = fmt.lower()
        if self.output_format not in OUTPUT_FORMATS:
            raise InputError(f"unknown output format {self.output_format!r}")


@dataclass
class LoggingConfig:
    level: str = "INFO"
    log_file: Optional[str] = None

    def __post_init__(self):
        level = os.getenv("VCMAX_LOG_LEVEL") or os.getenv("LOG_LEVEL")
        if level:
            self.level = level
        self.level = self.level.upper()
        if os.getenv("VCMAX_LOG_FILE"):
            self.log_file = os.getenv("VCMAX_LOG_FILE")


@dataclass
class VCMaxConfig:
    """Aggregated configuration"""
    caps: CapsConfig = field(default_factory=CapsConfig)
    run: RunDefaults = field(default_factory=RunDefaults)
    logging: LoggingConfig = field(default_factory=LoggingConfig)

    @classmethod
    def from_sources(cls, path: Optional[Path] = None) -> "VCMaxConfig":
        """Build a config from config.toml, .env and the environment."""
        data = load_config_file(path)
        try:
            return cls(
                caps=CapsConfig(**data.get("caps", {})),
                run=RunDefaults(**data.get("run", {})),
                logging=LoggingConfig(**data.get("logging", {})),
            )
        except TypeError as e:
            raise InputError(f"invalid config.toml entry: {e}") from e
