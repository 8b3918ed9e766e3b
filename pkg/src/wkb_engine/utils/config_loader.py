"""
Configuration loader utility
"""
import os
from pathlib import Path
from typing import Any

import yaml
from dotenv import load_dotenv
from pydantic import ValidationError

from wkb_engine.models.settings import EngineSettings

DEFAULT_CONFIG_PATH = "config/config.yaml"


def load_config(config_path: str = DEFAULT_CONFIG_PATH) -> dict[str, Any]:
    """
    Load configuration from YAML file.

    Args:
        config_path: Path to configuration file

    Returns:
        Configuration dictionary
    """
    # Load environment variables from .env file
    load_dotenv()

    config_file = Path(config_path)

    if not config_file.exists():
        raise FileNotFoundError(
            f"Configuration file not found: {config_path}\n"
            "Copy config/config.example.yaml to config/config.yaml"
        )

    with open(config_file, encoding="utf-8") as f:
        config = yaml.safe_load(f) or {}

    # Replace environment variables
    config = _replace_env_vars(config)

    return config


def load_settings(config_path: str | None = None) -> EngineSettings:
    """
    Validated settings with built-in defaults.

    A missing default config file yields the defaults; an explicitly
    requested file must exist.

    Raises:
        FileNotFoundError: If an explicit config path does not exist
        ValueError: If the configuration fails validation
    """
    if config_path is None:
        if not Path(DEFAULT_CONFIG_PATH).exists():
            return EngineSettings()
        config_path = DEFAULT_CONFIG_PATH
    config = load_config(config_path)
    try:
        return EngineSettings.model_validate(config)
    except ValidationError as e:
        raise ValueError(f"Invalid configuration in {config_path}: {e}") from e


def _replace_env_vars(obj: Any) -> Any:
    """Recursively replace ${VAR} and ${VAR:-default} with environment variables."""
    if isinstance(obj, dict):
        return {k: _replace_env_vars(v) for k, v in obj.items()}
    elif isinstance(obj, list):
        return [_replace_env_vars(item) for item in obj]
    elif isinstance(obj, str) and obj.startswith("${") and obj.endswith("}"):
        var_name, sep, default = obj[2:-1].partition(":-")
        return os.getenv(var_name, default if sep else obj)
    return obj
