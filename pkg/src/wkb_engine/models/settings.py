"""
Settings Model

Validated view of the YAML configuration.
"""

from typing import Literal

from pydantic import BaseModel, Field


class EngineSection(BaseModel):
    """Defaults for computations."""

    depth: int = Field(6, ge=0)
    output: Literal["json", "text"] = "text"
    workers: int = Field(4, ge=1)


class LoggingSection(BaseModel):
    """Log level and optional rotating log file."""

    level: str = "WARNING"
    file: str | None = None


class EngineSettings(BaseModel):
    """Top-level configuration document."""

    engine: EngineSection = Field(default_factory=EngineSection)
    logging: LoggingSection = Field(default_factory=LoggingSection)
