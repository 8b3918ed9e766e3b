"""
Logging configuration
"""
import sys
from pathlib import Path

from loguru import logger


def setup_logger(
        level: str = "WARNING",
        log_file: str | None = None,
        console: bool = True
):
    """
    Configure logger with stderr and optional file output.

    stdout carries command output only, so the console sink writes to stderr.

    Args:
        level: Log level (DEBUG, INFO, WARNING, ERROR)
        log_file: Path to a rotating log file, or None for no file
        console: Whether to log to the console

    Returns:
        Configured logger
    """
    logger.remove()

    if console:
        logger.add(
            sys.stderr,
            format="<green>{time:HH:mm:ss}</green> | "
                   "<level>{level: <8}</level> | "
                   "<cyan>{name}</cyan>:<cyan>{function}</cyan> - "
                   "<level>{message}</level>",
            level=level.upper(),
        )

    if log_file:
        Path(log_file).parent.mkdir(parents=True, exist_ok=True)
        logger.add(
            log_file,
            rotation="10 MB",
            retention="14 days",
            level="DEBUG",
            format="{time:YYYY-MM-DD HH:mm:ss} | {level: <8} | {name}:{function} - {message}",
        )

    return logger
