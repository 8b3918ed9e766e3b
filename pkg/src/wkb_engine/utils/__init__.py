"""
Utils Module

Configuration loading, logger setup and command-line operand helpers.
"""

from wkb_engine.utils.config_loader import load_config, load_settings
from wkb_engine.utils.helpers import infer_dim, is_file_operand, load_operand, operand_dim
from wkb_engine.utils.logger import setup_logger

__all__ = [
    "load_config",
    "load_settings",
    "setup_logger",
    "load_operand",
    "infer_dim",
    "operand_dim",
    "is_file_operand",
]
