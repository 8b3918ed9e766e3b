#!/usr/bin/env python3
"""
WKB Engine - Main Entry Point

This module serves as the entry point when running the package as a module:
    python -m wkb_engine

It imports and executes the CLI interface.
"""

import sys

from wkb_engine.cli import main

if __name__ == "__main__":
    sys.exit(main())
