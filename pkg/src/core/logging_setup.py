"""Logging configuration for the command-line entry points."""

from __future__ import annotations

import logging
import sys

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def configure_logging(verbosity: int = 0) -> None:
    """Route package logs to stderr; 0 = warnings, 1 = info, 2+ = debug."""
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG

    root = logging.getLogger("src")
    root.setLevel(level)
    for old in [h for h in root.handlers if getattr(h, "_quadclass", False)]:
        root.removeHandler(old)
    # Always bound to the current sys.stderr
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    handler.setLevel(level)
    handler._quadclass = True  # type: ignore[attr-defined]
    root.addHandler(handler)
