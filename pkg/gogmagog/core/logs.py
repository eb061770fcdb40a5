"""
Logging setup shared by the CLI and the harness.
"""

import logging


LOG_FORMAT = "[%(asctime)s] [%(name)s] %(message)s"
DATE_FORMAT = "%H:%M:%S"


def configure_logging(level: str = "INFO") -> None:
    """Install a single stderr handler on the package logger."""
    root = logging.getLogger("gogmagog")
    root.setLevel(level.upper())
    if not any(getattr(h, "_gogmagog", False) for h in root.handlers):
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter(LOG_FORMAT, DATE_FORMAT))
        handler._gogmagog = True
        root.addHandler(handler)
