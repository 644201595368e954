"""
Logging setup.

Library modules only ever call get_logger(__name__); the entry point decides
the format via configure_logging. Logs go to stderr so stdout reports stay
deterministic.
"""
import logging
import sys

from pythonjsonlogger import jsonlogger

ROOT_LOGGER = "core"
_TEXT_FORMAT = "%(asctime)s %(levelname)-7s %(name)s: %(message)s"
_JSON_FORMAT = "%(asctime)s %(levelname)s %(name)s %(message)s"


def get_logger(name: str) -> logging.Logger:
    return logging.getLogger(name)


def configure_logging(level: str = "WARNING", json_output: bool = False) -> logging.Logger:
    """Attach a single stderr handler to the package root logger."""
    logger = logging.getLogger(ROOT_LOGGER)
    for handler in list(logger.handlers):
        logger.removeHandler(handler)

    handler = logging.StreamHandler(sys.stderr)
    if json_output:
        handler.setFormatter(jsonlogger.JsonFormatter(_JSON_FORMAT))
    else:
        handler.setFormatter(logging.Formatter(_TEXT_FORMAT))
    logger.addHandler(handler)
    logger.setLevel(level.upper())
    logger.propagate = False
    return logger
