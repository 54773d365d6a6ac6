import logging

from rich.console import Console
from rich.logging import RichHandler

LOGGER_NAME = "qkschur"


def get_logger(logger_name: str) -> logging.Logger:
    # A rich handler on a named logger, never the root one. Stdout stays for results.
    rich_handler = RichHandler(
        console=Console(stderr=True),
        show_time=False,
        rich_tracebacks=False,
        show_path=False,
        tracebacks_show_locals=False,
    )
    rich_handler.setFormatter(logging.Formatter(fmt="%(message)s", datefmt="[%X]"))

    _logger = logging.getLogger(logger_name)
    if not _logger.handlers:
        _logger.addHandler(rich_handler)
    _logger.setLevel(logging.INFO)
    _logger.propagate = False
    return _logger


logger: logging.Logger = get_logger(LOGGER_NAME)


def log_debug(msg, *args, **kwargs):
    logger.debug(msg, *args, **kwargs)


def log_info(msg, *args, **kwargs):
    logger.info(msg, *args, **kwargs)


def log_warning(msg, *args, **kwargs):
    logger.warning(msg, *args, **kwargs)


def set_log_level_to_debug():
    logger.setLevel(logging.DEBUG)


def set_log_level(level: str):
    logger.setLevel(getattr(logging, level.upper(), logging.INFO))
