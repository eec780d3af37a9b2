"""
Centralized logging for the semichain library.

All modules obtain their logger through `get_logger`, which lazily attaches a
single stderr handler to the library root logger. Verbosity, handlers,
propagation and formatting are controlled from here; the graphs switch the
level according to the `verbose` / `debug` configuration keys.
"""

import logging
import os
import sys
import threading
from functools import lru_cache
from typing import Optional

_library_name = __name__.split(".", maxsplit=1)[0]

DEFAULT_HANDLER: Optional[logging.Handler] = None
_DEFAULT_LOGGING_LEVEL = logging.WARNING

_semaphore = threading.Lock()


def _get_library_root_logger() -> logging.Logger:
    return logging.getLogger(_library_name)


def _set_library_root_logger() -> None:
    """
    Attach the default stderr handler to the library root logger, once.
    """
    global DEFAULT_HANDLER

    with _semaphore:
        if DEFAULT_HANDLER:
            return

        if sys.stderr is None:
            sys.stderr = open(os.devnull, "w", encoding="utf-8")

        DEFAULT_HANDLER = logging.StreamHandler()
        DEFAULT_HANDLER.flush = sys.stderr.flush

        root = _get_library_root_logger()
        root.addHandler(DEFAULT_HANDLER)
        root.setLevel(_DEFAULT_LOGGING_LEVEL)
        root.propagate = False


def get_logger(name: Optional[str] = None) -> logging.Logger:
    """
    Get a logger below the library root.

    Args:
        name (Optional[str]): dotted logger name; the library root when None.

    Returns:
        logging.Logger: the requested logger.
    """
    _set_library_root_logger()
    return logging.getLogger(name or _library_name)


def get_verbosity() -> int:
    """
    Returns:
        int: the effective level of the library root logger.
    """
    _set_library_root_logger()
    return _get_library_root_logger().getEffectiveLevel()


def set_verbosity(verbosity: int) -> None:
    """
    Set the level of the library root logger.

    Args:
        verbosity (int): a `logging` level such as `logging.INFO`.
    """
    _set_library_root_logger()
    _get_library_root_logger().setLevel(verbosity)


def set_verbosity_debug() -> None:
    set_verbosity(logging.DEBUG)


def set_verbosity_info() -> None:
    set_verbosity(logging.INFO)


def set_verbosity_warning() -> None:
    set_verbosity(logging.WARNING)


def set_verbosity_error() -> None:
    set_verbosity(logging.ERROR)


def set_handler(handler: logging.Handler) -> None:
    """
    Add a handler to the library root logger.
    """
    _set_library_root_logger()

    if handler is None:
        raise ValueError("handler must not be None")

    _get_library_root_logger().addHandler(handler)


def unset_handler(handler: logging.Handler) -> None:
    """
    Remove a handler from the library root logger.
    """
    _set_library_root_logger()

    if handler is None:
        raise ValueError("handler must not be None")

    _get_library_root_logger().removeHandler(handler)


def set_propagation() -> None:
    _get_library_root_logger().propagate = True


def unset_propagation() -> None:
    _get_library_root_logger().propagate = False


def set_formatting() -> None:
    """
    Use "[levelname|filename:lineno] time >> message" on every library handler.
    """
    formatter = logging.Formatter(
        "[%(levelname)s|%(filename)s:%(lineno)s] %(asctime)s >> %(message)s"
    )

    for handler in _get_library_root_logger().handlers:
        handler.setFormatter(formatter)


def unset_formatting() -> None:
    for handler in _get_library_root_logger().handlers:
        handler.setFormatter(None)


@lru_cache(None)
def warning_once(self, *args, **kwargs):
    """
    Emit a given warning only once per process.

    Bound onto `logging.Logger`, so discrepancy notes that are produced for
    every table cell do not flood stderr.
    """
    self.warning(*args, **kwargs)


logging.Logger.warning_once = warning_once
