"""
Translation of library errors into management command exit codes.
"""
import logging
from contextlib import contextmanager

from django.core.management.base import CommandError

from .constants import EXIT_IO, EXIT_LIMIT
from .exceptions import (
    ConfigurationError,
    GraphFormatError,
    InsufficientBasisError,
    PreconditionError,
    SizeLimitError,
    TableParseError,
)

logger = logging.getLogger(__name__)

IO_ERRORS = (TableParseError, GraphFormatError, OSError)
LIMIT_ERRORS = (InsufficientBasisError, SizeLimitError, ConfigurationError, PreconditionError)


@contextmanager
def translate_errors():
    """
    Re-raise I/O and parse errors as exit code 1, limit and basis errors as
    exit code 2.
    """
    try:
        yield
    except IO_ERRORS as exc:
        logger.warning(f"I/O error: {exc}")
        raise CommandError(str(exc), returncode=EXIT_IO)
    except LIMIT_ERRORS as exc:
        logger.warning(f"Limit error: {exc}")
        raise CommandError(str(exc), returncode=EXIT_LIMIT)
