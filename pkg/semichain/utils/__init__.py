"""
__init__.py file for utils folder
"""

from .concurrency import run_concurrently
from .errors import (
    BudgetExceeded,
    FamilyParseError,
    IndexOutOfRange,
    MissingExactValues,
    NonAssociative,
    NotAGroup,
    NotAnIdeal,
    NotClosed,
    NotDecomposable,
    NotInverse,
    SearchTooLarge,
    SemichainError,
    SizeCapExceeded,
    TableTooLarge,
    TableValidationError,
    UnsupportedFamily,
)
from .logging import (
    get_logger,
    get_verbosity,
    set_formatting,
    set_handler,
    set_propagation,
    set_verbosity,
    set_verbosity_debug,
    set_verbosity_error,
    set_verbosity_info,
    set_verbosity_warning,
    unset_formatting,
    unset_handler,
    unset_propagation,
)
from .output import OutputEnvelope, export_envelope
from .prettify_exec_info import prettify_exec_info
from .settings import resolve_config

__all__ = [
    "BudgetExceeded",
    "FamilyParseError",
    "IndexOutOfRange",
    "MissingExactValues",
    "NonAssociative",
    "NotAGroup",
    "NotAnIdeal",
    "NotClosed",
    "NotDecomposable",
    "NotInverse",
    "OutputEnvelope",
    "SearchTooLarge",
    "SemichainError",
    "SizeCapExceeded",
    "TableTooLarge",
    "TableValidationError",
    "UnsupportedFamily",
    "export_envelope",
    "get_logger",
    "get_verbosity",
    "prettify_exec_info",
    "resolve_config",
    "run_concurrently",
    "set_formatting",
    "set_handler",
    "set_propagation",
    "set_verbosity",
    "set_verbosity_debug",
    "set_verbosity_error",
    "set_verbosity_info",
    "set_verbosity_warning",
    "unset_formatting",
    "unset_handler",
    "unset_propagation",
]
