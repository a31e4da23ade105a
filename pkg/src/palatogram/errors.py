"""Exception types shared across the package."""

from __future__ import annotations


class PalatogramError(Exception):
    """Base class for all package errors; `code` feeds the CLI diagnostics."""

    code = "error"


class DomainError(PalatogramError, ValueError):
    """A value lies outside the range an operation is defined on."""

    code = "domain"


class ConfigError(PalatogramError, ValueError):
    """A configuration document (palate, preset, animation spec) is invalid."""

    code = "config"
