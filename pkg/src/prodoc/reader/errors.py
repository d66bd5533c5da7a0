"""Errors raised while scanning and reading Prolog text."""

from __future__ import annotations

from .tokens import SourceSpan


class ReaderError(Exception):
    """Base class; carries the source span the problem was found at."""

    def __init__(self, span: SourceSpan, message: str):
        super().__init__(message)
        self.span = span
        self.message = message

    def __str__(self) -> str:
        return f"{self.message} at line {self.span.line_start}"


class UnterminatedBlockComment(ReaderError):
    pass


class UnterminatedQuoted(ReaderError):
    pass


class BadCharacter(ReaderError):
    pass


class TermSyntaxError(ReaderError):
    """A token stream that does not form a valid term."""
