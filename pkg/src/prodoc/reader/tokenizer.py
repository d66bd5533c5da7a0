"""Tokenizer: scanner kernel selection plus the Token-building wrapper.

The compiled kernel is preferred; the pure-Python twin is the fallback so
the package works from a plain source checkout.
"""

from __future__ import annotations

from . import _scan_py
from .errors import BadCharacter, UnterminatedBlockComment, UnterminatedQuoted
from .tokens import (
    ERR_BAD_CHARACTER,
    ERR_UNTERMINATED_BLOCK_COMMENT,
    ERR_UNTERMINATED_QUOTED,
    KIND_NAMES,
    LineTable,
    Token,
)

try:
    from . import _scan_c as _kernel

    TOKENIZER_BACKEND = "compiled"
except ImportError:  # pragma: no cover - depends on the build
    _kernel = _scan_py
    TOKENIZER_BACKEND = "pure"

_ERROR_CLASSES = {
    ERR_UNTERMINATED_BLOCK_COMMENT: (UnterminatedBlockComment, "unterminated block comment", 2),
    ERR_UNTERMINATED_QUOTED: (UnterminatedQuoted, "unterminated quoted token", 1),
    ERR_BAD_CHARACTER: (BadCharacter, "cannot start a token", 1),
}


def tokenize(text: str, *, scan=None) -> list[Token]:
    """Tokens of text, in source order, comments included.

    Token texts are exact slices of text; the regions between consecutive
    tokens contain only layout characters.  Callers decode files with
    utf-8-sig so no byte-order mark reaches the scanner.
    """
    if scan is None:
        scan = _kernel.scan
    lines = LineTable(text)
    try:
        raw = scan(text)
    except ValueError as exc:
        code, pos = exc.args[0]
        cls, message, width = _ERROR_CLASSES[code]
        raise cls(lines.span(pos, min(pos + width, len(text))), message) from None
    return [Token(KIND_NAMES[kind], text[start:end], lines.span(start, end))
            for kind, start, end in raw]
