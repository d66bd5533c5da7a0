"""Token model for Prolog source text.

Tokens carry the exact source slice they were scanned from, so
concatenating token texts and the layout between them reproduces the
input byte for byte.  Comments are tokens too; nothing is dropped.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass

# Kind codes shared with the scanner kernels (ints keep the kernels free of
# package imports).  KIND_NAMES maps them to the public string names.
ATOM = 0
VARIABLE = 1
INTEGER = 2
FLOAT = 3
STRING = 4
PUNCT = 5
OPEN = 6
CLOSE = 7
OPEN_LIST = 8
CLOSE_LIST = 9
OPEN_CURLY = 10
CLOSE_CURLY = 11
COMMA = 12
BAR = 13
END = 14
COMMENT_LINE = 15
COMMENT_BLOCK = 16

KIND_NAMES = (
    "atom",
    "variable",
    "integer",
    "float",
    "string",
    "punct",
    "open",
    "close",
    "open_list",
    "close_list",
    "open_curly",
    "close_curly",
    "comma",
    "bar",
    "end",
    "comment_line",
    "comment_block",
)

# Scanner error codes (kernel raises ValueError((code, pos))).
ERR_UNTERMINATED_BLOCK_COMMENT = 1
ERR_UNTERMINATED_QUOTED = 2
ERR_BAD_CHARACTER = 3

LAYOUT_CHARS = frozenset(" \t\r\n\f\v")
SYMBOL_CHARS = frozenset("#$&*+-./:<=>?@^~\\")
SOLO_ATOMS = frozenset("!;")


@dataclass(frozen=True, slots=True)
class SourceSpan:
    """Half-open extent in the decoded source text.

    start/end are code-point offsets (0-based, end exclusive); line_start
    and line_end are 1-based.
    """

    start: int
    end: int
    line_start: int
    line_end: int

    def cover(self, other: "SourceSpan") -> "SourceSpan":
        return SourceSpan(
            min(self.start, other.start),
            max(self.end, other.end),
            min(self.line_start, other.line_start),
            max(self.line_end, other.line_end),
        )


@dataclass(frozen=True, slots=True)
class Token:
    kind: str
    text: str
    span: SourceSpan

    @property
    def start(self) -> int:
        return self.span.start

    @property
    def end(self) -> int:
        return self.span.end


class LineTable:
    """Maps offsets to 1-based line numbers."""

    def __init__(self, text: str):
        starts = [0]
        pos = text.find("\n")
        while pos != -1:
            starts.append(pos + 1)
            pos = text.find("\n", pos + 1)
        self._starts = starts

    def line_at(self, offset: int) -> int:
        return bisect_right(self._starts, offset)

    def span(self, start: int, end: int) -> SourceSpan:
        # line_end is the line holding the last character of the token
        last = max(start, end - 1)
        return SourceSpan(start, end, self.line_at(start), self.line_at(last))


_ESCAPES = {
    "a": "\a",
    "b": "\b",
    "f": "\f",
    "n": "\n",
    "r": "\r",
    "t": "\t",
    "v": "\v",
    "e": "\x1b",
    "0": "\0",
    "\\": "\\",
    "'": "'",
    '"': '"',
    "`": "`",
}

_UNESCAPES = {"\\": "\\\\", "'": "\\'", "\n": "\\n", "\t": "\\t", "\r": "\\r",
              "\a": "\\a", "\b": "\\b", "\f": "\\f", "\v": "\\v", "\0": "\\0"}


def unquote(text: str) -> str:
    """Value of a quoted token (text includes the delimiters)."""
    q = text[0]
    body = text[1:-1]
    out = []
    i = 0
    n = len(body)
    while i < n:
        c = body[i]
        if c == q and i + 1 < n and body[i + 1] == q:
            out.append(q)
            i += 2
        elif c == "\\" and i + 1 < n:
            d = body[i + 1]
            if d == "\n":  # escaped line break continues the token
                i += 2
            elif d == "x":
                j = body.index("\\", i + 2)
                out.append(chr(int(body[i + 2:j], 16)))
                i = j + 1
            elif d.isdigit():
                j = body.index("\\", i + 1)
                out.append(chr(int(body[i + 1:j], 8)))
                i = j + 1
            else:
                out.append(_ESCAPES.get(d, d))
                i += 2
        else:
            out.append(c)
            i += 1
    return "".join(out)


def char_code(text: str) -> int:
    """Value of a 0'c token."""
    body = text[2:]
    if body == "''":
        return ord("'")
    if body.startswith("\\"):
        d = body[1]
        if d == "x":
            return int(body[2:-1], 16)
        if d.isdigit():
            return int(body[1:-1], 8)
        return ord(_ESCAPES[d])
    return ord(body)


def atom_value(tok: Token) -> str:
    """Atom name carried by an atom or punct token."""
    if tok.text.startswith("'"):
        return unquote(tok.text)
    return tok.text


_PLAIN_RE = None


def atom_needs_quotes(name: str) -> bool:
    global _PLAIN_RE
    if _PLAIN_RE is None:
        import re

        _PLAIN_RE = re.compile(r"[a-z][a-zA-Z0-9_]*\Z")
    if name in ("[]", "{}", "!", ";"):
        return False
    if not name:
        return True
    if _PLAIN_RE.match(name):
        return False
    if all(c in SYMBOL_CHARS for c in name):
        # a bare "." would scan as an end token, and "/*" as a comment
        return name == "." or "/*" in name
    return True


def quote_atom(name: str) -> str:
    """Quoted-atom syntax for name (used when atom_needs_quotes)."""
    out = ["'"]
    for c in name:
        out.append(_UNESCAPES.get(c, c))
    out.append("'")
    return "".join(out)
