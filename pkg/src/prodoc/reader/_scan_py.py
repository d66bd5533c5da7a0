"""Pure-Python scanner kernel.

scan(text) returns a list of (kind_code, start, end) triples covering every
token in the text; layout between tokens is skipped, comments are emitted as
tokens.  Errors raise ValueError((code, pos)).  The compiled kernel in
_scan_c.pyx implements the same contract; keep the two in sync.
"""

LAYOUT = " \t\r\n\f\v"
SYMBOL = "#$&*+-./:<=>?@^~\\"

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

ERR_UNTERMINATED_BLOCK_COMMENT = 1
ERR_UNTERMINATED_QUOTED = 2
ERR_BAD_CHARACTER = 3

_SOLO = {
    "(": OPEN,
    ")": CLOSE,
    "[": OPEN_LIST,
    "]": CLOSE_LIST,
    "{": OPEN_CURLY,
    "}": CLOSE_CURLY,
    ",": COMMA,
    "|": BAR,
}


def _scan_quoted(text, i, q, n):
    # i points at the opening quote; returns end offset past the closer
    j = i + 1
    while True:
        if j >= n:
            raise ValueError((ERR_UNTERMINATED_QUOTED, i))
        c = text[j]
        if c == "\\":
            j += 2
        elif c == q:
            if j + 1 < n and text[j + 1] == q:
                j += 2
            else:
                return j + 1
        elif c == "\n":
            raise ValueError((ERR_UNTERMINATED_QUOTED, i))
        else:
            j += 1


def _scan_escape(text, i, n):
    # i points at the backslash inside 0'...; returns end offset
    if i + 1 >= n:
        raise ValueError((ERR_BAD_CHARACTER, i))
    d = text[i + 1]
    if d == "x" or "0" <= d <= "7":
        j = i + 2 if d == "x" else i + 1
        while j < n and text[j] != "\\":
            j += 1
        if j >= n:
            raise ValueError((ERR_BAD_CHARACTER, i))
        return j + 1
    return i + 2


def scan(text):
    n = len(text)
    out = []
    i = 0
    while i < n:
        c = text[i]
        if c in LAYOUT:
            i += 1
            continue
        start = i
        if c == "%":
            j = text.find("\n", i)
            end = n if j < 0 else j
            out.append((COMMENT_LINE, start, end))
            i = end
        elif c == "/" and i + 1 < n and text[i + 1] == "*":
            j = text.find("*/", i + 2)
            if j < 0:
                raise ValueError((ERR_UNTERMINATED_BLOCK_COMMENT, start))
            out.append((COMMENT_BLOCK, start, j + 2))
            i = j + 2
        elif "0" <= c <= "9":
            i = _scan_number(text, i, n, out)
        elif c == "_" or c.isalpha():
            j = i + 1
            while j < n and (text[j] == "_" or text[j].isalnum()):
                j += 1
            kind = VARIABLE if (c == "_" or c.isupper()) else ATOM
            out.append((kind, start, j))
            i = j
        elif c == "'":
            j = _scan_quoted(text, i, "'", n)
            out.append((ATOM, start, j))
            i = j
        elif c == '"' or c == "`":
            j = _scan_quoted(text, i, c, n)
            out.append((STRING, start, j))
            i = j
        elif c in _SOLO:
            out.append((_SOLO[c], start, i + 1))
            i += 1
        elif c == "!" or c == ";":
            out.append((ATOM, start, i + 1))
            i += 1
        elif c == ".":
            if i + 1 >= n or text[i + 1] in LAYOUT or text[i + 1] == "%":
                out.append((END, start, i + 1))
                i += 1
            else:
                j = i + 1
                while j < n and text[j] in SYMBOL:
                    j += 1
                out.append((PUNCT, start, j))
                i = j
        elif c in SYMBOL:
            j = i + 1
            while j < n and text[j] in SYMBOL:
                j += 1
            out.append((PUNCT, start, j))
            i = j
        else:
            raise ValueError((ERR_BAD_CHARACTER, i))
    return out


def _scan_number(text, i, n, out):
    start = i
    if text[i] == "0" and i + 1 < n:
        d = text[i + 1]
        if d == "'":
            k = i + 2
            if k >= n:
                raise ValueError((ERR_BAD_CHARACTER, start))
            c = text[k]
            if c == "\\":
                end = _scan_escape(text, k, n)
            elif c == "'":
                if k + 1 < n and text[k + 1] == "'":
                    end = k + 2
                else:
                    raise ValueError((ERR_BAD_CHARACTER, start))
            else:
                end = k + 1
            out.append((INTEGER, start, end))
            return end
        if d in "xX":
            j = i + 2
            while j < n and text[j] in "0123456789abcdefABCDEF":
                j += 1
            if j == i + 2:
                raise ValueError((ERR_BAD_CHARACTER, start))
            out.append((INTEGER, start, j))
            return j
        if d in "oO":
            j = i + 2
            while j < n and "0" <= text[j] <= "7":
                j += 1
            if j == i + 2:
                raise ValueError((ERR_BAD_CHARACTER, start))
            out.append((INTEGER, start, j))
            return j
        if d in "bB":
            j = i + 2
            while j < n and text[j] in "01":
                j += 1
            if j == i + 2:
                raise ValueError((ERR_BAD_CHARACTER, start))
            out.append((INTEGER, start, j))
            return j
    j = i
    while j < n and "0" <= text[j] <= "9":
        j += 1
    if j < n and text[j] == "." and j + 1 < n and "0" <= text[j + 1] <= "9":
        j += 2
        while j < n and "0" <= text[j] <= "9":
            j += 1
        if j < n and text[j] in "eE":
            k = j + 1
            if k < n and text[k] in "+-":
                k += 1
            if k < n and "0" <= text[k] <= "9":
                j = k + 1
                while j < n and "0" <= text[j] <= "9":
                    j += 1
        out.append((FLOAT, start, j))
        return j
    out.append((INTEGER, start, j))
    return j
