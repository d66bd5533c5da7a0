# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled scanner kernel; same contract as _scan_py.scan.

Keep the logic in sync with _scan_py; the test suite runs the token and
reader properties against both backends.
"""

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

DEF K_ATOM = 0
DEF K_VARIABLE = 1
DEF K_INTEGER = 2
DEF K_FLOAT = 3
DEF K_STRING = 4
DEF K_PUNCT = 5
DEF K_OPEN = 6
DEF K_CLOSE = 7
DEF K_OPEN_LIST = 8
DEF K_CLOSE_LIST = 9
DEF K_OPEN_CURLY = 10
DEF K_CLOSE_CURLY = 11
DEF K_COMMA = 12
DEF K_BAR = 13
DEF K_END = 14
DEF K_COMMENT_LINE = 15
DEF K_COMMENT_BLOCK = 16

DEF E_BLOCK = 1
DEF E_QUOTED = 2
DEF E_CHAR = 3


cdef inline bint _is_layout(Py_UCS4 c):
    return c == u' ' or c == u'\t' or c == u'\r' or c == u'\n' or c == u'\f' or c == u'\v'


cdef inline bint _is_symbol(Py_UCS4 c):
    return (c == u'#' or c == u'$' or c == u'&' or c == u'*' or c == u'+' or
            c == u'-' or c == u'.' or c == u'/' or c == u':' or c == u'<' or
            c == u'=' or c == u'>' or c == u'?' or c == u'@' or c == u'^' or
            c == u'~' or c == u'\\')


cdef inline bint _is_digit(Py_UCS4 c):
    return u'0' <= c <= u'9'


cdef inline bint _is_hex(Py_UCS4 c):
    return _is_digit(c) or (u'a' <= c <= u'f') or (u'A' <= c <= u'F')


cdef Py_ssize_t _scan_quoted(str text, Py_ssize_t i, Py_UCS4 q, Py_ssize_t n) except -1:
    cdef Py_ssize_t j = i + 1
    cdef Py_UCS4 c
    while True:
        if j >= n:
            raise ValueError((E_QUOTED, i))
        c = text[j]
        if c == u'\\':
            j += 2
        elif c == q:
            if j + 1 < n and <Py_UCS4>text[j + 1] == q:
                j += 2
            else:
                return j + 1
        elif c == u'\n':
            raise ValueError((E_QUOTED, i))
        else:
            j += 1


cdef Py_ssize_t _scan_escape(str text, Py_ssize_t i, Py_ssize_t n) except -1:
    cdef Py_UCS4 d
    cdef Py_ssize_t j
    if i + 1 >= n:
        raise ValueError((E_CHAR, i))
    d = text[i + 1]
    if d == u'x' or (u'0' <= d <= u'7'):
        j = i + 2 if d == u'x' else i + 1
        while j < n and <Py_UCS4>text[j] != u'\\':
            j += 1
        if j >= n:
            raise ValueError((E_CHAR, i))
        return j + 1
    return i + 2


cdef Py_ssize_t _scan_number(str text, Py_ssize_t i, Py_ssize_t n, list out) except -1:
    cdef Py_ssize_t start = i
    cdef Py_ssize_t j, k, end
    cdef Py_UCS4 c, d
    if <Py_UCS4>text[i] == u'0' and i + 1 < n:
        d = text[i + 1]
        if d == u"'":
            k = i + 2
            if k >= n:
                raise ValueError((E_CHAR, start))
            c = text[k]
            if c == u'\\':
                end = _scan_escape(text, k, n)
            elif c == u"'":
                if k + 1 < n and <Py_UCS4>text[k + 1] == u"'":
                    end = k + 2
                else:
                    raise ValueError((E_CHAR, start))
            else:
                end = k + 1
            out.append((K_INTEGER, start, end))
            return end
        if d == u'x' or d == u'X':
            j = i + 2
            while j < n and _is_hex(text[j]):
                j += 1
            if j == i + 2:
                raise ValueError((E_CHAR, start))
            out.append((K_INTEGER, start, j))
            return j
        if d == u'o' or d == u'O':
            j = i + 2
            while j < n and u'0' <= <Py_UCS4>text[j] <= u'7':
                j += 1
            if j == i + 2:
                raise ValueError((E_CHAR, start))
            out.append((K_INTEGER, start, j))
            return j
        if d == u'b' or d == u'B':
            j = i + 2
            while j < n and (<Py_UCS4>text[j] == u'0' or <Py_UCS4>text[j] == u'1'):
                j += 1
            if j == i + 2:
                raise ValueError((E_CHAR, start))
            out.append((K_INTEGER, start, j))
            return j
    j = i
    while j < n and _is_digit(text[j]):
        j += 1
    if j < n and <Py_UCS4>text[j] == u'.' and j + 1 < n and _is_digit(text[j + 1]):
        j += 2
        while j < n and _is_digit(text[j]):
            j += 1
        if j < n and (<Py_UCS4>text[j] == u'e' or <Py_UCS4>text[j] == u'E'):
            k = j + 1
            if k < n and (<Py_UCS4>text[k] == u'+' or <Py_UCS4>text[k] == u'-'):
                k += 1
            if k < n and _is_digit(text[k]):
                j = k + 1
                while j < n and _is_digit(text[j]):
                    j += 1
        out.append((K_FLOAT, start, j))
        return j
    out.append((K_INTEGER, start, j))
    return j


def scan(str text):
    cdef Py_ssize_t n = len(text)
    cdef list out = []
    cdef Py_ssize_t i = 0
    cdef Py_ssize_t start, j, end
    cdef Py_UCS4 c
    while i < n:
        c = text[i]
        if _is_layout(c):
            i += 1
            continue
        start = i
        if c == u'%':
            j = text.find('\n', i)
            end = n if j < 0 else j
            out.append((K_COMMENT_LINE, start, end))
            i = end
        elif c == u'/' and i + 1 < n and <Py_UCS4>text[i + 1] == u'*':
            j = text.find('*/', i + 2)
            if j < 0:
                raise ValueError((E_BLOCK, start))
            out.append((K_COMMENT_BLOCK, start, j + 2))
            i = j + 2
        elif _is_digit(c):
            i = _scan_number(text, i, n, out)
        elif c == u'_' or c.isalpha():
            j = i + 1
            while j < n and (<Py_UCS4>text[j] == u'_' or (<Py_UCS4>text[j]).isalnum()):
                j += 1
            out.append((K_VARIABLE if (c == u'_' or c.isupper()) else K_ATOM, start, j))
            i = j
        elif c == u"'":
            j = _scan_quoted(text, i, c, n)
            out.append((K_ATOM, start, j))
            i = j
        elif c == u'"' or c == u'`':
            j = _scan_quoted(text, i, c, n)
            out.append((K_STRING, start, j))
            i = j
        elif c == u'(':
            out.append((K_OPEN, start, i + 1))
            i += 1
        elif c == u')':
            out.append((K_CLOSE, start, i + 1))
            i += 1
        elif c == u'[':
            out.append((K_OPEN_LIST, start, i + 1))
            i += 1
        elif c == u']':
            out.append((K_CLOSE_LIST, start, i + 1))
            i += 1
        elif c == u'{':
            out.append((K_OPEN_CURLY, start, i + 1))
            i += 1
        elif c == u'}':
            out.append((K_CLOSE_CURLY, start, i + 1))
            i += 1
        elif c == u',':
            out.append((K_COMMA, start, i + 1))
            i += 1
        elif c == u'|':
            out.append((K_BAR, start, i + 1))
            i += 1
        elif c == u'!' or c == u';':
            out.append((K_ATOM, start, i + 1))
            i += 1
        elif c == u'.':
            if i + 1 >= n or _is_layout(text[i + 1]) or <Py_UCS4>text[i + 1] == u'%':
                out.append((K_END, start, i + 1))
                i += 1
            else:
                j = i + 1
                while j < n and _is_symbol(text[j]):
                    j += 1
                out.append((K_PUNCT, start, j))
                i = j
        elif _is_symbol(c):
            j = i + 1
            while j < n and _is_symbol(text[j]):
                j += 1
            out.append((K_PUNCT, start, j))
            i = j
        else:
            raise ValueError((E_CHAR, i))
    return out
