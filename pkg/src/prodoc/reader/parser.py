"""Operator-precedence term reader.

read_term consumes one clause up to its end token.  read_source reads a
whole file, recovering from syntax errors by skipping to the next end
token, and attaches every comment to exactly one clause unit.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ReaderError, TermSyntaxError
from .operators import OperatorTable, default_operator_table
from .terms import Atom, Compound, Float, Integer, String, Term, Var
from .tokenizer import tokenize
from .tokens import SourceSpan, Token, atom_value, char_code, unquote

_OPERAND_KINDS = frozenset(
    ("atom", "punct", "variable", "integer", "float", "string",
     "open", "open_list", "open_curly")
)


class _Cursor:
    """Walks the token list; comments pass through into a sink."""

    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0
        self.comments: list[Token] = []

    def _skip_comments(self) -> None:
        toks = self.tokens
        while self.pos < len(toks) and toks[self.pos].kind in ("comment_line", "comment_block"):
            self.comments.append(toks[self.pos])
            self.pos += 1

    def peek(self) -> Token | None:
        self._skip_comments()
        if self.pos < len(self.tokens):
            return self.tokens[self.pos]
        return None

    def peek2(self) -> Token | None:
        """Significant token after the current one (comments skipped, not consumed)."""
        self._skip_comments()
        i = self.pos + 1
        toks = self.tokens
        while i < len(toks) and toks[i].kind in ("comment_line", "comment_block"):
            i += 1
        return toks[i] if i < len(toks) else None

    def next(self) -> Token | None:
        tok = self.peek()
        if tok is not None:
            self.pos += 1
        return tok

    def mark(self) -> tuple[int, int]:
        return self.pos, len(self.comments)

    def restore(self, mark: tuple[int, int]) -> None:
        self.pos, ncomments = mark
        del self.comments[ncomments:]

    def at_eof(self) -> bool:
        return self.peek() is None

    def eof_span(self) -> SourceSpan:
        if self.tokens:
            s = self.tokens[-1].span
            return SourceSpan(s.end, s.end, s.line_end, s.line_end)
        return SourceSpan(0, 0, 1, 1)


class _Parser:
    def __init__(self, cursor: _Cursor, ops: OperatorTable):
        self.cur = cursor
        self.ops = ops

    def error(self, message: str, tok: Token | None = None) -> TermSyntaxError:
        span = tok.span if tok is not None else self.cur.eof_span()
        return TermSyntaxError(span, message)

    def expect(self, kind: str, what: str) -> Token:
        tok = self.cur.next()
        if tok is None or tok.kind != kind:
            raise self.error(f"expected {what}", tok)
        return tok

    # -- entry -------------------------------------------------------

    def parse(self, maxp: int) -> tuple[Term, int]:
        left, lp = self.parse_operand(maxp)
        return self.parse_infix_loop(left, lp, maxp)

    def parse_infix_loop(self, left: Term, lp: int, maxp: int) -> tuple[Term, int]:
        ops = self.ops
        while True:
            tok = self.cur.peek()
            if tok is None:
                return left, lp
            kind = tok.kind
            if kind == "comma":
                name = ","
                infix = ops.infix(",")
                postfix = None
            elif kind == "bar":
                # an infix bar reads as a disjunction
                name = ";"
                infix = ops.infix("|")
                postfix = None
            elif kind in ("atom", "punct"):
                name = atom_value(tok)
                infix = ops.infix(name)
                postfix = ops.postfix(name)
            else:
                return left, lp
            took = False
            if infix is not None and infix.priority <= maxp and lp <= infix.left_max:
                if postfix is not None and postfix.priority <= maxp and lp <= postfix.left_max:
                    # both classes defined: try infix, fall back to postfix
                    mark = self.cur.mark()
                    try:
                        self.cur.next()
                        right, _ = self.parse(infix.right_max)
                        left = Compound(name, (left, right),
                                        span=left.span.cover(right.span),
                                        name_span=tok.span)
                        lp = infix.priority
                        took = True
                    except TermSyntaxError:
                        self.cur.restore(mark)
                else:
                    self.cur.next()
                    right, _ = self.parse(infix.right_max)
                    left = Compound(name, (left, right),
                                    span=left.span.cover(right.span),
                                    name_span=tok.span)
                    lp = infix.priority
                    took = True
            if not took:
                if postfix is not None and postfix.priority <= maxp and lp <= postfix.left_max:
                    self.cur.next()
                    left = Compound(name, (left,),
                                    span=left.span.cover(tok.span),
                                    name_span=tok.span)
                    lp = postfix.priority
                else:
                    return left, lp

    # -- operands ----------------------------------------------------

    def parse_operand(self, maxp: int) -> tuple[Term, int]:
        tok = self.cur.peek()
        if tok is None:
            raise self.error("unexpected end of input")
        kind = tok.kind
        if kind == "open":
            self.cur.next()
            inner, _ = self.parse(1200)
            close = self.expect("close", ")")
            inner = _respan(inner, tok.span.cover(close.span))
            return inner, 0
        if kind == "open_list":
            return self.parse_list(), 0
        if kind == "open_curly":
            return self.parse_curly(), 0
        if kind == "variable":
            self.cur.next()
            return Var(tok.text, span=tok.span), 0
        if kind == "integer":
            self.cur.next()
            return Integer(_int_value(tok.text), span=tok.span), 0
        if kind == "float":
            self.cur.next()
            return Float(float(tok.text), span=tok.span), 0
        if kind == "string":
            self.cur.next()
            return String(unquote(tok.text), span=tok.span), 0
        if kind in ("atom", "punct"):
            return self.parse_atom_or_prefix(tok, maxp)
        raise self.error("unexpected token", tok)

    def parse_atom_or_prefix(self, tok: Token, maxp: int) -> tuple[Term, int]:
        name = atom_value(tok)
        nxt = self.cur.peek2()
        # call syntax: name immediately followed by (
        if nxt is not None and nxt.kind == "open" and nxt.start == tok.end:
            self.cur.next()
            return self.parse_args(tok, name), 0
        # a sign glued to a number literal is part of the literal
        if (tok.kind == "punct" and name in ("-", "+") and nxt is not None
                and nxt.kind in ("integer", "float") and nxt.start == tok.end):
            self.cur.next()
            self.cur.next()
            span = tok.span.cover(nxt.span)
            if nxt.kind == "integer":
                v = _int_value(nxt.text)
                return Integer(-v if name == "-" else v, span=span), 0
            v = float(nxt.text)
            return Float(-v if name == "-" else v, span=span), 0
        prefix = self.ops.prefix(name)
        if (prefix is not None and prefix.priority <= maxp
                and nxt is not None and nxt.kind in _OPERAND_KINDS):
            mark = self.cur.mark()
            self.cur.next()
            try:
                arg, _ = self.parse(prefix.right_max)
                return (Compound(name, (arg,), span=tok.span.cover(arg.span),
                                 name_span=tok.span),
                        prefix.priority)
            except TermSyntaxError:
                self.cur.restore(mark)
        self.cur.next()
        if self.ops.is_operator(name):
            # an operator atom stands alone only where no operand may follow
            after = self.cur.peek()
            if after is not None and after.kind in _OPERAND_KINDS:
                raise self.error(f"operator {name!r} cannot be an operand here", after)
        return Atom(name, span=tok.span, name_span=tok.span), 0

    def parse_args(self, ftok: Token, name: str) -> Term:
        self.expect("open", "(")
        if self.cur.peek() is not None and self.cur.peek().kind == "close":
            raise self.error("compound terms need at least one argument", self.cur.peek())
        args = [self.parse(999)[0]]
        while True:
            tok = self.cur.peek()
            if tok is not None and tok.kind == "comma":
                self.cur.next()
                args.append(self.parse(999)[0])
            else:
                close = self.expect("close", ") or ,")
                return Compound(name, tuple(args),
                                span=ftok.span.cover(close.span),
                                name_span=ftok.span)

    def parse_list(self) -> Term:
        open_tok = self.expect("open_list", "[")
        tok = self.cur.peek()
        if tok is not None and tok.kind == "close_list":
            self.cur.next()
            return Atom("[]", span=open_tok.span.cover(tok.span))
        elems = [self.parse(999)[0]]
        tail: Term | None = None
        while True:
            tok = self.cur.peek()
            if tok is not None and tok.kind == "comma":
                self.cur.next()
                elems.append(self.parse(999)[0])
            elif tok is not None and tok.kind == "bar":
                self.cur.next()
                tail = self.parse(999)[0]
            else:
                close = self.expect("close_list", "]")
                break
        span = open_tok.span.cover(close.span)
        if tail is None:
            tail = Atom("[]", span=SourceSpan(close.start, close.end,
                                              close.span.line_start, close.span.line_end))
        out = tail
        for e in reversed(elems):
            out = Compound(".", (e, out), span=e.span.cover(span))
        return _respan(out, span)

    def parse_curly(self) -> Term:
        open_tok = self.expect("open_curly", "{")
        tok = self.cur.peek()
        if tok is not None and tok.kind == "close_curly":
            self.cur.next()
            return Atom("{}", span=open_tok.span.cover(tok.span))
        inner, _ = self.parse(1200)
        close = self.expect("close_curly", "}")
        return Compound("{}", (inner,), span=open_tok.span.cover(close.span))


def _respan(t: Term, span: SourceSpan) -> Term:
    import dataclasses

    return dataclasses.replace(t, span=span)


def _int_value(text: str) -> int:
    if text.startswith("0'"):
        return char_code(text)
    if len(text) > 1 and text[0] == "0" and text[1] in "xXoObB":
        base = {"x": 16, "o": 8, "b": 2}[text[1].lower()]
        return int(text[2:], base)
    return int(text)


def read_term(cursor: _Cursor, ops: OperatorTable) -> Term:
    """One term followed by its end token."""
    parser = _Parser(cursor, ops)
    term, _ = parser.parse(1200)
    tok = cursor.peek()
    if tok is None or tok.kind != "end":
        raise parser.error("operator expected before this token"
                           if tok is not None else "unexpected end of input after term",
                           tok)
    cursor.next()
    return term


def parse_term_text(text: str, ops: OperatorTable | None = None) -> Term:
    """Reads text as exactly one term; the end token is optional."""
    if ops is None:
        ops = default_operator_table()
    cursor = _Cursor(tokenize(text))
    parser = _Parser(cursor, ops)
    term, _ = parser.parse(1200)
    tok = cursor.peek()
    if tok is not None and tok.kind == "end":
        cursor.next()
        tok = cursor.peek()
    if tok is not None:
        raise parser.error("text continues after the term", tok)
    return term


# -- whole files -----------------------------------------------------

STRUCTURED_LINE_MARKERS = ("%%", "%!")


@dataclass(frozen=True, slots=True)
class CommentRecord:
    """A block comment or a run of adjacent line comments, verbatim."""

    text: str
    span: SourceSpan
    style: str  # "line" | "block"


@dataclass(frozen=True, slots=True)
class ClauseUnit:
    term: Term | None
    leading_comments: tuple[CommentRecord, ...]
    term_span: SourceSpan | None


@dataclass(frozen=True, slots=True)
class ReadMessage:
    severity: str  # "error" | "warning"
    message: str
    span: SourceSpan


@dataclass(frozen=True, slots=True)
class ReadResult:
    units: tuple[ClauseUnit, ...]
    errors: tuple[ReadMessage, ...]


def merge_comment_tokens(source: str, tokens: list[Token]) -> list[CommentRecord]:
    """Group comment tokens into records.

    Line comments on consecutive lines with nothing but layout between
    them merge into a single record; block comments stand alone.
    """
    records: list[CommentRecord] = []
    run: list[Token] = []

    def flush():
        if not run:
            return
        span = run[0].span.cover(run[-1].span)
        records.append(CommentRecord(source[span.start:span.end], span, "line"))
        run.clear()

    for tok in tokens:
        if tok.kind == "comment_block":
            flush()
            records.append(CommentRecord(tok.text, tok.span, "block"))
            continue
        if run:
            prev = run[-1]
            adjacent = (tok.span.line_start == prev.span.line_end + 1
                        and not source[prev.span.end:tok.span.start].strip())
            # a new %% / %! line opens a fresh record unless the previous
            # line is a marker line too (multi-mode headers merge)
            breaks = (tok.text.startswith(STRUCTURED_LINE_MARKERS)
                      and not prev.text.startswith(STRUCTURED_LINE_MARKERS))
            if adjacent and not breaks:
                run.append(tok)
                continue
            flush()
        run.append(tok)
    flush()
    return records


def _is_op_directive(term: Term) -> bool:
    return (isinstance(term, Compound) and term.name == ":-" and len(term.args) == 1
            and isinstance(term.args[0], Compound) and term.args[0].name == "op"
            and len(term.args[0].args) == 3)


def read_source(text: str, ops: OperatorTable | None = None) -> ReadResult:
    """All clause units of a source text, with collected errors.

    Syntax errors skip forward to the next end token; comments gathered up
    to that point still form a unit so no comment is lost.
    """
    if ops is None:
        ops = default_operator_table()
    units: list[ClauseUnit] = []
    errors: list[ReadMessage] = []
    try:
        tokens = tokenize(text)
    except ReaderError as exc:
        errors.append(ReadMessage("error", exc.message, exc.span))
        return ReadResult((), tuple(errors))
    cursor = _Cursor(tokens)
    while True:
        if cursor.at_eof():
            comments = merge_comment_tokens(text, cursor.comments)
            cursor.comments.clear()
            if comments:
                units.append(ClauseUnit(None, tuple(comments), None))
            break
        start = cursor.pos
        try:
            term = read_term(cursor, ops)
        except TermSyntaxError as exc:
            errors.append(ReadMessage("error", exc.message, exc.span))
            # recover: drop tokens up to and including the next end token
            if cursor.pos == start:
                cursor.pos += 1
            while True:
                tok = cursor.next()
                if tok is None or tok.kind == "end":
                    break
            comments = merge_comment_tokens(text, cursor.comments)
            cursor.comments.clear()
            if comments:
                units.append(ClauseUnit(None, tuple(comments), None))
            continue
        if _is_op_directive(term):
            errors.append(ReadMessage("warning",
                                      "user-defined operators are ignored",
                                      term.span))
        comments = merge_comment_tokens(text, cursor.comments)
        cursor.comments.clear()
        units.append(ClauseUnit(term, tuple(comments), term.span))
    return ReadResult(tuple(units), tuple(errors))
