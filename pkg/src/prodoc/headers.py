"""Formal comment headers: modes, argument types, determinism.

A header line is one term of the shape

    head ::= name | name(argspec, ...)
    modedef ::= head [//] [is determinism]
    argspec ::= [mode] ArgName [: type]

with mode one of + - ? : @ ! and determinism one of det, semidet,
nondet, multi.  Argument names must be variable names; types are
arbitrary terms.  Headers are read with the ordinary term reader over a
table that adds a postfix // so grammar headers parse unaided.
"""

from __future__ import annotations

from dataclasses import dataclass

from .reader.errors import TermSyntaxError
from .reader.operators import OperatorTable, default_operator_table
from .reader.parser import parse_term_text
from .reader.terms import Atom, Compound, Term, Var, format_term

MODE_CHARS = ("+", "-", "?", ":", "@", "!")
DETERMINISMS = ("det", "semidet", "nondet", "multi")

_header_ops: OperatorTable | None = None


def header_operator_table() -> OperatorTable:
    global _header_ops
    if _header_ops is None:
        t = default_operator_table().copy()
        t.add(200, "xf", "//")
        _header_ops = t
    return _header_ops


class HeaderSyntaxError(ValueError):
    """A header that does not match the mode grammar.

    reason is a stable code: "syntax", "NonVariableArgName", "BadMode",
    "BadDeterminism", "BadHead".
    """

    def __init__(self, reason: str, message: str):
        super().__init__(message)
        self.reason = reason
        self.message = message


@dataclass(frozen=True, slots=True)
class ArgSpec:
    mode: str | None
    name: str
    type: Term | None

    def render(self) -> str:
        out = self.mode or ""
        out += self.name
        if self.type is not None:
            out += ":" + format_term(self.type)
        return out


@dataclass(frozen=True, slots=True)
class ModeDecl:
    name: str
    args: tuple[ArgSpec, ...]
    is_dcg: bool
    determinism: str | None

    @property
    def arity(self) -> int:
        return len(self.args)

    @property
    def indicator(self) -> str:
        sep = "//" if self.is_dcg else "/"
        return f"{self.name}{sep}{len(self.args)}"

    def render(self) -> str:
        out = self.name
        if self.args:
            out += "(" + ", ".join(a.render() for a in self.args) + ")"
        if self.is_dcg:
            out += "//"
        if self.determinism is not None:
            out += f" is {self.determinism}"
        return out


@dataclass(frozen=True, slots=True)
class ModuleHeader:
    title: str


def parse_formal_header(header_text: str) -> ModuleHeader | list[ModeDecl]:
    """Decodes a header into a module title or one ModeDecl per line.

    Raises HeaderSyntaxError when the text does not match the grammar;
    callers degrade the comment to plain text and report a diagnostic.
    """
    stripped = header_text.strip()
    if stripped.startswith("<module>"):
        title = stripped[len("<module>"):].strip()
        if not title:
            raise HeaderSyntaxError("BadHead", "module header has no title")
        return ModuleHeader(title=" ".join(title.split()))
    decls = []
    for term in _header_terms(header_text):
        decls.append(_mode_decl(term))
    if not decls:
        raise HeaderSyntaxError("syntax", "header is empty")
    return decls


def _header_terms(header_text: str):
    """One term per header line; a line that needs more input joins the next."""
    ops = header_operator_table()
    pending = ""
    for line in header_text.splitlines():
        if not line.strip():
            continue
        pending = pending + "\n" + line if pending else line
        try:
            yield parse_term_text(pending, ops)
        except TermSyntaxError as exc:
            if exc.span.start >= len(pending.rstrip()):  # ran off the end: continuation
                continue
            raise HeaderSyntaxError("syntax", f"cannot read header: {exc.message}") from None
        pending = ""
    if pending:
        raise HeaderSyntaxError("syntax", "header line is incomplete")


def _mode_decl(term: Term) -> ModeDecl:
    determinism = None
    if isinstance(term, Compound) and term.name == "is" and len(term.args) == 2:
        det = term.args[1]
        if not isinstance(det, Atom) or det.name not in DETERMINISMS:
            raise HeaderSyntaxError(
                "BadDeterminism",
                f"determinism must be one of {', '.join(DETERMINISMS)}")
        determinism = det.name
        term = term.args[0]
    is_dcg = False
    if isinstance(term, Compound) and term.name == "//" and len(term.args) == 1:
        is_dcg = True
        term = term.args[0]
    if isinstance(term, Atom):
        return ModeDecl(term.name, (), is_dcg, determinism)
    if isinstance(term, Compound) and not _is_mode_wrapper(term):
        return ModeDecl(term.name, tuple(_argspec(a) for a in term.args),
                        is_dcg, determinism)
    raise HeaderSyntaxError("BadHead", "header head must be an atom or compound")


def _is_mode_wrapper(term: Compound) -> bool:
    return term.name in MODE_CHARS and len(term.args) == 1


def _argspec(term: Term) -> ArgSpec:
    mode = None
    if isinstance(term, Compound) and _is_mode_wrapper(term):
        mode = term.name
        term = term.args[0]
    type_: Term | None = None
    if isinstance(term, Compound) and term.name == ":" and len(term.args) == 2:
        type_ = term.args[1]
        term = term.args[0]
        # tolerate a mode that bound inside the colon
        if mode is None and isinstance(term, Compound) and _is_mode_wrapper(term):
            mode = term.name
            term = term.args[0]
    if not isinstance(term, Var):
        if isinstance(term, (Atom, Compound)) and getattr(term, "name", "") in MODE_CHARS:
            raise HeaderSyntaxError("BadMode", "argument mode must wrap a variable name")
        raise HeaderSyntaxError("NonVariableArgName",
                                "argument names must be variable names")
    return ArgSpec(mode, term.name, type_)
