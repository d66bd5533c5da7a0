"""Term shapes produced by the reader, plus an operator-aware writer.

Every term carries the span it was read from; compounds and atoms also
carry the span of the token that named them (used by the source colourer).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .operators import OperatorTable, default_operator_table
from .tokens import SourceSpan, atom_needs_quotes, quote_atom

_NOWHERE = SourceSpan(0, 0, 1, 1)


@dataclass(frozen=True, slots=True)
class Term:
    span: SourceSpan = field(default=_NOWHERE, kw_only=True)


@dataclass(frozen=True, slots=True)
class Atom(Term):
    name: str
    name_span: SourceSpan | None = field(default=None, kw_only=True)


@dataclass(frozen=True, slots=True)
class Var(Term):
    name: str


@dataclass(frozen=True, slots=True)
class Integer(Term):
    value: int


@dataclass(frozen=True, slots=True)
class Float(Term):
    value: float


@dataclass(frozen=True, slots=True)
class String(Term):
    value: str


@dataclass(frozen=True, slots=True)
class Compound(Term):
    name: str
    args: tuple[Term, ...]
    name_span: SourceSpan | None = field(default=None, kw_only=True)

    @property
    def arity(self) -> int:
        return len(self.args)


def atom(t: Term, name: str | None = None) -> bool:
    return isinstance(t, Atom) and (name is None or t.name == name)


def compound(t: Term, name: str | None = None, arity: int | None = None) -> bool:
    return (isinstance(t, Compound)
            and (name is None or t.name == name)
            and (arity is None or len(t.args) == arity))


def shape(t: Term):
    """Structure of t with spans dropped; used for equality in tests."""
    if isinstance(t, Atom):
        return ("atom", t.name)
    if isinstance(t, Var):
        return ("var", t.name)
    if isinstance(t, Integer):
        return ("int", t.value)
    if isinstance(t, Float):
        return ("float", t.value)
    if isinstance(t, String):
        return ("str", t.value)
    if isinstance(t, Compound):
        return ("compound", t.name, tuple(shape(a) for a in t.args))
    raise TypeError(t)


def list_parts(t: Term) -> tuple[list[Term], Term]:
    """Elements and tail of a '.'/2 chain ([] tail when proper)."""
    elems = []
    while compound(t, ".", 2):
        elems.append(t.args[0])
        t = t.args[1]
    return elems, t


def format_term(t: Term, ops: OperatorTable | None = None) -> str:
    """Writes t so the reader gets the same structure back.

    Operators are written in operator notation with minimal parentheses;
    atoms that are operators are parenthesised in operand positions.
    """
    if ops is None:
        ops = default_operator_table()
    return _fmt(t, 1200, ops)


def _float_text(v: float) -> str:
    s = repr(v)
    if "e" in s or "E" in s:
        mantissa, _, exp = s.partition("e" if "e" in s else "E")
        if "." not in mantissa:
            mantissa += ".0"
        return f"{mantissa}e{exp}"
    if "." not in s:
        s += ".0"
    return s


def _atom_text(name: str) -> str:
    return quote_atom(name) if atom_needs_quotes(name) else name


def _fmt(t: Term, maxp: int, ops: OperatorTable) -> str:
    if isinstance(t, Atom):
        text = _atom_text(t.name)
        if ops.is_operator(t.name):
            return f"({text})"
        return text
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Integer):
        return str(t.value)
    if isinstance(t, Float):
        return _float_text(t.value)
    if isinstance(t, String):
        body = t.value.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n")
        return f'"{body}"'
    if isinstance(t, Compound):
        return _fmt_compound(t, maxp, ops)
    raise TypeError(t)


def _fmt_compound(t: Compound, maxp: int, ops: OperatorTable) -> str:
    if compound(t, ".", 2):
        elems, tail = list_parts(t)
        inner = ", ".join(_fmt(e, 999, ops) for e in elems)
        if atom(tail, "[]"):
            return f"[{inner}]"
        return f"[{inner}|{_fmt(tail, 999, ops)}]"
    if compound(t, "{}", 1):
        return "{" + _fmt(t.args[0], 1200, ops) + "}"
    if len(t.args) == 2:
        d = ops.infix(t.name)
        if d is not None:
            left = _fmt(t.args[0], d.left_max, ops)
            right = _fmt(t.args[1], d.right_max, ops)
            if t.name == ",":
                s = f"{left}, {right}"
            else:
                s = f"{left} {_atom_text(t.name)} {right}"
            return f"({s})" if d.priority > maxp else s
    if len(t.args) == 1:
        d = ops.prefix(t.name)
        if d is not None:
            # "- 1" must stay a compound: the space prevents the reader
            # from folding the sign into the number
            arg = _fmt(t.args[0], d.right_max, ops)
            s = f"{_atom_text(t.name)} {arg}"
            return f"({s})" if d.priority > maxp else s
        d = ops.postfix(t.name)
        if d is not None:
            s = f"{_fmt(t.args[0], d.left_max, ops)} {_atom_text(t.name)}"
            return f"({s})" if d.priority > maxp else s
    args = ", ".join(_fmt(a, 999, ops) for a in t.args)
    return f"{_atom_text(t.name)}({args})"
