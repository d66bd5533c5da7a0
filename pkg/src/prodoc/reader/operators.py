"""Operator table driving term reading and writing.

Priorities run 1..1200.  A name may hold at most one definition per class
(prefix, infix, postfix); the class follows from the type.
"""

from __future__ import annotations

from dataclasses import dataclass

PREFIX_TYPES = ("fy", "fx")
INFIX_TYPES = ("xfx", "xfy", "yfx")
POSTFIX_TYPES = ("xf", "yf")


@dataclass(frozen=True, slots=True)
class OpDef:
    priority: int
    type: str

    @property
    def left_max(self) -> int:
        # highest priority accepted for the operand left of an infix/postfix op
        return self.priority if self.type in ("yfx", "yf") else self.priority - 1

    @property
    def right_max(self) -> int:
        # highest priority accepted for the operand right of an infix/prefix op
        return self.priority if self.type in ("xfy", "fy") else self.priority - 1


class OperatorTable:
    def __init__(self):
        self._prefix: dict[str, OpDef] = {}
        self._infix: dict[str, OpDef] = {}
        self._postfix: dict[str, OpDef] = {}

    def add(self, priority: int, type: str, name: str) -> None:
        if not 1 <= priority <= 1200:
            raise ValueError(f"operator priority out of range: {priority}")
        d = OpDef(priority, type)
        if type in PREFIX_TYPES:
            self._prefix[name] = d
        elif type in INFIX_TYPES:
            self._infix[name] = d
        elif type in POSTFIX_TYPES:
            self._postfix[name] = d
        else:
            raise ValueError(f"unknown operator type: {type}")

    def prefix(self, name: str) -> OpDef | None:
        return self._prefix.get(name)

    def infix(self, name: str) -> OpDef | None:
        return self._infix.get(name)

    def postfix(self, name: str) -> OpDef | None:
        return self._postfix.get(name)

    def is_operator(self, name: str) -> bool:
        return name in self._prefix or name in self._infix or name in self._postfix

    def lookup(self, name: str) -> list[tuple[int, str]]:
        """All (priority, type) definitions for name."""
        out = []
        for table in (self._prefix, self._infix, self._postfix):
            if name in table:
                out.append((table[name].priority, table[name].type))
        return out

    def copy(self) -> "OperatorTable":
        other = OperatorTable()
        other._prefix = dict(self._prefix)
        other._infix = dict(self._infix)
        other._postfix = dict(self._postfix)
        return other


# Standard table: the ISO core, the usual directive operators, and the
# prefix mode markers (+ - ? : @ !) that let formal comment headers read
# as plain terms.
_DEFAULT_OPS = [
    (1200, "xfx", ":-"), (1200, "xfx", "-->"),
    (1200, "fx", ":-"), (1200, "fx", "?-"),
    (1150, "fx", "dynamic"), (1150, "fx", "discontiguous"),
    (1150, "fx", "initialization"), (1150, "fx", "meta_predicate"),
    (1150, "fx", "module_transparent"), (1150, "fx", "multifile"),
    (1150, "fx", "public"), (1150, "fx", "thread_local"),
    (1150, "fx", "table"), (1150, "fx", "volatile"),
    (1100, "xfy", ";"), (1100, "xfy", "|"),
    (1050, "xfy", "->"), (1050, "xfy", "*->"),
    (1000, "xfy", ","),
    (990, "xfx", ":="),
    (900, "fy", "\\+"),
    (700, "xfx", "="), (700, "xfx", "\\="),
    (700, "xfx", "=="), (700, "xfx", "\\=="),
    (700, "xfx", "@<"), (700, "xfx", "@>"),
    (700, "xfx", "@=<"), (700, "xfx", "@>="),
    (700, "xfx", "=.."), (700, "xfx", "is"),
    (700, "xfx", "=:="), (700, "xfx", "=\\="),
    (700, "xfx", "<"), (700, "xfx", ">"),
    (700, "xfx", "=<"), (700, "xfx", ">="),
    (200, "xfy", ":"),
    (500, "yfx", "+"), (500, "yfx", "-"),
    (500, "yfx", "/\\"), (500, "yfx", "\\/"), (500, "yfx", "xor"),
    (400, "yfx", "*"), (400, "yfx", "/"), (400, "yfx", "//"),
    (400, "yfx", "rem"), (400, "yfx", "mod"), (400, "yfx", "div"),
    (400, "yfx", "<<"), (400, "yfx", ">>"),
    (200, "xfx", "**"), (200, "xfy", "^"),
    (200, "fy", "-"), (200, "fy", "+"), (200, "fy", "\\"),
    (200, "fy", "?"), (200, "fy", ":"), (200, "fy", "@"), (200, "fy", "!"),
]

_default: OperatorTable | None = None


def default_operator_table() -> OperatorTable:
    """Shared immutable-by-convention default table."""
    global _default
    if _default is None:
        t = OperatorTable()
        for priority, type, name in _DEFAULT_OPS:
            t.add(priority, type, name)
        _default = t
    return _default
