"""Cross-referencing and source colouring.

Works on the clause units produced by the reader.  The cross-referencer
collects which predicates a file defines and which it calls, walking
through control constructs and the usual meta-predicates.  The colourer
turns that knowledge plus the raw token stream into a flat list of
classified, non-overlapping source spans ready for rendering.

Predicates are named by indicator strings: ``name/arity`` for ordinary
predicates and ``name//arity`` for grammar rules.  A call resolves if
either spelling is known; ``phrase/2`` bridges the two worlds.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterator

from .builtins import BUILTIN_PREDICATES
from .comments import EmptyHeaderError, classify_comment
from .reader import (
    Atom,
    ClauseUnit,
    Compound,
    OperatorTable,
    ReaderError,
    SourceSpan,
    Term,
    default_operator_table,
    merge_comment_tokens,
    tokenize,
)

# control constructs are traversed but not reported as calls
_CONTROL = frozenset(((",", 2), (";", 2), ("->", 2), ("*->", 2)))

# goal arguments of common meta-predicates: "g" walks the argument as a
# goal, "d" as a grammar body, None leaves it alone
_META: dict[tuple[str, int], tuple[str | None, ...]] = {
    ("\\+", 1): ("g",),
    ("not", 1): ("g",),
    ("once", 1): ("g",),
    ("ignore", 1): ("g",),
    ("forall", 2): ("g", "g"),
    ("findall", 3): (None, "g", None),
    ("findall", 4): (None, "g", None, None),
    ("bagof", 3): (None, "g", None),
    ("setof", 3): (None, "g", None),
    ("aggregate_all", 3): (None, "g", None),
    ("catch", 3): ("g", None, "g"),
    ("phrase", 2): ("d", None),
    ("phrase", 3): ("d", None, None),
}

_DECL_NAMES = frozenset((
    "dynamic", "discontiguous", "multifile", "thread_local", "table",
))


def clause_parts(term: Term) -> tuple[str, Term, Term | None]:
    """Split a read term into (kind, head, body).

    Kind is one of "clause", "dcg", "directive" or "fact"; directives
    return the goal as head and body None.
    """
    if isinstance(term, Compound):
        if term.name == ":-" and term.arity == 2:
            return "clause", term.args[0], term.args[1]
        if term.name == "-->" and term.arity == 2:
            return "dcg", term.args[0], term.args[1]
        if term.name in (":-", "?-") and term.arity == 1:
            return "directive", term.args[0], None
    return "fact", term, None


def head_target(head: Term, dcg: bool = False) -> tuple[str | None, SourceSpan | None]:
    """Indicator and name span of a clause head, or (None, None)."""
    t = head
    if isinstance(t, Compound) and t.name == ":" and t.arity == 2:
        t = t.args[1]
    if dcg and isinstance(t, Compound) and t.name == "," and t.arity == 2:
        t = t.args[0]  # pushback rule: Head, PushBack --> Body
    sep = "//" if dcg else "/"
    if isinstance(t, Atom):
        return f"{t.name}{sep}0", t.name_span or t.span
    if isinstance(t, Compound):
        return f"{t.name}{sep}{t.arity}", t.name_span
    return None, None


def indicator_spec(term: Term) -> str | None:
    """Indicator string for a Name/Arity or Name//Arity term."""
    if (isinstance(term, Compound) and term.name in ("/", "//")
            and term.arity == 2):
        name, num = term.args
        if isinstance(name, Atom) and getattr(num, "value", None) is not None:
            if isinstance(num.value, int):
                return f"{name.name}{term.name}{num.value}"
    return None


def _conj_leaves(term: Term) -> Iterator[Term]:
    if isinstance(term, Compound) and term.name in (",", "|", ";") and term.arity == 2:
        yield from _conj_leaves(term.args[0])
        yield from _conj_leaves(term.args[1])
    else:
        yield term


def declared_indicators(goal: Term, names: frozenset[str] = _DECL_NAMES) -> list[str]:
    """Indicators named by a dynamic/discontiguous/... declaration goal."""
    if not (isinstance(goal, Compound) and goal.name in names and goal.arity == 1):
        return []
    out = []
    for leaf in _conj_leaves(goal.args[0]):
        ind = indicator_spec(leaf)
        if ind:
            out.append(ind)
    return out


def module_directive(term: Term) -> tuple[str, tuple[str, ...]] | None:
    """(module name, exported indicators) from a module/2 directive term."""
    kind, goal, _ = clause_parts(term)
    if kind != "directive":
        return None
    if not (isinstance(goal, Compound) and goal.name == "module" and goal.arity == 2):
        return None
    name_term, export_term = goal.args
    if not isinstance(name_term, Atom):
        return None
    exports = []
    for leaf in _list_elements(export_term):
        ind = indicator_spec(leaf)
        if ind:
            exports.append(ind)
    return name_term.name, tuple(exports)


def _list_elements(term: Term) -> Iterator[Term]:
    while isinstance(term, Compound) and term.name == "." and term.arity == 2:
        yield term.args[0]
        term = term.args[1]


def _call_indicator(target: Term, extra: int, sep: str = "/") -> tuple[Term, str] | None:
    while isinstance(target, Compound) and target.name == ":" and target.arity == 2:
        target = target.args[1]
    if isinstance(target, Atom):
        return target, f"{target.name}{sep}{extra}"
    if isinstance(target, Compound):
        return target, f"{target.name}{sep}{target.arity + extra}"
    return None


def iter_goals(goal: Term) -> Iterator[tuple[Term, str]]:
    """Subgoals of a clause body, paired with their indicators.

    Control constructs are traversed silently; meta-predicates are
    reported themselves and their goal arguments walked.  Module
    qualifiers are stripped.  Variable goals are skipped: nothing useful
    can be said about them statically.
    """
    if isinstance(goal, Atom):
        yield goal, f"{goal.name}/0"
        return
    if not isinstance(goal, Compound):
        return
    name, arity = goal.name, goal.arity
    if (name, arity) in _CONTROL:
        for a in goal.args:
            yield from iter_goals(a)
        return
    if name == "^" and arity == 2:
        yield from iter_goals(goal.args[1])
        return
    if name == ":" and arity == 2:
        yield from iter_goals(goal.args[1])
        return
    if name == "call" and arity >= 1:
        yield goal, f"call/{arity}"
        resolved = _call_indicator(goal.args[0], arity - 1)
        if resolved:
            yield resolved
        return
    yield goal, f"{name}/{arity}"
    spec = _META.get((name, arity))
    if spec:
        for arg, how in zip(goal.args, spec):
            if how == "g":
                yield from iter_goals(arg)
            elif how == "d":
                resolved = _call_indicator(arg, 0, "//")
                if resolved:
                    yield resolved


def iter_dcg_body(body: Term) -> Iterator[tuple[Term, str]]:
    """Non-terminals referenced by a grammar rule body."""
    if isinstance(body, Atom):
        if body.name == "[]":
            return
        if body.name == "!":
            yield body, "!/0"
            return
        yield body, f"{body.name}//0"
        return
    if not isinstance(body, Compound):
        return  # variables, strings and code lists are terminals
    name, arity = body.name, body.arity
    if (name, arity) in _CONTROL or (name, arity) == ("\\+", 1):
        for a in body.args:
            yield from iter_dcg_body(a)
        return
    if name == "." and arity == 2:
        return  # a literal terminal list
    if name == "{}" and arity == 1:
        yield from iter_goals(body.args[0])
        return
    if name == ":" and arity == 2:
        yield from iter_dcg_body(body.args[1])
        return
    if name == "call" and arity >= 1:
        resolved = _call_indicator(body.args[0], arity - 1, "//")
        if resolved:
            yield resolved
        return
    yield body, f"{name}//{arity}"


@dataclass(frozen=True, slots=True)
class XrefReport:
    """What a file defines and calls, by predicate indicator."""

    defined: frozenset[str]
    called: frozenset[str]
    dynamic: frozenset[str]


def cross_reference(units: tuple[ClauseUnit, ...] | list[ClauseUnit]) -> XrefReport:
    defined: set[str] = set()
    called: set[str] = set()
    dynamic: set[str] = set()
    for unit in units:
        if unit.term is None:
            continue
        kind, head, body = clause_parts(unit.term)
        if kind == "directive":
            dynamic.update(declared_indicators(head, frozenset(("dynamic",))))
            if (isinstance(head, Compound) and head.name == "initialization"
                    and head.arity >= 1):
                called.update(ind for _, ind in iter_goals(head.args[0]))
            continue
        ind, _ = head_target(head, kind == "dcg")
        if ind:
            defined.add(ind)
        if body is not None:
            walk = iter_dcg_body if kind == "dcg" else iter_goals
            called.update(i for _, i in walk(body))
    return XrefReport(frozenset(defined), frozenset(called), frozenset(dynamic))


def indicator_alternates(ind: str) -> tuple[str, ...]:
    name, sep, num = ind.rpartition("//")
    if sep:
        return ind, f"{name}/{int(num) + 2}"
    name, _, num = ind.rpartition("/")
    n = int(num)
    if n >= 2:
        return ind, f"{name}//{n - 2}"
    return (ind,)


def resolves(ind: str, known: frozenset[str]) -> bool:
    """Whether a called indicator reaches a definition or builtin."""
    return any(a in known or a in BUILTIN_PREDICATES
               for a in indicator_alternates(ind))


def undefined_calls(report: XrefReport) -> tuple[str, ...]:
    known = report.defined | report.dynamic
    return tuple(sorted(ind for ind in report.called
                        if not resolves(ind, known)))


@dataclass(frozen=True, slots=True)
class ColourSpan:
    span: SourceSpan
    cls: str


# low to high: later assignments only win with a higher band
_TOKEN_BAND = 30
_SYNTAX_BAND = 40
_CLAUSE_BAND = 60
_COMMENT_BAND = 100


def colour_source(text: str, units: tuple[ClauseUnit, ...] | list[ClauseUnit],
                  report: XrefReport | None = None, *,
                  exports: tuple[str, ...] | None = None,
                  ops: OperatorTable | None = None) -> tuple[ColourSpan, ...]:
    """Classified spans for a source text, sorted and non-overlapping.

    Gaps between spans are plain text.  Returns () when the text cannot
    be tokenized at all.
    """
    if ops is None:
        ops = default_operator_table()
    if report is None:
        report = cross_reference(units)
    if exports is None:
        exports = ()
        for unit in units:
            if unit.term is None:
                continue
            found = module_directive(unit.term)
            if found:
                exports = found[1]
                break
    try:
        tokens = tokenize(text)
    except ReaderError:
        return ()
    exported = frozenset(exports)
    known = report.defined | report.dynamic

    chosen: dict[tuple[int, int], tuple[int, ColourSpan]] = {}

    def put(span: SourceSpan | None, cls: str, band: int) -> None:
        if span is None or span.start >= span.end:
            return
        key = (span.start, span.end)
        cur = chosen.get(key)
        if cur is None or cur[0] < band:
            chosen[key] = (band, ColourSpan(span, cls))

    comment_tokens = [t for t in tokens
                      if t.kind in ("comment_line", "comment_block")]
    for rec in merge_comment_tokens(text, comment_tokens):
        cls = "comment"
        try:
            if classify_comment(rec) is not None:
                cls = "structured_comment"
        except EmptyHeaderError:
            cls = "structured_comment"
        put(rec.span, cls, _COMMENT_BAND)

    for tok in tokens:
        if tok.kind == "variable":
            put(tok.span, "variable", _TOKEN_BAND)
        elif tok.kind == "atom":
            if tok.text.startswith("'"):
                put(tok.span, "quoted_atom", _SYNTAX_BAND)
            elif ops.is_operator(tok.text):
                put(tok.span, "operator", _TOKEN_BAND)
        elif tok.kind == "punct":
            if ops.is_operator(tok.text):
                put(tok.span, "operator", _TOKEN_BAND)
        elif tok.kind in ("integer", "float"):
            put(tok.span, "number", _SYNTAX_BAND)
        elif tok.kind == "string":
            put(tok.span, "string", _SYNTAX_BAND)

    for unit in units:
        if unit.term is None:
            continue
        kind, head, body = clause_parts(unit.term)
        if kind == "directive":
            put(unit.term.name_span, "directive", _CLAUSE_BAND)
            if isinstance(head, Compound):
                put(head.name_span, "directive", _CLAUSE_BAND)
            continue
        ind, nspan = head_target(head, kind == "dcg")
        if ind is not None:
            cls = "head_exported" if ind in exported else "head_local"
            put(nspan, cls, _CLAUSE_BAND)
        if body is not None:
            walk = iter_dcg_body if kind == "dcg" else iter_goals
            for goal, gind in walk(body):
                gspan = getattr(goal, "name_span", None) or goal.span
                cls = ("call_defined" if resolves(gind, known)
                       else "call_undefined")
                put(gspan, cls, _CLAUSE_BAND)

    # per-clause singleton detection; leading-underscore names opt out
    var_tokens = [t for t in tokens if t.kind == "variable"]
    var_starts = [t.start for t in var_tokens]
    for unit in units:
        if unit.term is None or unit.term_span is None:
            continue
        lo, hi = unit.term_span.start, unit.term_span.end
        counts: dict[str, int] = {}
        spot = []
        for i in range(bisect_left(var_starts, lo), len(var_tokens)):
            tok = var_tokens[i]
            if tok.end > hi:
                break
            counts[tok.text] = counts.get(tok.text, 0) + 1
            spot.append(tok)
        for tok in spot:
            if counts[tok.text] == 1 and not tok.text.startswith("_"):
                put(tok.span, "singleton_variable", _SYNTAX_BAND + 1)

    spans = sorted((cs for _, cs in chosen.values()),
                   key=lambda cs: (cs.span.start, cs.span.end))
    out: list[ColourSpan] = []
    for cs in spans:
        if out and cs.span.start < out[-1].span.end:
            continue  # keyed by exact extent, so this never drops a winner
        out.append(cs)
    return tuple(out)
