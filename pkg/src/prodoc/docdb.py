"""Documentation database for a source tree.

Builds one immutable snapshot per scan: every .pl file is read, its
structured comments classified, formal headers parsed and the result
keyed by predicate indicator.  README and .txt files are collected for
directory pages.  Reloading produces a fresh snapshot with a higher
generation number, reusing entries for files whose size and
modification time are unchanged, so concurrent readers keep a
consistent view for as long as they hold the old snapshot.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

from .comments import (
    EmptyHeaderError,
    StructuredComment,
    Summary,
    classify_comment,
    extract_summary,
)
from .diagnostics import Diagnostic
from .headers import HeaderSyntaxError, ModeDecl, ModuleHeader, parse_formal_header
from .reader import ClauseUnit, format_term, read_source
from .xref import (
    ColourSpan,
    clause_parts,
    colour_source,
    cross_reference,
    head_target,
    indicator_alternates,
    module_directive,
)


@dataclass(frozen=True, slots=True)
class PredDoc:
    """Documentation of one predicate, from one structured comment."""

    indicator: str
    name: str
    arity: int
    dcg: bool
    modes: tuple[ModeDecl, ...]
    comment: StructuredComment
    summary: Summary
    file: str
    line: int
    is_public: bool


@dataclass(frozen=True, slots=True)
class ModuleDoc:
    """File-level documentation: module directive plus <module> comment."""

    file: str
    module_name: str | None
    title: str | None
    comment: StructuredComment | None
    exports: tuple[str, ...]
    line: int | None = None


@dataclass(frozen=True, slots=True)
class FileEntry:
    path: str
    text: str
    module: ModuleDoc
    preds: tuple[PredDoc, ...]
    defined: frozenset[str]
    dynamic: frozenset[str]
    def_lines: dict[str, int]
    colours: tuple[ColourSpan, ...]
    diagnostics: tuple[Diagnostic, ...]
    mtime: float
    size: int


@dataclass(frozen=True, slots=True)
class SearchHit:
    target: str  # predicate indicator, or file path for module hits
    kind: str  # "pred" | "module"
    summary: str
    is_public: bool
    score: int
    file: str


def _words(text: str) -> frozenset[str]:
    return frozenset(re.findall(r"[a-z0-9_]+", text.lower()))


@dataclass(frozen=True, slots=True)
class DocIndex:
    """One immutable documentation snapshot of a source tree."""

    root: str
    generation: int
    files: dict[str, FileEntry]
    text_files: dict[str, str]
    parsed_files: frozenset[str]

    def file(self, rel: str) -> FileEntry | None:
        return self.files.get(rel)

    def find_pred(self, indicator: str) -> tuple[FileEntry, PredDoc] | None:
        """Documentation for an indicator, trying the // alternate too."""
        wanted = indicator_alternates(indicator)
        for rel in sorted(self.files):
            for pd in self.files[rel].preds:
                if pd.indicator in wanted:
                    return self.files[rel], pd
        return None

    def find_definition(self, indicator: str) -> tuple[FileEntry, int] | None:
        """File and first clause line defining an indicator."""
        wanted = indicator_alternates(indicator)
        for rel in sorted(self.files):
            entry = self.files[rel]
            for alt in wanted:
                if alt in entry.def_lines:
                    return entry, entry.def_lines[alt]
        return None

    def undocumented_exports(self, rel: str) -> tuple[str, ...]:
        """Exports of a file with no documentation, in export-list order."""
        entry = self.files[rel]
        documented: set[str] = set()
        for pd in entry.preds:
            documented.update(indicator_alternates(pd.indicator))
        return tuple(e for e in entry.module.exports if e not in documented)

    def readme_for(self, reldir: str) -> str | None:
        prefix = f"{reldir}/" if reldir else ""
        for name in ("README", "README.md", "README.txt"):
            rel = prefix + name
            if rel in self.text_files:
                return rel
        return None

    def search(self, query: str, include_private: bool = True) -> list[SearchHit]:
        """Keyword hits over names, argument names, types and summaries.

        Each distinct query word scores 3 on a name match, 2 on an
        argument name or type match and 1 on a summary match; word
        scores add up.  Hits sort by descending score, then target.
        """
        words = _words(query)
        if not words:
            return []
        hits: list[SearchHit] = []
        for rel in sorted(self.files):
            entry = self.files[rel]
            mod = entry.module
            if mod.comment is not None or mod.module_name is not None:
                summary = ""
                if mod.comment is not None:
                    summary = extract_summary(mod.comment.body_text,
                                              "module_doc").text
                score = _score(words,
                               _words(mod.module_name or ""),
                               _words(mod.title or ""),
                               _words(summary))
                if score:
                    hits.append(SearchHit(rel, "module", summary, True,
                                          score, rel))
            for pd in entry.preds:
                if not include_private and not pd.is_public:
                    continue
                arg_words: set[str] = set()
                for mode in pd.modes:
                    for arg in mode.args:
                        arg_words |= _words(arg.name)
                        if arg.type is not None:
                            arg_words |= _words(format_term(arg.type))
                score = _score(words, _words(pd.name), frozenset(arg_words),
                               _words(pd.summary.text))
                if score:
                    hits.append(SearchHit(pd.indicator, "pred",
                                          pd.summary.text, pd.is_public,
                                          score, rel))
        hits.sort(key=lambda h: (-h.score, h.target))
        return hits


def _score(query_words: frozenset[str], names: frozenset[str],
           formal: frozenset[str], summary: frozenset[str]) -> int:
    total = 0
    for w in query_words:
        total += 3 * (w in names) + 2 * (w in formal) + (w in summary)
    return total


def _collect_docs(rel: str, units: tuple[ClauseUnit, ...],
                  exports: tuple[str, ...], has_module: bool,
                  diags: list[Diagnostic],
                  ) -> tuple[StructuredComment | None, str | None,
                             int | None, list[PredDoc]]:
    module_comment: StructuredComment | None = None
    title: str | None = None
    module_line: int | None = None
    preds: dict[str, PredDoc] = {}
    export_set = frozenset(exports)

    for unit in units:
        for rec in unit.leading_comments:
            try:
                sc = classify_comment(rec)
            except EmptyHeaderError:
                diags.append(Diagnostic("warning", "empty structured comment",
                                        rel, rec.span.line_start))
                continue
            if sc is None:
                continue
            line = rec.span.line_start
            for d in sc.diagnostics:
                diags.append(d.located(rel, line))
            try:
                parsed = parse_formal_header(sc.header_text)
            except HeaderSyntaxError as exc:
                diags.append(Diagnostic(
                    "warning",
                    f"cannot parse structured comment header: {exc.message}",
                    rel, line))
                continue
            if isinstance(parsed, ModuleHeader):
                if module_comment is not None:
                    diags.append(Diagnostic(
                        "warning", "multiple module comments; first wins",
                        rel, line))
                    continue
                module_comment, title, module_line = sc, parsed.title, line
                continue
            by_indicator: dict[str, list[ModeDecl]] = {}
            for decl in parsed:
                by_indicator.setdefault(decl.indicator, []).append(decl)
            summary = extract_summary(sc.body_text)
            for ind, decls in by_indicator.items():
                if ind in preds:
                    diags.append(Diagnostic(
                        "warning", f"duplicate documentation for {ind}",
                        rel, line))
                    continue
                public = (not has_module
                          or any(a in export_set
                                 for a in indicator_alternates(ind)))
                first = decls[0]
                preds[ind] = PredDoc(
                    indicator=ind, name=first.name, arity=first.arity,
                    dcg=first.is_dcg, modes=tuple(decls), comment=sc,
                    summary=summary, file=rel, line=line, is_public=public)
    return module_comment, title, module_line, list(preds.values())


def _parse_file(rootp: Path, rel: str) -> FileEntry:
    path = rootp / rel
    diags: list[Diagnostic] = []
    empty_module = ModuleDoc(rel, None, None, None, ())
    try:
        st = path.stat()
        text = path.read_text(encoding="utf-8-sig", errors="replace")
    except OSError as exc:
        diags.append(Diagnostic("error", f"cannot read file: {exc}", rel))
        return FileEntry(rel, "", empty_module, (), frozenset(), frozenset(),
                         {}, (), tuple(diags), 0.0, -1)
    result = read_source(text)
    for msg in result.errors:
        diags.append(Diagnostic(msg.severity, msg.message, rel,
                                msg.span.line_start))

    module_name: str | None = None
    exports: tuple[str, ...] = ()
    def_lines: dict[str, int] = {}
    for unit in result.units:
        if unit.term is None:
            continue
        found = module_directive(unit.term)
        if found and module_name is None:
            module_name, exports = found
        kind, head, _ = clause_parts(unit.term)
        if kind != "directive":
            ind, _ = head_target(head, kind == "dcg")
            if ind is not None and ind not in def_lines:
                line = (unit.term_span.line_start if unit.term_span
                        else unit.term.span.line_start)
                def_lines[ind] = line

    report = cross_reference(result.units)
    module_comment, title, module_line, preds = _collect_docs(
        rel, result.units, exports, module_name is not None, diags)
    module = ModuleDoc(file=rel, module_name=module_name, title=title,
                       comment=module_comment, exports=exports,
                       line=module_line)
    colours = colour_source(text, result.units, report, exports=exports)
    preds.sort(key=lambda p: p.line)
    return FileEntry(rel, text, module, tuple(preds), report.defined,
                     report.dynamic, def_lines, colours, tuple(diags),
                     st.st_mtime, st.st_size)


def _scan_tree(rootp: Path) -> list[tuple[str, str]]:
    """(relative path, kind) pairs under a root, sorted; kind source|text."""
    out = []
    for path in sorted(rootp.rglob("*")):
        if not path.is_file():
            continue
        parts = path.relative_to(rootp).parts
        if any(p.startswith(".") for p in parts):
            continue
        rel = "/".join(parts)
        if path.suffix == ".pl":
            out.append((rel, "source"))
        elif path.suffix == ".txt" or path.name in ("README", "README.md"):
            out.append((rel, "text"))
    return out


def _build(rootp: Path, generation: int,
           reuse: dict[str, FileEntry]) -> DocIndex:
    files: dict[str, FileEntry] = {}
    texts: dict[str, str] = {}
    parsed: set[str] = set()
    for rel, kind in _scan_tree(rootp):
        if kind == "text":
            try:
                texts[rel] = (rootp / rel).read_text(encoding="utf-8-sig",
                                                     errors="replace")
            except OSError:
                pass
            continue
        old = reuse.get(rel)
        if old is not None:
            try:
                st = (rootp / rel).stat()
            except OSError:
                st = None
            if (st is not None and st.st_mtime == old.mtime
                    and st.st_size == old.size):
                files[rel] = old
                continue
        files[rel] = _parse_file(rootp, rel)
        parsed.add(rel)
    return DocIndex(root=str(rootp), generation=generation, files=files,
                    text_files=texts, parsed_files=frozenset(parsed))


def build_index(root: str | Path) -> DocIndex:
    """Scan a tree and build the first documentation snapshot."""
    rootp = Path(root).resolve()
    if not rootp.is_dir():
        raise NotADirectoryError(f"documentation root is not a directory: {root}")
    return _build(rootp, 1, {})


def reload_index(index: DocIndex) -> DocIndex:
    """A fresh snapshot; unchanged files keep their parsed entries."""
    return _build(Path(index.root), index.generation + 1, index.files)
