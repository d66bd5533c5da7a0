"""Structured comment recognition and decomposition.

Two comment shapes carry documentation:

    %%  head(?Arg:type) is det.          /** <module> Title
    %%  head(+Arg) is semidet.
    %                                     Overview text in wiki syntax.
    %   Wiki body text.
    %                                     @author A. Hacker
    %   @arg Arg  what it is              */

A percent comment is structured when its first line starts with %% (or %!
when enabled); its header runs to the first line holding only a single %.
A block comment is structured when it opens with /**; its header runs to
the first blank line.  The trailing run of @keyword lines forms the tag
section; everything between header and tags is the wiki body.

The raw text of a comment is kept verbatim; decomposition works on a copy
with the comment margin stripped.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .diagnostics import Diagnostic
from .reader.parser import CommentRecord
from .reader.tokens import SourceSpan

TAG_KEYWORDS = frozenset((
    "param", "throws", "error", "see", "author", "version",
    "deprecated", "compat", "copyright", "license", "bug", "tbd",
))
# keywords other tools accept but this dialect deliberately rejects
UNSUPPORTED_KEYWORDS = frozenset(("return", "since", "serial"))

_SENTENCE_END = re.compile(r"[.!?](?=\s|$)")
_TAG_LINE = re.compile(r"@([A-Za-z][A-Za-z0-9_]*)[ \t]*(.*)\Z")


class EmptyHeaderError(ValueError):
    """A structured comment with no header content."""


@dataclass(frozen=True, slots=True)
class Tag:
    keyword: str
    value: str


@dataclass(frozen=True, slots=True)
class Summary:
    text: str
    source: str  # "predicate_doc" | "module_doc"


@dataclass(frozen=True, slots=True)
class StructuredComment:
    style: str  # "percent" | "slashstar"
    raw: str
    header_text: str
    body_text: str
    tags: tuple[Tag, ...]
    span: SourceSpan
    kind: str  # "module_doc" | "predicate_doc"
    diagnostics: tuple[Diagnostic, ...] = field(default=())


def classify_comment(record: CommentRecord, *, allow_bang: bool = True) -> StructuredComment | None:
    """StructuredComment for a documentation comment, else None.

    Splitting happens here too: the result carries header, body, parsed
    tags and any tag diagnostics.
    """
    if record.style == "line":
        markers = ("%%", "%!") if allow_bang else ("%%",)
        if not record.text.startswith(markers):
            return None
        # "%%%%..." separator lines are decoration, not documentation
        first = record.text.splitlines()[0]
        if set(first) <= {"%"} and len(first) > 2:
            return None
        style = "percent"
    else:
        if not record.text.startswith("/**") or record.text.startswith("/***"):
            return None
        style = "slashstar"
    header, body_lines = _split_header(record, style)
    body_lines, tags, diags = _take_tags(body_lines)
    body = "\n".join(body_lines).strip("\n")
    kind = "module_doc" if header.lstrip().startswith("<module>") else "predicate_doc"
    return StructuredComment(
        style=style,
        raw=record.text,
        header_text=header,
        body_text=body,
        tags=tuple(tags),
        span=record.span,
        kind=kind,
        diagnostics=tuple(diags),
    )


def _strip_margin(lines: list[str]) -> list[str]:
    """Removes the longest common leading whitespace from non-empty lines."""
    margin: str | None = None
    for line in lines:
        if not line.strip():
            continue
        ws = line[: len(line) - len(line.lstrip())]
        if margin is None:
            margin = ws
        else:
            common = 0
            for a, b in zip(margin, ws):
                if a != b:
                    break
                common += 1
            margin = margin[:common]
        if not margin:
            return lines
    if not margin:
        return lines
    return [line[len(margin):] if line.startswith(margin) else line.lstrip()
            for line in lines]


def _split_header(record: CommentRecord, style: str) -> tuple[str, list[str]]:
    """(header_text, body lines with margin stripped)."""
    if style == "percent":
        content: list[str] = []
        separators: list[bool] = []
        for line in record.text.splitlines():
            stripped = line.lstrip()
            i = 0
            while i < len(stripped) and stripped[i] == "%":
                i += 1
            # the %! marker spelling: the ! belongs to the marker
            if i == 1 and i < len(stripped) and stripped[i] == "!":
                i += 1
            rest = stripped[i:]
            separators.append(rest.strip() == "")
            content.append(rest)
        header_end = len(content)
        for idx, blank in enumerate(separators):
            if blank:
                header_end = idx
                break
        header_lines = _strip_margin(content[:header_end])
        body_lines = _strip_margin(content[header_end + 1:]) if header_end < len(content) else []
        header = "\n".join(header_lines)
    else:
        inner = record.text[3:]
        if inner.endswith("*/"):
            inner = inner[:-2]
        lines = inner.split("\n")
        # drop a decorative column of leading * when most lines carry one
        rest = lines[1:]
        starred = sum(1 for ln in rest if ln.strip().startswith("*"))
        nonblank = sum(1 for ln in rest if ln.strip())
        if nonblank and starred / nonblank >= 0.8:
            rest = [re.sub(r"^(\s*)\*\s?", r"\1", ln) for ln in rest]
        lines = [lines[0]] + rest
        if lines and not lines[-1].strip():
            lines.pop()
        # a bare /** line does not count as the (empty) header
        first = 1 if lines and not lines[0].strip() else 0
        header_end = len(lines)
        for idx in range(first, len(lines)):
            if not lines[idx].strip():
                header_end = idx
                break
        header_lines = _strip_margin(lines[first:header_end])
        body_lines = _strip_margin(lines[header_end + 1:]) if header_end < len(lines) else []
        header = "\n".join(header_lines)
    if not header.strip():
        raise EmptyHeaderError("structured comment has no header")
    return header, body_lines


def _take_tags(body_lines: list[str]) -> tuple[list[str], list[Tag], list[Diagnostic]]:
    """Splits off the maximal trailing run of @keyword lines."""
    start = None
    i = 0
    n = len(body_lines)
    while i < n:
        line = body_lines[i]
        if line.startswith("@") and _TAG_LINE.match(line):
            if start is None:
                start = i
        elif line.strip() == "" or (line[:1] in (" ", "\t")):
            pass  # blank or indented continuation stays inside a run
        else:
            start = None
        i += 1
    if start is None:
        return body_lines, [], []
    tag_lines = body_lines[start:]
    body = body_lines[:start]
    tags, extra_body, diags = parse_tags(tag_lines)
    body.extend(extra_body)
    return body, tags, diags


def parse_tags(tag_lines: list[str]) -> tuple[list[Tag], list[str], list[Diagnostic]]:
    """Tags from a run of @keyword lines.

    Returns (tags, lines demoted to body text, diagnostics).  Unknown
    keywords warn and demote their line; unsupported ones only warn.
    """
    tags: list[Tag] = []
    demoted: list[str] = []
    diags: list[Diagnostic] = []
    current: list[str] | None = None  # [keyword, value...] accumulator

    def finish():
        nonlocal current
        if current is None:
            return
        keyword = current[0]
        value = "\n".join(v for v in current[1:] if v).strip()
        if keyword == "error":
            # shorthand for a thrown ISO error term
            tags.append(Tag("throws", f"error({value}, Context)"))
        else:
            tags.append(Tag(keyword, value))
        current = None

    for line in tag_lines:
        m = _TAG_LINE.match(line) if line.startswith("@") else None
        if m:
            finish()
            keyword, rest = m.group(1), m.group(2)
            if keyword in UNSUPPORTED_KEYWORDS:
                diags.append(Diagnostic("warning", f"unsupported keyword: @{keyword}"))
                continue
            if keyword not in TAG_KEYWORDS:
                diags.append(Diagnostic("warning", f"unknown tag keyword: @{keyword}"))
                demoted.append(line)
                continue
            current = [keyword, rest.strip()]
        elif current is not None:
            current.append(line.strip())
        elif line.strip():
            demoted.append(line)
    finish()
    return tags, demoted, diags


def extract_summary(body_text: str, source: str = "predicate_doc") -> Summary:
    """First sentence of the body, collapsed to one line.

    The sentence ends at the first . ! or ? followed by whitespace, within
    the first paragraph; a paragraph without one summarises as its first
    line.  Whitespace runs collapse to single spaces.
    """
    paragraph = body_text.split("\n\n", 1)[0]
    m = _SENTENCE_END.search(paragraph)
    if m:
        sentence = paragraph[: m.end()]
    else:
        sentence = paragraph.split("\n", 1)[0]
    return Summary(" ".join(sentence.split()), source)
