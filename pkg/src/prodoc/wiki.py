"""Wiki dialect used in comment bodies and standalone .txt files.

Block level: paragraphs separated by blank lines; bulleted (- or *),
numbered (1.) and description ($ term : text) lists whose items share one
column; == fenced code blocks kept byte-exact.  Inline level: *word* /
*|multi word|* bold, _word_ / _|...|_ italics, =word= / =|...|= code,
name/arity and name//arity predicate links, file.pl / file.txt links,
image file references and [[file.png]] inline images, and capitalised
words naming exactly one argument.  Raw HTML is never interpreted;
anything that does not match the dialect stays ordinary text.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .comments import Tag
from .diagnostics import Diagnostic

IMAGE_EXTENSIONS = (".png", ".gif", ".jpg", ".jpeg", ".svg")


# -- nodes -----------------------------------------------------------

@dataclass(frozen=True, slots=True)
class Text:
    text: str


@dataclass(frozen=True, slots=True)
class Bold:
    content: tuple


@dataclass(frozen=True, slots=True)
class Italic:
    content: tuple


@dataclass(frozen=True, slots=True)
class Code:
    text: str


@dataclass(frozen=True, slots=True)
class ArgRef:
    name: str


@dataclass(frozen=True, slots=True)
class PredLink:
    name: str
    arity: int
    dcg: bool

    @property
    def indicator(self) -> str:
        return f"{self.name}{'//' if self.dcg else '/'}{self.arity}"


@dataclass(frozen=True, slots=True)
class FileLink:
    path: str  # relative to the documented file's directory


@dataclass(frozen=True, slots=True)
class Image:
    path: str
    inline: bool


@dataclass(frozen=True, slots=True)
class Paragraph:
    content: tuple


@dataclass(frozen=True, slots=True)
class CodeBlock:
    text: str


@dataclass(frozen=True, slots=True)
class ListItem:
    content: tuple  # inlines of the item's first paragraph
    blocks: tuple  # nested blocks (sub-lists, further paragraphs)
    term: tuple | None = None  # description-list key inlines


@dataclass(frozen=True, slots=True)
class WikiList:
    kind: str  # "bulleted" | "numbered" | "description"
    items: tuple[ListItem, ...]


@dataclass(frozen=True, slots=True)
class TagSection:
    tags: tuple[Tag, ...]


@dataclass(frozen=True, slots=True)
class WikiDoc:
    blocks: tuple
    diagnostics: tuple[Diagnostic, ...] = field(default=())


# -- block parsing ---------------------------------------------------

_MARKER = re.compile(r"(?P<indent>\s*)(?P<marker>[-*]|\d+\.|\$)\s+(?P<rest>.*)\Z")
_DESC = re.compile(r"(?P<term>.+?)\s+:\s+(?P<rest>.*)\Z")


def parse_wiki(text: str, arg_names: tuple[str, ...] = ()) -> WikiDoc:
    """Parses wiki text; malformed markup degrades to plain text."""
    diagnostics: list[Diagnostic] = []
    blocks = _parse_blocks(text.split("\n"), arg_names, diagnostics)
    return WikiDoc(tuple(blocks), tuple(diagnostics))


def _parse_blocks(lines: list[str], arg_names, diagnostics) -> list:
    blocks: list = []
    i = 0
    n = len(lines)
    while i < n:
        line = lines[i]
        if not line.strip():
            i += 1
            continue
        if line.strip() == "==":
            body, i, closed = _take_fence(lines, i)
            if not closed:
                diagnostics.append(Diagnostic("warning", "code fence is never closed"))
            blocks.append(CodeBlock("\n".join(body)))
            continue
        m = _MARKER.match(line)
        if m:
            lst, i = _parse_list(lines, i, arg_names, diagnostics)
            blocks.append(lst)
            continue
        para: list[str] = []
        while i < n:
            line = lines[i]
            if not line.strip() or line.strip() == "==" or _MARKER.match(line):
                break
            para.append(line)
            i += 1
        blocks.append(Paragraph(tuple(parse_inlines("\n".join(para), arg_names))))
    return blocks


def _take_fence(lines: list[str], i: int) -> tuple[list[str], int, bool]:
    body: list[str] = []
    j = i + 1
    while j < len(lines):
        if lines[j].strip() == "==":
            return body, j + 1, True
        body.append(lines[j])
        j += 1
    return body, j, False


def _list_kind(marker: str) -> str:
    if marker in ("-", "*"):
        return "bulleted"
    if marker == "$":
        return "description"
    return "numbered"


def _parse_list(lines: list[str], i: int, arg_names, diagnostics):
    first = _MARKER.match(lines[i])
    column = len(first.group("indent"))
    kind = _list_kind(first.group("marker"))
    items: list[ListItem] = []
    n = len(lines)
    while i < n:
        m = _MARKER.match(lines[i])
        if not (m and len(m.group("indent")) == column and _list_kind(m.group("marker")) == kind):
            break
        content = [m.group("rest")]
        i += 1
        while i < n:
            line = lines[i]
            if not line.strip():
                # a blank line stays inside the item when deeper text follows
                j = i + 1
                while j < n and not lines[j].strip():
                    j += 1
                if j < n and _indent_of(lines[j]) > column:
                    content.extend(lines[i:j])
                    i = j
                    continue
                break
            if _indent_of(line) <= column:
                break
            content.append(line)
            i += 1
        items.append(_make_item(kind, content, arg_names, diagnostics))
    return WikiList(kind, tuple(items)), i


def _indent_of(line: str) -> int:
    return len(line) - len(line.lstrip())


def _make_item(kind, content, arg_names, diagnostics) -> ListItem:
    head, rest = content[0], content[1:]
    term = None
    if kind == "description":
        m = _DESC.match(head)
        if m:
            term = tuple(parse_inlines(m.group("term"), arg_names))
            head = m.group("rest")
        else:
            term = tuple(parse_inlines(head, arg_names))
            head = ""
    sub = _strip_common_indent(rest)
    blocks = _parse_blocks([head] + sub, arg_names, diagnostics)
    if blocks and isinstance(blocks[0], Paragraph):
        return ListItem(blocks[0].content, tuple(blocks[1:]), term)
    return ListItem((), tuple(blocks), term)


def _strip_common_indent(lines: list[str]) -> list[str]:
    margins = [_indent_of(ln) for ln in lines if ln.strip()]
    if not margins:
        return [ln.strip() for ln in lines]
    cut = min(margins)
    return [ln[cut:] if len(ln) >= cut else "" for ln in lines]


# -- inline parsing --------------------------------------------------

_INLINE = re.compile(
    r"""
    \*\|(?P<bblock>.*?)\|\*
  | _\|(?P<iblock>.*?)\|_
  | =\|(?P<cblock>.*?)\|=
  | \[\[(?P<imginline>[^\[\]\s]+?\.(?:png|gif|jpg|jpeg|svg))\]\]
  | (?<![\w*])\*(?P<bword>\w[\w-]*)\*(?!\w)
  | (?<!\w)_(?P<iword>\w[\w-]*)_(?!\w)
  | (?<![\w=])=(?P<cword>\w[\w./+-]*)=(?!\w)
    """,
    re.VERBOSE | re.DOTALL,
)

_AUTOLINK = re.compile(
    r"""
    (?<![\w/'])(?P<pname>[a-z]\w*|'(?:[^'\\\n]|\\.)+')(?P<psep>//?)(?P<parity>\d+)(?![\w/])
  | (?<![-\w/.])(?P<file>\w[\w/+-]*(?:\.\w+)*\.(?:pl|txt|png|gif|jpg|jpeg|svg))(?![\w.])
    """,
    re.VERBOSE,
)

_CAPWORD = re.compile(r"\b([A-Z]\w*)\b")


def parse_inlines(text: str, arg_names: tuple[str, ...] = ()) -> list:
    """Inline nodes of a paragraph; unrecognised markup stays Text."""
    out: list = []
    pos = 0
    for m in _INLINE.finditer(text):
        if m.start() > pos:
            out.extend(_autolink(text[pos:m.start()], arg_names))
        if m.group("bblock") is not None:
            out.append(Bold(tuple(parse_inlines(m.group("bblock"), arg_names))))
        elif m.group("iblock") is not None:
            out.append(Italic(tuple(parse_inlines(m.group("iblock"), arg_names))))
        elif m.group("cblock") is not None:
            out.append(Code(m.group("cblock")))
        elif m.group("imginline") is not None:
            out.append(Image(m.group("imginline"), inline=True))
        elif m.group("bword") is not None:
            out.append(Bold((Text(m.group("bword")),)))
        elif m.group("iword") is not None:
            out.append(Italic((Text(m.group("iword")),)))
        else:
            out.append(Code(m.group("cword")))
        pos = m.end()
    if pos < len(text):
        out.extend(_autolink(text[pos:], arg_names))
    return out


def _autolink(text: str, arg_names: tuple[str, ...]) -> list:
    out: list = []
    pos = 0
    for m in _AUTOLINK.finditer(text):
        if m.start() > pos:
            out.extend(_mark_args(text[pos:m.start()], arg_names))
        if m.group("pname") is not None:
            name = m.group("pname")
            if name.startswith("'"):
                name = name[1:-1]
            out.append(PredLink(name, int(m.group("parity")), m.group("psep") == "//"))
        else:
            path = m.group("file")
            if path.lower().endswith(IMAGE_EXTENSIONS):
                out.append(Image(path, inline=False))
            else:
                out.append(FileLink(path))
        pos = m.end()
    if pos < len(text):
        out.extend(_mark_args(text[pos:], arg_names))
    return out


def mark_args(nodes: list, arg_names: tuple[str, ...]) -> list:
    """Replays argument-reference marking over already-parsed inlines."""
    out = []
    for node in nodes:
        if isinstance(node, Text):
            out.extend(_mark_args(node.text, arg_names))
        else:
            out.append(node)
    return out


def _mark_args(text: str, arg_names: tuple[str, ...]) -> list:
    if not arg_names:
        return [Text(text)] if text else []
    out: list = []
    pos = 0
    for m in _CAPWORD.finditer(text):
        # a capitalised word refers to an argument only when the name is
        # unambiguous: duplicated argument names match nothing
        if sum(1 for a in arg_names if a == m.group(1)) != 1:
            continue
        if m.start() > pos:
            out.append(Text(text[pos:m.start()]))
        out.append(ArgRef(m.group(1)))
        pos = m.end()
    if pos < len(text):
        out.append(Text(text[pos:]))
    return out
