"""HTML rendering of documentation pages.

Markup is produced by builder functions, never by string pasting: the
only way text reaches a page is through the escaping in h(), so user
text cannot break out of its element.  Every page is a single-rooted
document that also parses as XML, which the test suite exploits.

The same renderers serve two modes.  Live pages (served over HTTP) use
absolute URLs under a base path and carry the search, zoom and reload
controls plus per-predicate edit buttons; static export uses relative
URLs and drops the controls.  Everything else is rendered identically
so the two outputs stay comparable.

Static file naming: a source file dir/name.pl documents to
dir/name.html with its colourized source at dir/name.src.html; wiki
text files append .html; every directory gets an index.html.
"""

from __future__ import annotations

import posixpath
import shutil
from dataclasses import dataclass, field
from pathlib import Path
from urllib.parse import quote

from .comments import StructuredComment, Tag, classify_comment, EmptyHeaderError
from .docdb import DocIndex, FileEntry, PredDoc, SearchHit
from .headers import (
    HeaderSyntaxError,
    ModeDecl,
    ModuleHeader,
    parse_formal_header,
)
from .reader import CommentRecord
from .wiki import (
    ArgRef,
    Bold,
    Code,
    CodeBlock,
    FileLink,
    IMAGE_EXTENSIONS,
    Image,
    Italic,
    Paragraph,
    PredLink,
    Text,
    WikiList,
    parse_inlines,
    parse_wiki,
)

_VOID = frozenset(("br", "img", "link", "meta", "hr", "input"))


def esc(text: str) -> str:
    return (text.replace("&", "&amp;").replace("<", "&lt;")
            .replace(">", "&gt;").replace('"', "&quot;"))


@dataclass(frozen=True, slots=True)
class Html:
    """A fragment that is already valid markup."""

    text: str


def _flatten(children, out: list[str]) -> None:
    for c in children:
        if isinstance(c, Html):
            out.append(c.text)
        elif isinstance(c, str):
            out.append(esc(c))
        elif c is None:
            continue
        else:
            _flatten(c, out)


def h(tag: str, *children, **attrs) -> Html:
    """Element builder; strings in children and attributes are escaped.

    The attribute name cls emits class; other underscores become
    hyphens (data_pred -> data-pred).
    """
    parts = [f"<{tag}"]
    for key, value in attrs.items():
        if value is None:
            continue
        key = "class" if key == "cls" else key.rstrip("_").replace("_", "-")
        parts.append(f' {key}="{esc(str(value))}"')
    if tag in _VOID and not children:
        parts.append("/>")
        return Html("".join(parts))
    parts.append(">")
    _flatten(children, parts)
    parts.append(f"</{tag}>")
    return Html("".join(parts))


@dataclass(frozen=True, slots=True)
class RenderOptions:
    public_only: bool = True
    edit_enabled: bool = False
    base_url: str = ""
    live: bool = True


@dataclass(frozen=True, slots=True)
class Page:
    title: str
    crumbs: tuple[str, ...]
    body: Html
    assets: tuple[str, ...]
    html: str


def static_name(rel: str) -> str:
    """Output file for a documented path in a static export."""
    if rel == "" or rel.endswith("/"):
        return posixpath.join(rel, "index.html")
    if rel.endswith(".pl"):
        return rel[:-3] + ".html"
    return rel + ".html"


class ServerUrls:
    def __init__(self, base: str = ""):
        self.base = base.rstrip("/")

    def doc_dir(self, rel: str) -> str:
        return f"{self.base}/doc/{quote(rel)}/" if rel else f"{self.base}/doc/"

    def doc_file(self, rel: str) -> str:
        return f"{self.base}/doc/{quote(rel)}"

    def source(self, rel: str) -> str:
        return f"{self.base}/source/{quote(rel)}"

    def asset(self, name: str) -> str:
        return f"{self.base}/assets/{quote(name)}"

    def raw_file(self, rel: str) -> str:
        return f"{self.base}/file/{quote(rel)}"


class StaticUrls:
    """Relative links from one exported page's directory."""

    def __init__(self, page_dir: str):
        self.page_dir = page_dir or "."

    def _rel(self, target: str) -> str:
        return posixpath.relpath(target, self.page_dir)

    def doc_dir(self, rel: str) -> str:
        return self._rel(f"{rel}/index.html" if rel else "index.html")

    def doc_file(self, rel: str) -> str:
        return self._rel(static_name(rel))

    def source(self, rel: str) -> str:
        if rel.endswith(".pl"):
            return self._rel(rel[:-3] + ".src.html")
        return self._rel(static_name(rel))

    def asset(self, name: str) -> str:
        return self._rel(f"assets/{name}")

    def raw_file(self, rel: str) -> str:
        return self._rel(rel)


def _urls_for(opts: RenderOptions, page_dir: str):
    return ServerUrls(opts.base_url) if opts.live else StaticUrls(page_dir)


@dataclass(frozen=True, slots=True)
class Linker:
    """Resolves documentation links against an index snapshot."""

    index: DocIndex
    urls: object
    cur_dir: str = ""  # directory of the documented file

    def pred(self, indicator: str) -> str | None:
        found = self.index.find_pred(indicator)
        if found is None:
            return None
        entry, pd = found
        return f"{self.urls.doc_file(entry.path)}#{quote(pd.indicator, safe='/')}"

    def _resolve(self, path: str) -> str:
        return posixpath.normpath(posixpath.join(self.cur_dir, path))

    def file(self, path: str) -> str | None:
        rel = self._resolve(path)
        if rel in self.index.files or rel in self.index.text_files:
            return self.urls.doc_file(rel)
        return None

    def image(self, path: str) -> str | None:
        rel = self._resolve(path)
        if rel.startswith(".."):
            return None
        if (Path(self.index.root) / rel).is_file():
            return self.urls.raw_file(rel)
        return None


def _inline(node, linker: Linker):
    if isinstance(node, Text):
        return node.text
    if isinstance(node, Bold):
        return h("b", *(_inline(n, linker) for n in node.content))
    if isinstance(node, Italic):
        return h("i", *(_inline(n, linker) for n in node.content))
    if isinstance(node, Code):
        return h("code", node.text)
    if isinstance(node, ArgRef):
        return h("var", node.name)
    if isinstance(node, PredLink):
        href = linker.pred(node.indicator)
        if href is None:
            return h("code", node.indicator, cls="pred-undoc")
        return h("a", node.indicator, href=href, cls="pred-link")
    if isinstance(node, FileLink):
        href = linker.file(node.path)
        if href is None:
            return node.path
        return h("a", node.path, href=href, cls="file-link")
    if isinstance(node, Image):
        src = linker.image(node.path)
        if src is None:
            return node.path
        return h("img", src=src, alt=node.path)
    return str(node)


def _inline_text(text: str, linker: Linker, arg_names: tuple[str, ...] = ()):
    return [_inline(n, linker) for n in parse_inlines(text, arg_names)]


def render_blocks(blocks, linker: Linker) -> list[Html]:
    out: list[Html] = []
    for b in blocks:
        if isinstance(b, Paragraph):
            out.append(h("p", *(_inline(n, linker) for n in b.content)))
        elif isinstance(b, CodeBlock):
            out.append(h("pre", b.text, cls="code"))
        elif isinstance(b, WikiList):
            out.append(_render_list(b, linker))
    return out


def _render_list(lst: WikiList, linker: Linker) -> Html:
    if lst.kind == "description":
        parts = []
        for item in lst.items:
            parts.append(h("dt", *(_inline(n, linker) for n in item.term or ())))
            parts.append(h("dd", *(_inline(n, linker) for n in item.content),
                           *render_blocks(item.blocks, linker)))
        return h("dl", *parts, cls="wiki")
    tag = "ol" if lst.kind == "numbered" else "ul"
    items = [h("li", *(_inline(n, linker) for n in item.content),
               *render_blocks(item.blocks, linker))
             for item in lst.items]
    return h(tag, *items, cls="wiki")


_TAG_LABELS = {
    "tbd": "To be done",
    "bug": "Known bugs",
    "see": "See also",
    "throws": "Throws",
    "author": "Author",
    "version": "Version",
    "deprecated": "Deprecated",
    "compat": "Compatibility",
    "copyright": "Copyright",
    "license": "License",
}


def _tags_dl(tags: tuple[Tag, ...], linker: Linker,
             arg_names: tuple[str, ...] = ()) -> Html:
    parts = []
    for tag in tags:
        if tag.keyword == "param":
            name, _, rest = tag.value.partition(" ")
            parts.append(h("dt", h("var", name), cls="tag-param"))
            parts.append(h("dd", *_inline_text(rest.strip(), linker, arg_names)))
        else:
            label = _TAG_LABELS.get(tag.keyword, tag.keyword.capitalize())
            parts.append(h("dt", label, cls=f"tag-{tag.keyword}"))
            parts.append(h("dd", *_inline_text(tag.value, linker, arg_names)))
    return h("dl", *parts, cls="tags")


def _mode_header(modes: tuple[ModeDecl, ...], edit_form: Html | None) -> Html:
    lines = []
    for i, mode in enumerate(modes):
        children: list = [h("code", mode.render())]
        if i == 0 and edit_form is not None:
            children.append(edit_form)
        lines.append(h("div", *children, cls="mode"))
    return h("div", *lines, cls="pred-header")


def _edit_form(indicator: str, opts: RenderOptions) -> Html | None:
    if not (opts.live and opts.edit_enabled):
        return None
    action = f"{opts.base_url}/edit?pred={quote(indicator, safe='/')}"
    return h("form",
             h("button", "edit", type="submit", cls="edit-button",
               data_pred=indicator),
             cls="edit-form", method="post", action=action)


def render_pred(pd: PredDoc, linker: Linker, opts: RenderOptions) -> Html:
    """One predicate's documentation block."""
    arg_names = tuple(dict.fromkeys(
        a.name for m in pd.modes for a in m.args))
    body = parse_wiki(pd.comment.body_text, arg_names)
    children = [
        _mode_header(pd.modes, _edit_form(pd.indicator, opts)),
        h("div", *render_blocks(body.blocks, linker), cls="pred-body"),
    ]
    if pd.comment.tags:
        children.append(_tags_dl(pd.comment.tags, linker, arg_names))
    cls = "pred-doc" if pd.is_public else "pred-doc private"
    return h("div", *children, cls=cls, id=pd.indicator)


def _module_section(entry: FileEntry, title: str, linker: Linker) -> Html:
    children: list = [h("h1", title, cls="module-title")]
    comment = entry.module.comment
    if comment is not None:
        body = parse_wiki(comment.body_text)
        children.extend(render_blocks(body.blocks, linker))
        if comment.tags:
            children.append(_tags_dl(comment.tags, linker))
    return h("div", *children, cls="module-doc")


def _crumbs(rel: str, urls) -> Html:
    parts: list = [h("a", "index", href=urls.doc_dir(""))]
    acc: list[str] = []
    pieces = [p for p in rel.split("/") if p]
    for part in pieces[:-1]:
        acc.append(part)
        parts.append(Html(" / "))
        parts.append(h("a", part, href=urls.doc_dir("/".join(acc))))
    if pieces:
        parts.append(Html(" / "))
        parts.append(h("span", pieces[-1], cls="here"))
    return h("div", *parts, cls="crumbs")


def _controls(opts: RenderOptions, *, zoom_target: str | None) -> Html | None:
    if not opts.live:
        return None
    base = opts.base_url
    children: list[Html] = [
        h("form",
          h("input", type="text", name="for", placeholder="search"),
          method="get", action=f"{base}/search", cls="search-form"),
    ]
    if zoom_target is not None:
        label = "zoom" if opts.public_only else "unzoom"
        flag = "false" if opts.public_only else "true"
        children.append(h("a", label, cls="zoom",
                          href=f"{zoom_target}?public_only={flag}"))
    children.append(h("form",
                      h("button", "reload", type="submit",
                        cls="reload-button"),
                      method="post", action=f"{base}/reload",
                      cls="reload-form"))
    return h("div", *children, cls="controls")


def _document(index: DocIndex, opts: RenderOptions, urls, title: str,
              crumbs: Html, body_parts: list, *,
              nav_links: list[Html] | None = None,
              zoom_target: str | None = None) -> Page:
    nav_children: list = [crumbs]
    nav_children.extend(nav_links or [])
    controls = _controls(opts, zoom_target=zoom_target)
    if controls is not None:
        nav_children.append(controls)
    head = h("head",
             h("meta", charset="utf-8"),
             h("title", title),
             h("link", rel="stylesheet", href=urls.asset("doc.css")),
             h("script", "", src=urls.asset("ui.js"), defer="defer"))
    body = h("body",
             h("div", *nav_children, cls="navbar"),
             h("div", *body_parts, cls="content"),
             h("div", "prodoc generation ",
               h("span", str(index.generation), cls="generation"),
               cls="footer"),
             data_generation=str(index.generation))
    html = "<!DOCTYPE html>\n" + h("html", head, body).text + "\n"
    content = h("div", *body_parts, cls="content")
    return Page(title=title, crumbs=(), body=content,
                assets=("doc.css", "ui.js"), html=html)


def render_file_page(index: DocIndex, rel: str,
                     opts: RenderOptions = RenderOptions()) -> Page:
    """Documentation page of one source file."""
    entry = index.files[rel]
    page_dir = posixpath.dirname(rel)
    urls = _urls_for(opts, page_dir)
    linker = Linker(index, urls, page_dir)
    title = entry.module.title or rel
    parts: list = [_module_section(entry, title, linker)]
    for pd in entry.preds:
        if opts.public_only and not pd.is_public:
            continue
        parts.append(render_pred(pd, linker, opts))
    undoc = index.undocumented_exports(rel)
    if undoc:
        parts.append(h("div",
                       h("h2", "Undocumented predicates"),
                       h("ul", *(h("li", h("code", u)) for u in undoc)),
                       cls="undocumented"))
    nav = [h("a", "source", href=urls.source(rel), cls="source-link")]
    return _document(index, opts, urls, title, _crumbs(rel, urls), parts,
                     nav_links=nav,
                     zoom_target=urls.doc_file(rel) if opts.live else None)


def _entries_in(index: DocIndex, reldir: str):
    prefix = f"{reldir}/" if reldir else ""
    files, texts, subdirs = [], [], set()
    for rel in sorted(index.files):
        if not rel.startswith(prefix):
            continue
        rest = rel[len(prefix):]
        if "/" in rest:
            subdirs.add(rest.split("/", 1)[0])
        else:
            files.append(rel)
    for rel in sorted(index.text_files):
        if not rel.startswith(prefix):
            continue
        rest = rel[len(prefix):]
        if "/" in rest:
            subdirs.add(rest.split("/", 1)[0])
        else:
            texts.append(rel)
    return files, texts, sorted(subdirs)


def render_dir_page(index: DocIndex, reldir: str,
                    opts: RenderOptions = RenderOptions()) -> Page:
    """Directory index: README, subdirectories, files and their preds."""
    reldir = reldir.strip("/")
    files, texts, subdirs = _entries_in(index, reldir)
    if reldir and not (files or texts or subdirs):
        raise KeyError(reldir)
    urls = _urls_for(opts, reldir)
    linker = Linker(index, urls, reldir)
    title = reldir or "Documentation index"
    parts: list = [h("h1", title, cls="dir-title")]
    readme = index.readme_for(reldir)
    if readme is not None:
        doc = parse_wiki(index.text_files[readme])
        parts.append(h("div", *render_blocks(doc.blocks, linker),
                       cls="readme"))
    if subdirs:
        parts.append(h("ul", *(h("li", h("a", f"{d}/",
                                         href=urls.doc_dir(
                                             f"{reldir}/{d}" if reldir else d)))
                               for d in subdirs),
                       cls="subdirs"))
    for rel in files:
        entry = index.files[rel]
        name = rel.rsplit("/", 1)[-1]
        head = h("div",
                 h("a", name, href=urls.doc_file(rel), cls="file-link"),
                 Html(" "),
                 h("a", "source", href=urls.source(rel), cls="source-link"),
                 cls="file-head")
        rows = []
        for pd in entry.preds:
            if not pd.is_public:
                continue
            rows.append(h("li",
                          h("a", pd.indicator,
                            href=f"{urls.doc_file(rel)}#"
                                 f"{quote(pd.indicator, safe='/')}",
                            cls="pred-link"),
                          Html(" "),
                          h("span", pd.summary.text, cls="summary")))
        children: list = [head]
        if entry.module.title:
            children.append(h("div", entry.module.title, cls="file-title"))
        if rows:
            children.append(h("ul", *rows, cls="file-preds"))
        parts.append(h("div", *children, cls="file-section"))
    for rel in texts:
        name = rel.rsplit("/", 1)[-1]
        parts.append(h("div", h("a", name, href=urls.doc_file(rel),
                                cls="file-link"),
                      cls="file-section text"))
    return _document(index, opts, urls, title, _crumbs(reldir, urls), parts)


def _comment_doc(index: DocIndex, sc: StructuredComment, linker: Linker,
                 opts: RenderOptions) -> Html | None:
    """Rendered block for a structured comment on a source page."""
    try:
        parsed = parse_formal_header(sc.header_text)
    except HeaderSyntaxError:
        return None
    if isinstance(parsed, ModuleHeader):
        body = parse_wiki(sc.body_text)
        children: list = [h("h2", parsed.title, cls="module-title")]
        children.extend(render_blocks(body.blocks, linker))
        if sc.tags:
            children.append(_tags_dl(sc.tags, linker))
        return h("div", *children, cls="comment-doc module-doc")
    arg_names = tuple(dict.fromkeys(
        a.name for m in parsed for a in m.args))
    body = parse_wiki(sc.body_text, arg_names)
    children = [
        _mode_header(tuple(parsed), None),
        h("div", *render_blocks(body.blocks, linker), cls="pred-body"),
    ]
    if sc.tags:
        children.append(_tags_dl(sc.tags, linker, arg_names))
    return h("div", *children, cls="comment-doc pred-doc")


def render_source_page(index: DocIndex, rel: str,
                       opts: RenderOptions = RenderOptions()) -> Page:
    """Colourized source with structured comments rendered as HTML."""
    entry = index.files[rel]
    page_dir = posixpath.dirname(rel)
    urls = _urls_for(opts, page_dir)
    linker = Linker(index, urls, page_dir)
    text = entry.text
    parts: list = []
    pre: list = []

    def flush():
        if pre:
            parts.append(h("pre", *pre, cls="source"))
            pre.clear()

    pos = 0
    for span in entry.colours:
        if span.span.start > pos:
            pre.append(text[pos:span.span.start])
        piece = text[span.span.start:span.span.end]
        if span.cls == "structured_comment":
            style = "block" if piece.startswith("/*") else "line"
            record = CommentRecord(piece, span.span, style)
            rendered = None
            try:
                sc = classify_comment(record)
            except EmptyHeaderError:
                sc = None
            if sc is not None:
                rendered = _comment_doc(index, sc, linker, opts)
            if rendered is not None:
                flush()
                parts.append(rendered)
                pos = span.span.end
                continue
        pre.append(h("span", piece, cls=span.cls.replace("_", "-")))
        pos = span.span.end
    if pos < len(text):
        pre.append(text[pos:])
    flush()
    if not parts:
        parts.append(h("pre", text, cls="source"))
    nav = [h("a", "documentation", href=urls.doc_file(rel), cls="doc-link")]
    return _document(index, opts, urls, rel, _crumbs(rel, urls), parts,
                     nav_links=nav)


def render_text_page(index: DocIndex, rel: str,
                     opts: RenderOptions = RenderOptions()) -> Page:
    """A wiki text file (README and friends) as a page."""
    text = index.text_files[rel]
    page_dir = posixpath.dirname(rel)
    urls = _urls_for(opts, page_dir)
    linker = Linker(index, urls, page_dir)
    doc = parse_wiki(text)
    parts = [h("div", *render_blocks(doc.blocks, linker), cls="textfile")]
    return _document(index, opts, urls, rel, _crumbs(rel, urls), parts)


def render_search_page(index: DocIndex, query: str, hits: list[SearchHit],
                       opts: RenderOptions = RenderOptions()) -> Page:
    urls = _urls_for(opts, "")
    rows = []
    for hit in hits:
        if hit.kind == "pred":
            href = f"{urls.doc_file(hit.file)}#{quote(hit.target, safe='/')}"
        else:
            href = urls.doc_file(hit.file)
        cls = "hit" if hit.is_public else "hit private"
        rows.append(h("li",
                      h("a", hit.target, href=href),
                      Html(" "),
                      h("span", hit.summary, cls="summary"),
                      cls=cls))
    title = f"Search: {query}"
    parts: list = [h("h1", title)]
    if rows:
        parts.append(h("ul", *rows, cls="search-hits"))
    else:
        parts.append(h("p", "No matches.", cls="no-hits"))
    return _document(index, opts, urls, title, _crumbs("", urls), parts)


def _asset_dir() -> Path:
    return Path(__file__).resolve().parent / "assets"


def export_static(index: DocIndex, outdir: str | Path, *,
                  public_only: bool = True) -> tuple[str, ...]:
    """Write the whole documentation tree as static HTML files."""
    outp = Path(outdir)
    outp.mkdir(parents=True, exist_ok=True)
    opts = RenderOptions(live=False, public_only=public_only)
    written: list[str] = []

    def write(rel: str, content: str) -> None:
        path = outp / rel
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(content, encoding="utf-8")
        written.append(rel)

    dirs = {""}
    for rel in list(index.files) + list(index.text_files):
        d = posixpath.dirname(rel)
        while d:
            dirs.add(d)
            d = posixpath.dirname(d)
    for d in sorted(dirs):
        write(f"{d}/index.html" if d else "index.html",
              render_dir_page(index, d, opts).html)
    for rel in sorted(index.files):
        write(static_name(rel), render_file_page(index, rel, opts).html)
        write(rel[:-3] + ".src.html",
              render_source_page(index, rel, opts).html)
    for rel in sorted(index.text_files):
        write(static_name(rel), render_text_page(index, rel, opts).html)

    assets = _asset_dir()
    if assets.is_dir():
        (outp / "assets").mkdir(exist_ok=True)
        for asset in sorted(assets.iterdir()):
            if asset.is_file():
                shutil.copy(asset, outp / "assets" / asset.name)
                written.append(f"assets/{asset.name}")

    rootp = Path(index.root)
    for img in sorted(rootp.rglob("*")):
        if img.is_file() and img.suffix.lower() in IMAGE_EXTENSIONS:
            rel = img.relative_to(rootp).as_posix()
            if any(p.startswith(".") for p in rel.split("/")):
                continue
            dest = outp / rel
            dest.parent.mkdir(parents=True, exist_ok=True)
            shutil.copy(img, dest)
            written.append(rel)
    return tuple(sorted(written))
