"""Local HTTP server publishing the documentation pages.

Request handling is split in two: DocService maps (method, path,
query, peer) to a Response with no socket involved, so tests drive it
directly; DocServer is the threaded stdlib glue around it.

The index is an immutable snapshot.  Each request renders from the
snapshot it read at entry, and a reload builds the replacement off to
the side before a single reference swap, so pages never mix
generations.  Editing and reloading change state on the serving host
and stay restricted to loopback peers no matter what --allow says.
"""

from __future__ import annotations

import ipaddress
import json
import mimetypes
import os
import subprocess
import threading
from dataclasses import dataclass
from fnmatch import fnmatch
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path
from urllib.parse import parse_qsl, unquote, urlsplit

from .docdb import DocIndex, build_index, reload_index
from .htmlgen import (
    RenderOptions,
    render_dir_page,
    render_file_page,
    render_search_page,
    render_source_page,
    render_text_page,
)
from .wiki import IMAGE_EXTENSIONS


@dataclass(frozen=True, slots=True)
class ServerConfig:
    root: str
    port: int = 4040
    allow: tuple[str, ...] = ()  # extra peer patterns; loopback always passes
    editor_command: str | None = None
    public_only: bool = True


@dataclass(frozen=True, slots=True)
class Response:
    status: int
    content_type: str
    body: bytes
    headers: tuple[tuple[str, str], ...] = ()

    @classmethod
    def html(cls, page_html: str, status: int = 200) -> "Response":
        return cls(status, "text/html; charset=utf-8",
                   page_html.encode("utf-8"))

    @classmethod
    def text(cls, message: str, status: int = 200) -> "Response":
        return cls(status, "text/plain; charset=utf-8",
                   message.encode("utf-8"))

    @classmethod
    def json(cls, payload, status: int = 200) -> "Response":
        return cls(status, "application/json",
                   json.dumps(payload).encode("utf-8"))


def is_loopback(peer: str) -> bool:
    try:
        return ipaddress.ip_address(peer).is_loopback
    except ValueError:
        return peer == "localhost"


def _default_spawn(argv: list[str]) -> None:
    subprocess.Popen(argv, start_new_session=True,
                     stdout=subprocess.DEVNULL, stderr=subprocess.DEVNULL)


class DocService:
    """Maps requests to responses over a swappable index snapshot."""

    def __init__(self, config: ServerConfig, index: DocIndex | None = None,
                 *, spawn=None):
        self.config = config
        self._index = index if index is not None else build_index(config.root)
        self._lock = threading.Lock()
        self._spawn = spawn if spawn is not None else _default_spawn

    @property
    def index(self) -> DocIndex:
        return self._index

    def peer_allowed(self, peer: str) -> bool:
        if is_loopback(peer):
            return True
        return any(fnmatch(peer, pat) for pat in self.config.allow)

    def reload(self) -> DocIndex:
        """Rebuild changed files and swap the snapshot in one step."""
        with self._lock:
            new = reload_index(self._index)
            self._index = new
        return new

    def handle(self, method: str, path: str, query: dict[str, str],
               peer: str) -> Response:
        if not self.peer_allowed(peer):
            return Response.text("forbidden", 403)
        try:
            return self._route(method, path, query, peer)
        except Exception as exc:  # noqa: BLE001 - one request must not kill the server
            return Response.text(f"internal error: {exc}", 500)

    def _route(self, method: str, path: str, query: dict[str, str],
               peer: str) -> Response:
        if path == "/":
            return Response(302, "text/plain", b"",
                            headers=(("Location", "/doc/"),))
        if path == "/reload":
            if method != "POST":
                return Response.text("POST required", 405)
            if not is_loopback(peer):
                return Response.text("reload is loopback only", 403)
            new = self.reload()
            return Response.json({"generation": new.generation,
                                  "parsed": list(new.parsed_files)})
        if path == "/edit":
            if method != "POST":
                return Response.text("POST required", 405)
            return self._edit(query.get("pred", ""), peer)
        if method != "GET":
            return Response.text("GET required", 405)
        if path == "/search":
            return self._search_page(query, peer)
        if path == "/api/search":
            return self._search_api(query)
        if path.startswith("/assets/"):
            return self._asset(path[len("/assets/"):])
        if path.startswith("/file/"):
            return self._raw_file(path[len("/file/"):])
        if path.startswith("/doc/"):
            return self._doc(path[len("/doc/"):], query, peer)
        if path.startswith("/source/"):
            return self._source(path[len("/source/"):], peer)
        return Response.text("not found", 404)

    def _options(self, query: dict[str, str], peer: str) -> RenderOptions:
        public_only = self.config.public_only
        flag = query.get("public_only")
        if flag is not None:
            public_only = flag.lower() not in ("false", "no", "0")
        return RenderOptions(public_only=public_only,
                             edit_enabled=is_loopback(peer), live=True)

    def _doc(self, rel: str, query: dict[str, str], peer: str) -> Response:
        index = self.index
        opts = self._options(query, peer)
        if rel.endswith("/") or rel == "":
            try:
                page = render_dir_page(index, rel.rstrip("/"), opts)
            except KeyError:
                return Response.text("not found", 404)
            return Response.html(page.html)
        if rel in index.files:
            return Response.html(render_file_page(index, rel, opts).html)
        if rel in index.text_files:
            return Response.html(render_text_page(index, rel, opts).html)
        try:
            page = render_dir_page(index, rel, opts)
        except KeyError:
            return Response.text("not found", 404)
        return Response.html(page.html)

    def _source(self, rel: str, peer: str) -> Response:
        index = self.index
        if rel not in index.files:
            return Response.text("not found", 404)
        opts = self._options({}, peer)
        return Response.html(render_source_page(index, rel, opts).html)

    def _search_page(self, query: dict[str, str], peer: str) -> Response:
        index = self.index
        q = query.get("for", "").strip()
        include_private = query.get("in", "all") != "public"
        hits = index.search(q, include_private=include_private) if q else []
        opts = self._options(query, peer)
        return Response.html(render_search_page(index, q, hits, opts).html)

    def _search_api(self, query: dict[str, str]) -> Response:
        q = query.get("for", "").strip()
        hits = self.index.search(q) if q else []
        return Response.json([{"target": hit.target,
                               "kind": hit.kind,
                               "summary": hit.summary,
                               "public": hit.is_public,
                               "score": hit.score,
                               "file": hit.file}
                              for hit in hits])

    def _edit(self, indicator: str, peer: str) -> Response:
        if not is_loopback(peer):
            return Response.text("editing is loopback only", 403)
        if not indicator:
            return Response.text("missing pred parameter", 404)
        found = self.index.find_definition(indicator)
        if found is None:
            return Response.text(f"no definition for {indicator}", 404)
        entry, line = found
        editor = (self.config.editor_command
                  or os.environ.get("VISUAL")
                  or os.environ.get("EDITOR"))
        if not editor:
            return Response.text("no editor configured", 500)
        target = Path(self.config.root) / entry.path
        try:
            self._spawn(editor.split() + [f"+{line}", str(target)])
        except OSError as exc:
            return Response.text(f"editor failed: {exc}", 500)
        return Response.text(f"editing {indicator} at {entry.path}:{line}",
                             202)

    def _asset(self, name: str) -> Response:
        if "/" in name or name.startswith("."):
            return Response.text("not found", 404)
        path = Path(__file__).resolve().parent / "assets" / name
        if not path.is_file():
            return Response.text("not found", 404)
        ctype = mimetypes.guess_type(name)[0] or "application/octet-stream"
        return Response(200, ctype, path.read_bytes())

    def _raw_file(self, rel: str) -> Response:
        rel = unquote(rel)
        if Path(rel).suffix.lower() not in IMAGE_EXTENSIONS:
            return Response.text("not found", 404)
        root = Path(self.index.root).resolve()
        target = (root / rel).resolve()
        if not target.is_file() or not target.is_relative_to(root):
            return Response.text("not found", 404)
        ctype = mimetypes.guess_type(target.name)[0] or "application/octet-stream"
        return Response(200, ctype, target.read_bytes())


class _Handler(BaseHTTPRequestHandler):
    def _dispatch(self, method: str, send_body: bool = True) -> None:
        parts = urlsplit(self.path)
        query = dict(parse_qsl(parts.query, keep_blank_values=True))
        resp = self.server.service.handle(
            method, unquote(parts.path), query, self.client_address[0])
        self.send_response(resp.status)
        self.send_header("Content-Type", resp.content_type)
        self.send_header("Content-Length", str(len(resp.body)))
        for key, value in resp.headers:
            self.send_header(key, value)
        self.end_headers()
        if send_body:
            self.wfile.write(resp.body)

    def do_GET(self):  # noqa: N802 - stdlib naming
        self._dispatch("GET")

    def do_HEAD(self):  # noqa: N802
        self._dispatch("GET", send_body=False)

    def do_POST(self):  # noqa: N802
        length = int(self.headers.get("Content-Length") or 0)
        if length:
            self.rfile.read(length)
        self._dispatch("POST")

    def log_message(self, format, *args):  # noqa: A002 - stdlib signature
        pass


class DocServer(ThreadingHTTPServer):
    daemon_threads = True

    def __init__(self, config: ServerConfig, service: DocService):
        host = "" if config.allow else "127.0.0.1"
        super().__init__((host, config.port), _Handler)
        self.service = service
        self._thread: threading.Thread | None = None

    @property
    def url(self) -> str:
        return f"http://127.0.0.1:{self.server_address[1]}/"

    def start(self) -> "DocServer":
        """Serve on a background thread; the caller stays in control."""
        self._thread = threading.Thread(target=self.serve_forever,
                                        daemon=True)
        self._thread.start()
        return self

    def stop(self) -> None:
        self.shutdown()
        self.server_close()
        if self._thread is not None:
            self._thread.join(timeout=5)


def start_server(config: ServerConfig, *, spawn=None) -> DocServer:
    """Build the index, bind the port and serve in the background."""
    service = DocService(config, spawn=spawn)
    return DocServer(config, service).start()
