"""Command line entry points.

Commands: serve (live documentation server), build (static export),
lint (documentation problems, exit 1 if any), search (query the index
from the shell).  Exit codes: 0 success, 1 problems found or runtime
failure, 2 usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import threading

from .docdb import DocIndex, build_index
from .htmlgen import export_static
from .server import ServerConfig, start_server
from .xref import indicator_alternates


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="prodoc",
        description="Generate and serve documentation for Prolog sources.")
    sub = parser.add_subparsers(dest="command", required=True)

    serve = sub.add_parser("serve", help="serve documentation over HTTP")
    serve.add_argument("root", help="source tree to document")
    serve.add_argument("--port", type=int, default=4040,
                       help="TCP port, 0 picks a free one (default 4040)")
    serve.add_argument("--allow", action="append", default=[],
                       metavar="PATTERN",
                       help="allow non-loopback peers matching this "
                            "pattern (repeatable)")
    serve.add_argument("--editor", metavar="CMD",
                       help="editor command for the edit buttons "
                            "(default $VISUAL or $EDITOR)")
    serve.add_argument("--private", action="store_true",
                       help="show private predicates by default")

    build = sub.add_parser("build", help="write a static documentation site")
    build.add_argument("root", help="source tree to document")
    build.add_argument("--out", required=True, metavar="DIR",
                       help="output directory")
    build.add_argument("--private", action="store_true",
                       help="include private predicates")

    lint = sub.add_parser("lint",
                          help="report documentation problems, exit 1 if any")
    lint.add_argument("root", help="source tree to check")
    lint.add_argument("--format", choices=("text", "json"), default="text")

    search = sub.add_parser("search", help="query the documentation index")
    search.add_argument("root", help="source tree to search")
    search.add_argument("query", help="search words")
    search.add_argument("--format", choices=("text", "json"), default="text")
    search.add_argument("--private", action="store_true",
                        help="include private predicates")
    return parser


def _cmd_serve(args) -> int:
    config = ServerConfig(root=args.root, port=args.port,
                          allow=tuple(args.allow),
                          editor_command=args.editor,
                          public_only=not args.private)
    try:
        server = start_server(config)
    except OSError as exc:
        print(f"prodoc: cannot serve: {exc}", file=sys.stderr)
        return 1
    print(f"serving documentation for {args.root} at {server.url}doc/",
          flush=True)
    try:
        threading.Event().wait()
    except KeyboardInterrupt:
        pass
    finally:
        server.stop()
    return 0


def _cmd_build(args) -> int:
    try:
        index = build_index(args.root)
    except OSError as exc:
        print(f"prodoc: cannot read {args.root}: {exc}", file=sys.stderr)
        return 1
    written = export_static(index, args.out, public_only=not args.private)
    print(f"wrote {len(written)} files to {args.out}")
    return 0


def _lint_findings(index: DocIndex) -> list[dict]:
    findings = []
    for rel, entry in index.files.items():
        for diag in entry.diagnostics:
            findings.append({"file": diag.file or rel, "line": diag.line,
                             "severity": diag.severity,
                             "message": diag.message})
        for indicator in index.undocumented_exports(rel):
            line = next((entry.def_lines[alt]
                         for alt in indicator_alternates(indicator)
                         if alt in entry.def_lines), entry.module.line)
            findings.append({"file": rel, "line": line,
                             "severity": "warning",
                             "message": f"exported {indicator} "
                                        "is not documented"})
    return findings


def _cmd_lint(args) -> int:
    try:
        index = build_index(args.root)
    except OSError as exc:
        print(f"prodoc: cannot read {args.root}: {exc}", file=sys.stderr)
        return 1
    findings = _lint_findings(index)
    if args.format == "json":
        print(json.dumps(findings, indent=2))
    else:
        for f in findings:
            where = f["file"] if f["line"] is None else f"{f['file']}:{f['line']}"
            print(f"{where}: {f['severity']}: {f['message']}")
    return 1 if findings else 0


def _cmd_search(args) -> int:
    try:
        index = build_index(args.root)
    except OSError as exc:
        print(f"prodoc: cannot read {args.root}: {exc}", file=sys.stderr)
        return 1
    hits = index.search(args.query, include_private=args.private)
    if args.format == "json":
        print(json.dumps([{"target": hit.target, "kind": hit.kind,
                           "summary": hit.summary, "public": hit.is_public,
                           "score": hit.score, "file": hit.file}
                          for hit in hits], indent=2))
    else:
        for hit in hits:
            print(f"{hit.score:3d}  {hit.target:24s} {hit.summary}")
    return 0


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    commands = {"serve": _cmd_serve, "build": _cmd_build,
                "lint": _cmd_lint, "search": _cmd_search}
    return commands[args.command](args)


if __name__ == "__main__":
    raise SystemExit(main())
