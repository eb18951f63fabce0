"""Command-line interface: corpus indexing, queries, graph export, serving.

Exit codes: 0 success, 1 runtime failure, 2 usage error. Data goes to stdout,
diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from pathlib import Path

from .clustering import ClusterMethod, ClusterParams
from .corpus import Corpus, CorpusFormatError, FolksonomyIndex, build_index, load_corpus
from .queryengine import RANKINGS, execute, make_query
from .service import ServiceConfig, serve
from .similarity import Measure
from .vizmodel import build_display_graph, to_dot, to_json

USAGE_ERROR = 2
RUNTIME_ERROR = 1


def _fail(message: str, code: int) -> int:
    print(message, file=sys.stderr)
    return code


def _read_corpus(path: str) -> tuple[Corpus, FolksonomyIndex]:
    data = Path(path).read_bytes()
    corpus = load_corpus(data)
    return corpus, build_index(corpus)


def _add_query_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--corpus", required=True, help="path to a JSONL corpus file")
    sub.add_argument("--q", required=True, help="base query tag")
    sub.add_argument("--and", action="append", dest="and_terms", default=[],
                     metavar="TAG", help="AND refinement tag (repeatable)")
    sub.add_argument("--measure", choices=[m.value for m in Measure], default="cosine")
    sub.add_argument("--method", choices=[m.value for m in ClusterMethod], default="single")
    sub.add_argument("--threshold", type=float, default=0.5)
    sub.add_argument("--ranking", choices=list(RANKINGS), default="absolute")
    sub.add_argument("--support-floor", type=int, default=50)
    sub.add_argument("--page", type=int, default=1)
    sub.add_argument("--page-size", type=int, default=20)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tagclust",
                                     description="Tag co-occurrence clustering over bookmark corpora")
    commands = parser.add_subparsers(dest="command", required=True)

    p_index = commands.add_parser("index", help="parse a corpus and print summary counts")
    p_index.add_argument("corpus", help="path to a JSONL corpus file")

    p_query = commands.add_parser("query", help="run a query and print the result")
    _add_query_flags(p_query)
    p_query.add_argument("--format", choices=["json", "dot", "table"], default="json")

    p_export = commands.add_parser("export-graph", help="write the cluster graph to a file")
    _add_query_flags(p_export)
    p_export.add_argument("--format", choices=["json", "dot"], default="json")
    p_export.add_argument("--out", required=True, help="output file path")

    p_serve = commands.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("--port", type=int, default=None)
    p_serve.add_argument("--host", default="127.0.0.1")

    return parser


def cmd_index(args: argparse.Namespace) -> int:
    try:
        corpus, index = _read_corpus(args.corpus)
    except OSError as exc:
        return _fail(f"cannot read corpus: {exc}", USAGE_ERROR)
    except CorpusFormatError as exc:
        return _fail(f"corpus parse error: {exc}", RUNTIME_ERROR)
    print(f"bookmarks={len(corpus.bookmarks)} tags={len(index.tag_universe)} "
          f"duplicates={corpus.duplicates_dropped}")
    return 0


def _run_query(args: argparse.Namespace):
    """Shared validation + execution for query and export-graph; raises nothing."""
    if not 0.0 <= args.threshold <= 1.0:
        return _fail("threshold must lie in [0, 1]", USAGE_ERROR), None
    if args.support_floor < 1:
        return _fail("support floor must be >= 1", USAGE_ERROR), None
    if args.page < 1 or args.page_size < 1:
        return _fail("page and page size must be >= 1", USAGE_ERROR), None
    try:
        query = make_query(args.q, args.and_terms)
    except ValueError as exc:
        return _fail(str(exc), USAGE_ERROR), None
    try:
        _, index = _read_corpus(args.corpus)
    except OSError as exc:
        return _fail(f"cannot read corpus: {exc}", USAGE_ERROR), None
    except CorpusFormatError as exc:
        return _fail(f"corpus parse error: {exc}", RUNTIME_ERROR), None
    params = ClusterParams(
        measure=Measure(args.measure),
        method=ClusterMethod(args.method),
        threshold=args.threshold,
        support_floor=args.support_floor,
    )
    result = execute(index, query, params, ranking=args.ranking,
                     page=args.page, page_size=args.page_size)
    return 0, result


def _render(result, fmt: str) -> bytes:
    if fmt == "json":
        return (json.dumps(result.to_dict(), ensure_ascii=False) + "\n").encode("utf-8")
    if fmt == "dot":
        return to_dot(build_display_graph(result.graph))
    lines = [f"{hit.rank}\t{hit.score:.6f}\t{hit.bookmark.url}" for hit in result.hits]
    return ("".join(line + "\n" for line in lines)).encode("utf-8")


def cmd_query(args: argparse.Namespace) -> int:
    code, result = _run_query(args)
    if result is None:
        return code
    sys.stdout.write(_render(result, args.format).decode("utf-8"))
    sys.stdout.flush()
    return 0


def cmd_export_graph(args: argparse.Namespace) -> int:
    code, result = _run_query(args)
    if result is None:
        return code
    payload = _render(result, args.format)
    try:
        Path(args.out).write_bytes(payload)
    except OSError as exc:
        return _fail(f"cannot write {args.out}: {exc}", USAGE_ERROR)
    return 0


def cmd_serve(args: argparse.Namespace) -> int:
    try:
        config = ServiceConfig.from_env()
    except ValueError as exc:
        return _fail(f"bad service configuration: {exc}", RUNTIME_ERROR)
    if args.port is not None:
        try:
            config = replace(config, listen_port=args.port)
        except ValueError as exc:
            return _fail(str(exc), USAGE_ERROR)
    try:
        serve(config, host=args.host)
    except OSError as exc:
        return _fail(f"cannot listen on port {config.listen_port}: {exc}", RUNTIME_ERROR)
    except SystemExit as exc:
        # uvicorn signals startup failure (e.g. port in use) by exiting
        if exc.code:
            return _fail(f"service failed to start on port {config.listen_port}",
                         RUNTIME_ERROR)
    except KeyboardInterrupt:
        pass
    return 0


_COMMANDS = {
    "index": cmd_index,
    "query": cmd_query,
    "export-graph": cmd_export_graph,
    "serve": cmd_serve,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE_ERROR
    return _COMMANDS[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
