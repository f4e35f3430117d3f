"""Command-line interface.

Every subcommand with a ``--json`` flag prints the same payload the HTTP
service would return for the equivalent request, so scripted callers can
switch between the two surfaces freely. Exit codes: 0 success, 1 user error,
2 internal failure.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path

from . import service
from .documents import DocumentSource, fetch_url, load_text_file
from .encoders import DECODABLE_FORMATS, ENCODING_FORMATS
from .errors import HiveError
from .evaluation import run_eval
from .indexing import index_batch, write_batch_jsonl
from .ingest import ingest_file
from .keywords import ALGORITHMS, ExtractionConfig
from .store import STORE_ENV_VAR, Store, default_store_path

log = logging.getLogger(__name__)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse that reports usage problems as exit-1 user errors."""

    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hive", description="SKOS terminology engine")
    parser.add_argument(
        "--store",
        default=None,
        help=f"store directory (default: ${STORE_ENV_VAR} or {default_store_path()!r})",
    )
    parser.add_argument("--verbose", action="store_true", help="debug logging")
    sub = parser.add_subparsers(dest="command", metavar="command")

    p = sub.add_parser("ingest", help="load an RDF ontology file")
    p.add_argument("path")
    p.add_argument("--id", default=None, help="ontology id (default: from filename)")
    p.add_argument("--name", default=None, help="display name")
    p.add_argument(
        "--format",
        default="auto",
        choices=("auto", "rdf-xml", "turtle", "ntriples"),
    )
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("list", help="list loaded ontologies")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("search", help="search concepts by label or note text")
    p.add_argument("query")
    p.add_argument("--onts", default="", help="comma-separated ontology ids (default all)")
    p.add_argument("--offset", type=int, default=0)
    p.add_argument("--limit", type=int, default=service.DEFAULT_LIMIT)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("index", help="extract keywords from one document and match them")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--file", default=None, help="plain-text file")
    src.add_argument("--url", default=None, help="web page to scrape")
    src.add_argument("--text", default=None, help="literal text")
    p.add_argument("--ontologies", required=True, help="comma-separated ontology ids")
    p.add_argument("--algorithm", default="rake", choices=ALGORITHMS)
    p.add_argument("--max-phrase-len", type=int, default=3)
    p.add_argument("--top-k", type=int, default=30)
    p.add_argument("--sort", default="score")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("batch", help="index every .txt document in a directory")
    p.add_argument("--dir", required=True)
    p.add_argument("--out", required=True, help="results JSONL path")
    p.add_argument("--ontologies", required=True)
    p.add_argument("--algorithm", default="rake", choices=ALGORITHMS)
    p.add_argument("--max-phrase-len", type=int, default=3)
    p.add_argument("--top-k", type=int, default=30)

    p = sub.add_parser("export-concept", help="print one concept in a standard encoding")
    p.add_argument("--ont", required=True)
    p.add_argument("--uri", required=True)
    p.add_argument("--format", required=True, choices=ENCODING_FORMATS)

    p = sub.add_parser("eval", help="relevance-study statistics from results + judgments")
    p.add_argument("--results", required=True)
    p.add_argument("--judgments", required=True)
    p.add_argument("--k", type=int, default=4)
    p.add_argument("--n", type=int, default=5)
    p.add_argument(
        "--combined",
        default=None,
        help="extracted,relevant,partial totals for the combined-relevancy block",
    )
    p.add_argument("--docs", type=int, default=None, help="document count for the mean")
    p.add_argument("--out", default=None, help="write the summary JSON here")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--port", type=int, default=service.DEFAULT_PORT)
    p.add_argument("--host", default="127.0.0.1")

    return parser


def _store_path(args) -> str:
    return args.store or os.environ.get(STORE_ENV_VAR) or default_store_path()


def _emit(payload: dict) -> None:
    print(json.dumps(payload, indent=2, ensure_ascii=False))


def _cmd_ingest(args) -> int:
    with Store.open(_store_path(args)) as store:
        record, report = ingest_file(
            store,
            args.path,
            format=args.format,
            ontology_id=args.id,
            display_name=args.name,
        )
    if args.json:
        _emit({"ontology": record.to_dict(), "report": report.to_dict()})
    else:
        print(
            f"loaded {record.id!r}: {record.concept_count} concepts "
            f"({record.source_format}, {len(record.root_uris)} roots)"
        )
        counts = report.to_dict()
        flagged = {k: v for k, v in counts.items() if v and k != "concepts_emitted"}
        if flagged:
            print("  " + ", ".join(f"{k}={v}" for k, v in sorted(flagged.items())))
    return 0


def _cmd_list(args) -> int:
    with Store.open(_store_path(args)) as store:
        payload = service.ontologies_payload(store.snapshot())
    if args.json:
        _emit(payload)
        return 0
    if not payload["ontologies"]:
        print("(no ontologies)")
        return 0
    for record in payload["ontologies"]:
        print(
            f"{record['id']}: {record['display_name']} "
            f"({record['concept_count']} concepts, {record['source_format']})"
        )
    return 0


def _cmd_search(args) -> int:
    ids = [part for part in args.onts.split(",") if part] or None
    with Store.open(_store_path(args)) as store:
        payload = service.search_payload(
            store.snapshot(), args.query, ids, args.offset, args.limit
        )
    if args.json:
        _emit(payload)
        return 0
    if not payload["groups"]:
        print("(no matches)")
        return 0
    for group in payload["groups"]:
        print(f"{group['ontology_id']} ({group['total']}):")
        for concept in group["concepts"]:
            print(f"  {concept['pref_label']}  <{concept['uri']}>")
    return 0


def _document_from_args(args) -> DocumentSource:
    if args.file is not None:
        return load_text_file(args.file)
    if args.url is not None:
        return fetch_url(args.url)
    return DocumentSource.from_text(args.text)


def _cmd_index(args) -> int:
    config = ExtractionConfig(
        algorithm=args.algorithm,
        max_phrase_len=args.max_phrase_len,
        top_k=args.top_k,
    )
    config.validate()
    source = _document_from_args(args)
    ids = [part for part in args.ontologies.split(",") if part]
    if not ids:
        raise HiveError("--ontologies must name at least one ontology")
    with Store.open(_store_path(args)) as store:
        payload = service.index_payload(store.snapshot(), source, ids, config, args.sort)
    if args.json:
        _emit(payload)
        return 0
    print(
        f"{payload['candidates_total']} candidate phrases "
        f"({config.algorithm}, {payload['elapsed_ms']:.0f} ms)"
    )
    arranged = payload["arranged"]
    groups = arranged.get("groups") or [{"ontology_id": "merged", "hits": arranged["hits"]}]
    for group in groups:
        print(f"{group['ontology_id']}:")
        if not group["hits"]:
            print("  (no hits)")
        for hit in group["hits"]:
            print(
                f"  [{hit['display_weight']}] {hit['pref_label']} "
                f"(score {hit['score']:.2f})  <{hit['uri']}>"
            )
    return 0


def _cmd_batch(args) -> int:
    directory = Path(args.dir)
    if not directory.is_dir():
        raise HiveError(f"not a directory: {args.dir}")
    sources: list[DocumentSource | tuple[str, str]] = []
    for path in sorted(directory.glob("*.txt")):
        try:
            sources.append(load_text_file(str(path)))
        except OSError as exc:
            sources.append((str(path), f"unreadable: {exc}"))
    if not sources:
        raise HiveError(f"no .txt documents under {args.dir}")
    config = ExtractionConfig(
        algorithm=args.algorithm,
        max_phrase_len=args.max_phrase_len,
        top_k=args.top_k,
    )
    config.validate()
    ids = [part for part in args.ontologies.split(",") if part]
    with Store.open(_store_path(args)) as store:
        entries = index_batch(store.snapshot(), sources, ids, config)
    write_batch_jsonl(entries, args.out)
    failed = sum(1 for e in entries if e.error is not None)
    print(f"indexed {len(entries) - failed} documents, {failed} failed -> {args.out}")
    return 0


def _cmd_export_concept(args) -> int:
    with Store.open(_store_path(args)) as store:
        body = service.encoding_body(store.snapshot(), args.ont, args.uri, args.format)
    sys.stdout.write(body)
    return 0


def _cmd_eval(args) -> int:
    combined = None
    if args.combined:
        parts = args.combined.split(",")
        if len(parts) != 3:
            raise HiveError("--combined takes extracted,relevant,partial")
        try:
            combined = (int(parts[0]), int(parts[1]), int(parts[2]))
        except ValueError as exc:
            raise HiveError(f"--combined values must be integers: {exc}") from exc
    summary = run_eval(
        args.results,
        args.judgments,
        k=args.k,
        n=args.n,
        combined=combined,
        combined_docs=args.docs,
    )
    data = summary.to_dict()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(data, fh, indent=2)
            fh.write("\n")
    if args.json:
        _emit(data)
        return 0
    totals = data["totals"]
    print(
        f"candidates {totals['candidates']}, relevant {totals['relevant']}, "
        f"precision {totals['precision_pct']:.2f}%"
    )
    for section in ("per_article", "per_ontology"):
        print(section.replace("_", " ") + ":")
        for row in data[section]:
            print(
                f"  {row['key']}: {row['relevant']}/{row['candidates']} "
                f"= {row['precision_pct']:.2f}%"
            )
    if "combined_relevancy_pct" in data:
        print(f"combined relevancy: {data['combined_relevancy_pct']:.2f}%")
    if args.out:
        print(f"summary written to {args.out}")
    return 0


def _cmd_serve(args) -> int:
    service.serve(_store_path(args), port=args.port, host=args.host)
    return 0


_COMMANDS = {
    "ingest": _cmd_ingest,
    "list": _cmd_list,
    "search": _cmd_search,
    "index": _cmd_index,
    "batch": _cmd_batch,
    "export-concept": _cmd_export_concept,
    "eval": _cmd_eval,
    "serve": _cmd_serve,
}

# decoders exist for these, so scripted export/import round-trips are possible
assert set(DECODABLE_FORMATS) <= set(ENCODING_FORMATS)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"hive: {exc}", file=sys.stderr)
        return 1
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    if not args.command:
        parser.print_help()
        return 1
    handler = _COMMANDS[args.command]
    try:
        return handler(args)
    except _UsageError as exc:
        print(f"hive: {exc}", file=sys.stderr)
        return 1
    except HiveError as exc:
        print(f"hive: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"hive: {exc}", file=sys.stderr)
        return 1
    except KeyboardInterrupt:
        return 1
    except Exception as exc:  # noqa: BLE001 - last-resort boundary
        log.exception("internal error")
        print(f"hive: internal error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
