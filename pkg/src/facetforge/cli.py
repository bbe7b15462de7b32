"""Command-line surface: validate, convert, stats, index, serve.

Exit codes: 0 success (and validation pass), 1 validation errors,
2 parse/IO errors, 3 usage errors.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .errors import OntologyError
from .indexer import build_automaton, index_document
from .iobase import ParseOutcome
from .jsonio import serialize_canonical_json
from .model import FACET_ORDER, stats
from .service import create_app, load_registry, parse_ontology_file
from .turtleio import serialize_skos_turtle
from .validate import validate

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_PARSE = 2
EXIT_USAGE = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse defaults to exit code 2
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _load(path_arg: str) -> ParseOutcome:
    """Load an ontology file, printing warnings to stderr."""
    path = Path(path_arg)
    outcome = parse_ontology_file(path)
    for warning in outcome.warnings:
        print(
            f"warning: {path}:{warning.line}:{warning.column}: "
            f"{warning.code}: {warning.message}",
            file=sys.stderr,
        )
    return outcome


def _cmd_validate(args) -> int:
    report = validate(_load(args.file).ontology)
    print(json.dumps(report.to_json_dict(), indent=2, ensure_ascii=False))
    return EXIT_OK if report.passed else EXIT_VALIDATION


def _cmd_convert(args) -> int:
    ontology = _load(args.file).ontology
    if args.to == "json":
        sys.stdout.buffer.write(serialize_canonical_json(ontology))
    else:
        sys.stdout.write(serialize_skos_turtle(ontology))
    sys.stdout.flush()
    return EXIT_OK


def _cmd_stats(args) -> int:
    counts = stats(_load(args.file).ontology)
    print(json.dumps(counts.to_json_dict(), indent=2, ensure_ascii=False))
    return EXIT_OK


def _cmd_index(args) -> int:
    ontology = _load(args.ontology).ontology
    automaton = build_automaton(ontology)
    if args.textfile == "-":
        text = sys.stdin.read()
    else:
        text = Path(args.textfile).read_text(encoding="utf-8")
    result = index_document(automaton, text)
    if args.plain:
        for facet in FACET_ORDER:
            aggregates = result.per_facet.get(facet)
            if not aggregates:
                continue
            print(f"{facet.value}:")
            for agg in aggregates:
                print(f"  {agg.concept_id}  score={agg.score} count={agg.count}")
        print(f"notation: {result.notation}")
    else:
        print(json.dumps(result.to_json_dict(), indent=2, ensure_ascii=False))
    return EXIT_OK


def resolve_port(explicit: int | None) -> int:
    """--port wins; FACETFORGE_PORT is the fallback, then 8000."""
    if explicit is not None:
        return explicit
    return int(os.environ.get("FACETFORGE_PORT", "8000"))


def _cmd_serve(args) -> int:
    import uvicorn

    registry = load_registry(Path(args.ontologies))
    for path, message in registry.failures:
        print(f"skipped {path}: {message}", file=sys.stderr)
    if not registry.entries:
        print("no ontologies loaded", file=sys.stderr)
    app = create_app(registry, cors_origin=args.cors_origin)
    uvicorn.run(app, host=args.host, port=resolve_port(args.port))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="facetforge", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check facet rules; exit 1 on errors")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_validate)

    p = sub.add_parser("convert", help="convert between canonical JSON and Turtle")
    p.add_argument("file")
    p.add_argument("--to", choices=("json", "ttl"), required=True)
    p.set_defaults(fn=_cmd_convert)

    p = sub.add_parser("stats", help="facet concept/label counts")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_stats)

    p = sub.add_parser("index", help="extract ontology concepts from a text file")
    p.add_argument("--ontology", required=True)
    p.add_argument("textfile", help="path to a UTF-8 text file, or - for stdin")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--json", action="store_true", default=True)
    group.add_argument("--plain", action="store_true")
    p.set_defaults(fn=_cmd_index)

    p = sub.add_parser("serve", help="serve search/browse/index over HTTP")
    p.add_argument("--ontologies", required=True, help="directory of .json/.ttl files")
    p.add_argument("--port", type=int, default=None,
                   help="overrides the FACETFORGE_PORT environment variable")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--cors-origin", default="*")
    p.set_defaults(fn=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except OntologyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
