"""Command-line interface.

Exit status is 0 on success, 1 on a domain error (the error class name is
printed on stderr) and 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .dot import export_dot
from .errors import DsrwError, FuelExhausted, NoMatch, ParseError
from .rewrite import find_lrr_matches, gr_step, lrr_step, normalize_trace
from .syntax import parse_graph_document, parse_rules, serialize_graph


class _UsageError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc.strerror}") from exc


def _emit(args, graph, name: str) -> None:
    sys.stdout.write(export_dot(graph, name) if args.dot else serialize_graph(graph, name))


def cmd_check(args) -> None:
    doc = parse_graph_document(_read(args.graph))
    _emit(args, doc.graph, doc.name)


def cmd_dot(args) -> None:
    doc = parse_graph_document(_read(args.graph))
    sys.stdout.write(export_dot(doc.graph, doc.name))


def cmd_match(args) -> None:
    system = parse_rules(_read(args.rules))
    doc = parse_graph_document(_read(args.graph))
    for k, m in enumerate(find_lrr_matches(system.rule(args.rule), doc.graph)):
        print(f"# match {k}")
        for n in sorted(m.mu.map):
            print(f"{n} -> {m.mu(n)}")


def cmd_apply(args) -> None:
    system = parse_rules(_read(args.rules))
    doc = parse_graph_document(_read(args.graph))
    rule = system.rule(args.rule)
    matches = find_lrr_matches(rule, doc.graph)
    if not 0 <= args.match < len(matches):
        raise NoMatch(f"rule {rule.name} has {len(matches)} matches; cannot take match {args.match}")
    _emit(args, lrr_step(rule, matches[args.match]).result, doc.name)


def cmd_redirect(args) -> None:
    doc = parse_graph_document(_read(args.graph))
    _emit(args, gr_step(doc.graph, args.source, args.target).result, doc.name)


def cmd_normalize(args) -> None:
    system = parse_rules(_read(args.rules))
    doc = parse_graph_document(_read(args.graph))
    roots = args.trim.split(",") if args.trim else None
    try:
        out = normalize_trace(system, doc.graph, fuel=args.fuel, roots=roots)
    except FuelExhausted as exc:
        sys.stdout.write(serialize_graph(exc.graph, doc.name))
        raise
    print(f"// {len(out.steps)} steps", file=sys.stderr)
    _emit(args, out.graph, doc.name)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dsrw", description="Data-structure rewriting by double pushouts.")
    sub = p.add_subparsers(dest="command", required=True)

    def command(name, func, help):
        sp = sub.add_parser(name, help=help)
        sp.set_defaults(func=func)
        sp.add_argument("--dot", action="store_true", help="emit DOT instead of a graph document")
        return sp

    sp = command("check", cmd_check, "validate a graph file and print it in canonical form")
    sp.add_argument("graph")

    sp = command("dot", cmd_dot, "print a graph file as DOT")
    sp.add_argument("graph")

    sp = command("match", cmd_match, "list the matches of a rule")
    sp.add_argument("--rules", required=True)
    sp.add_argument("--rule", required=True)
    sp.add_argument("graph")

    sp = command("apply", cmd_apply, "apply one rule at one match")
    sp.add_argument("--rules", required=True)
    sp.add_argument("--rule", required=True)
    sp.add_argument("--match", type=int, default=0, metavar="K")
    sp.add_argument("graph")

    sp = command("redirect", cmd_redirect, "redirect all edges into one node to another")
    sp.add_argument("--from", dest="source", required=True)
    sp.add_argument("--to", dest="target", required=True)
    sp.add_argument("graph")

    sp = command("normalize", cmd_normalize, "rewrite until no rule applies")
    sp.add_argument("--rules", required=True)
    sp.add_argument("--fuel", type=int, default=None)
    sp.add_argument("--trim", default=None, metavar="ID,...")
    sp.add_argument("graph")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args)
    except (_UsageError, ParseError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except DsrwError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
