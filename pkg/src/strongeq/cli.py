"""Command-line front end: decide, witness, oracle, reduce, crosscheck, min-subgraph, setcheck.

Exit codes: 0/1/2 for EQUIVALENT/NOT-EQUIVALENT/UNKNOWN, 3 when a computation
refuses (size limits, uncharacterized patterns), 64 for usage errors and 65
for malformed or unreadable input files.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from .deciders import Verdict, decide, min_equivalent_subgraph, np_reduce_kcolor, EmptyInput
from .graphs import GraphFormatError, DegenerateSpec, Graph, parse_graph, serialize_graph
from .oracle import (
    DEFAULT_MAX_CANDIDATES,
    OracleBudget,
    all_graph_pairs,
    crosscheck,
    sampled_graph_pairs,
    search,
)
from .properties import EmptyPattern, PropertySelector, SelectorError, TooLarge
from .setcore import bounded_strengthen, classify_threshold_form, equiv_from_property, parse_subset_family
from .witnesses import Unsupported, witness_for

EXIT_REFUSED = 3
EXIT_USAGE = 64
EXIT_DATAERR = 65


class UsageError(Exception):
    pass


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class CliConfig:
    subcommand: str
    prop: PropertySelector | None = None
    files: list[str] = field(default_factory=list)
    fresh: int | None = None
    max_edges: int | None = None
    budget: int | None = None
    seed: int = 0
    json: bool = False

    def oracle_budget(self) -> OracleBudget:
        base = OracleBudget.default_for(self.prop)
        return OracleBudget(
            fresh_count=base.fresh_count if self.fresh is None else self.fresh,
            max_edges=self.max_edges,
            max_candidates=DEFAULT_MAX_CANDIDATES if self.budget is None else self.budget,
        )


def read_graph(path: str) -> Graph:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"{path}: cannot read: {exc.strerror}") from None
    try:
        return parse_graph(text)
    except GraphFormatError as exc:
        raise InputError(f"{path}: {exc}") from None


def _load_pattern(path: str) -> Graph:
    g = read_graph(path)
    if not g:
        raise InputError(f"{path}: pattern graph has no edges")
    return g


def _selector(text: str) -> PropertySelector:
    try:
        return PropertySelector.parse(text, load_pattern=_load_pattern)
    except (SelectorError, EmptyPattern) as exc:
        raise UsageError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="strongeq", description="Strong equivalence of graphs under graph properties.")
    sub = parser.add_subparsers(dest="subcommand", parser_class=_Parser)
    sub.required = True

    def common(p, with_property=True):
        if with_property:
            p.add_argument("--property", required=True,
                           help="ham | planar | subgraph:<file> | kcolor:<k> | edge2color | kconn:<k> | kconn-psi:<k>")
        p.add_argument("--fresh", type=int, help="fresh vertices in the oracle pool")
        p.add_argument("--max-edges", type=int, help="largest extension the oracle tries")
        p.add_argument("--budget", type=int, help="candidate cap (oracle) or subset cap (min-subgraph)")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--json", action="store_true", help="one JSON record per line")

    for name in ("decide", "witness", "oracle"):
        p = sub.add_parser(name)
        common(p)
        p.add_argument("g")
        p.add_argument("h")

    p = sub.add_parser("reduce", help="k-colorability reduction instance")
    p.add_argument("problem", choices=["kcolor"])
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("g")

    p = sub.add_parser("crosscheck", help="decider vs witnesses and bounded oracle")
    common(p)
    p.add_argument("--vertices", type=int, default=4, help="number of labeled vertices")
    p.add_argument("--samples", type=int, help="sample this many pairs instead of all pairs")
    p.add_argument("--no-refute", action="store_true",
                   help="accept NotEquivalent on a verified witness alone")

    p = sub.add_parser("min-subgraph", help="fewest-edge k-connectivity-equivalent subgraph")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--budget", type=int, default=1_000_000)
    p.add_argument("--json", action="store_true")
    p.add_argument("g")

    p = sub.add_parser("setcheck", help="threshold-form classification of a subset family")
    p.add_argument("--json", action="store_true")
    p.add_argument("family")
    return parser


def _emit(out, args, record: dict, text: str):
    if args.json:
        print(json.dumps(record, sort_keys=True), file=out)
    else:
        print(text, file=out)


def _edges(g: Graph | None):
    return None if g is None else [list(e) for e in g.sorted_edges()]


def _cmd_decide(args, out) -> int:
    prop = _selector(args.property)
    g, h = read_graph(args.g), read_graph(args.h)
    res = decide(prop, g, h)
    _emit(out, args, {"property": str(prop), "verdict": res.verdict.value, "reason": res.reason},
          res.verdict.value)
    return res.verdict.exit_code


def _cmd_witness(args, out) -> int:
    prop = _selector(args.property)
    g, h = read_graph(args.g), read_graph(args.h)
    res = decide(prop, g, h)
    if res.verdict is not Verdict.NOT_EQUIVALENT:
        _emit(out, args, {"property": str(prop), "verdict": res.verdict.value, "extension": None},
              f"# {res.verdict.value}")
        return res.verdict.exit_code
    w = witness_for(prop, g, h)
    header = f"# {res.verdict.value} side={w.property_side} construction={w.construction}"
    body = serialize_graph(w.extension)
    _emit(out, args, {"property": str(prop), "verdict": res.verdict.value,
                      "side": w.property_side, "construction": w.construction,
                      "extension": _edges(w.extension)},
          header + ("\n" + body if body else ""))
    return res.verdict.exit_code


_ORACLE_EXIT = {"found": 1, "exhausted": 0, "budget": 2}


def _cmd_oracle(args, out) -> int:
    prop = _selector(args.property)
    g, h = read_graph(args.g), read_graph(args.h)
    cfg = CliConfig("oracle", prop, fresh=args.fresh, max_edges=args.max_edges, budget=args.budget)
    res = search(prop, g, h, cfg.oracle_budget())
    if res.status == "found":
        text = "# found\n" + serialize_graph(res.extension) if res.extension else "# found"
    else:
        text = res.status
    _emit(out, args, {"property": str(prop), "status": res.status,
                      "extension": _edges(res.extension), "candidates": res.candidates}, text)
    return _ORACLE_EXIT[res.status]


def _cmd_reduce(args, out) -> int:
    g_prime = read_graph(args.g)
    if args.k < 3:
        raise UsageError("the reduction needs --k >= 3")
    g, h = np_reduce_kcolor(g_prime, args.k)
    _emit(out, args, {"g": _edges(g), "h": _edges(h), "k": args.k},
          serialize_graph(g) + "\n\n" + serialize_graph(h))
    return 0


def _cmd_crosscheck(args, out) -> int:
    prop = _selector(args.property)
    if not 1 <= args.vertices <= 5:
        raise UsageError("--vertices must be between 1 and 5")
    labels = "abcde"[:args.vertices]
    if args.samples is None:
        pairs = all_graph_pairs(labels)
    else:
        pairs = sampled_graph_pairs(labels, args.samples, args.seed)
    cfg = CliConfig("crosscheck", prop, fresh=args.fresh, max_edges=args.max_edges, budget=args.budget)
    report = crosscheck(prop, pairs, cfg.oracle_budget(), refute=not args.no_refute)
    if args.json:
        for rec in report.violations:
            print(rec.to_json(), file=out)
        print(json.dumps({"summary": report.summary(), "violations": len(report.violations)}), file=out)
    else:
        for rec in report.violations:
            print(f"VIOLATION {rec.verdict.value} g={serialize_graph(rec.g).replace(chr(10), ',')} "
                  f"h={serialize_graph(rec.h).replace(chr(10), ',')} oracle={rec.oracle} "
                  f"witness_ok={rec.witness_ok} {rec.note}".rstrip(), file=out)
        print(report.summary(), file=out)
    return 0 if not report.violations else 1


def _cmd_min_subgraph(args, out) -> int:
    if args.k < 1:
        raise UsageError("--k must be at least 1")
    g = read_graph(args.g)
    res = min_equivalent_subgraph(g, args.k, budget=args.budget)
    if res.subgraph is None:
        _emit(out, args, {"subgraph": None, "examined": res.examined, "reason": res.reason},
              f"# none: {res.reason} after {res.examined} subsets")
        return EXIT_REFUSED
    _emit(out, args, {"subgraph": _edges(res.subgraph), "examined": res.examined},
          serialize_graph(res.subgraph))
    return 0


def _cmd_setcheck(args, out) -> int:
    try:
        with open(args.family, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"{args.family}: cannot read: {exc.strerror}") from None
    try:
        prop = parse_subset_family(text)
    except ValueError as exc:
        raise InputError(f"{args.family}: {exc}") from None
    form = classify_threshold_form(prop)
    rel = equiv_from_property(prop)
    fixed = bounded_strengthen(rel) == rel
    name = type(form).__name__
    elems = sorted(getattr(form, "elements", ()))
    text = f"{name}" + (f" X={{{','.join(elems)}}}" if name != "Neither" else "")
    text += f"\nstrengthening-fixed={str(fixed).lower()}"
    _emit(out, args, {"form": name, "elements": elems if name != "Neither" else None,
                      "strengthening_fixed": fixed}, text)
    return 0


COMMANDS = {
    "decide": _cmd_decide,
    "witness": _cmd_witness,
    "oracle": _cmd_oracle,
    "reduce": _cmd_reduce,
    "crosscheck": _cmd_crosscheck,
    "min-subgraph": _cmd_min_subgraph,
    "setcheck": _cmd_setcheck,
}


def run(argv: list[str], out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.subcommand](args, out)
    except UsageError as exc:
        print(f"strongeq: usage error: {exc}", file=err)
        return EXIT_USAGE
    except InputError as exc:
        print(f"strongeq: input error: {exc}", file=err)
        return EXIT_DATAERR
    except EmptyInput as exc:
        print(f"strongeq: input error: {exc}", file=err)
        return EXIT_DATAERR
    except (TooLarge, Unsupported, DegenerateSpec) as exc:
        print(f"strongeq: refused: {exc}", file=err)
        return EXIT_REFUSED


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
