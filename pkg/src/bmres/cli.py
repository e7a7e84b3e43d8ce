"""Command line front end.

Exit codes: 0 success (minimal resolution certified, or verification
passed), 2 non-minimal or failed verification, 1 error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import io
from .exceptions import InconsistencyError, MatchingError, TheoremViolation
from .matching import OrderingFamily, TotalOrdering, generalized_bm
from .monomials import artinian_reduction
from .morse import critical_cells
from .search import SearchConfig, main_theorem_pipeline, search_family
from .taylor import build_taylor
from .verification import betti_oracle, check_resolution, is_minimal

EXIT_OK, EXIT_ERROR, EXIT_FAIL = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, "%s: error: %s\n" % (self.prog, message))


def _ideal_args(p, required=True):
    g = p.add_mutually_exclusive_group(required=required)
    g.add_argument("--inline", help="generators, e.g. 'xy,yz,xz' or '1,1,0;0,1,1'")
    g.add_argument("--input", help="ideal file, one monomial per line")
    p.add_argument("--vars", help="comma-separated variable names, in order")
    p.add_argument("--artinian", help="exponents n_1,...,n_N of the added pure powers")


def _search_args(p):
    p.add_argument("--strategy", default="hybrid", choices=["proof-guided", "exhaustive", "hybrid"])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--best-effort", action="store_true", help="allow more than five generators in J")


def _load(args):
    variables = args.vars.split(",") if args.vars else None
    if args.inline is not None:
        J = io.parse_inline(args.inline, variables)
    elif args.input is not None:
        J = io.read_ideal(args.input, variables)
    else:
        return None, None
    n = io.parse_csv(args.artinian) if args.artinian else None
    return J, n


def _ideal(args):
    J, n = _load(args)
    if J is None or n is None:
        return J
    return artinian_reduction(J, n)


def _config(args):
    return SearchConfig(strategy=args.strategy, seed=args.seed, best_effort=args.best_effort)


def _emit(args, obj):
    print(json.dumps(obj, sort_keys=True, indent=None if args.compact else 1))


def cmd_betti(args):
    I = _ideal(args)
    betti = betti_oracle(I)
    if args.json:
        _emit(args, {"ideal": [io.format_csv(g) for g in I.gens], "betti": io.betti_to_json(betti), "totals": list(betti.totals)})
    else:
        for i, p, v in betti.rows():
            print(i, io.format_csv(p), v)
        print("totals:", " ".join(str(t) for t in betti.totals))
    return EXIT_OK


def cmd_taylor(args):
    I = _ideal(args)
    T = build_taylor(I)
    res = check_resolution(I, T)
    if args.json:
        _emit(args, io.complex_to_json(T))
    else:
        print("ranks:", " ".join(str(r) for r in T.ranks))
        print("resolution:", "yes" if res else "no")
        print("minimal:", "yes" if is_minimal(T) else "no")
    return EXIT_OK if res else EXIT_FAIL


def cmd_matching(args):
    I = _ideal(args)
    if args.order:
        fam = OrderingFamily.uniform(I, TotalOrdering(io.parse_csv(args.order)))
    else:
        fam = search_family(I, _config(args)).family
    A = generalized_bm(I, fam)
    if args.json:
        _emit(args, io.matching_to_json(I, A))
    else:
        for e in io.matching_to_json(I, A):
            print("%d -> %d  lcm %s" % (e["source"], e["target"], e["lcm"]))
        print("edges:", len(A))
        print("critical:", " ".join(str(len(c)) for c in critical_cells(I, A) if c))
    return EXIT_OK


def cmd_search(args):
    J, n = _load(args)
    I = artinian_reduction(J, n) if n else J
    out = search_family(I, _config(args))
    rows = []
    for p, e in sorted(out.per_point_log.items()):
        rows.append({"lcm": io.format_csv(p), "order": list(out.family[p].order), "source": e.source, "tried": [[list(h), c] for h, c in e.tried]})
    if args.json:
        _emit(args, {"certified": out.certified, "points": rows})
    else:
        for r in rows:
            print("%s  order %s  (%s, %d tried)" % (r["lcm"], ",".join(map(str, r["order"])), r["source"], len(r["tried"])))
        print("certified:", "yes" if out.certified else "no")
    return EXIT_OK if out.certified else EXIT_FAIL


def cmd_resolve(args):
    J, n = _load(args)
    report = main_theorem_pipeline(J, n, _config(args))
    if args.json:
        _emit(args, io.report_to_json(report))
    else:
        A = report.matching
        print("ideal:", report.ideal)
        print("matching size:", len(A))
        print("critical cells:", " ".join(str(r) for r in report.ranks))
        print("betti totals:", " ".join(str(t) for t in report.betti.totals))
        print("resolution:", "yes" if report.resolution else "no")
        print("minimal:", "yes" if report.certified else "no")
        if not report.search.certified:
            for p, e in sorted(report.search.per_point_log.items()):
                if not e.certified:
                    print("  no clean ordering at %s (best had %d bad paths)" % (io.format_csv(p), min(c for _, c in e.tried)))
    ok = report.certified and report.resolution
    if report.original is not None:
        ok = ok and report.original.certified
    return EXIT_OK if ok else EXIT_FAIL


def cmd_verify(args):
    with open(args.complex) as f:
        data = json.load(f)
    if "complex" in data:
        if args.inline is None and args.input is None:
            args.inline = ";".join(data["ideal"])
        data = data["complex"]
    I = _ideal(args)
    if I is None:
        raise io.SchemaError("no ideal given")
    C = io.complex_from_json(data, I)
    res = check_resolution(I, C)
    minimal = is_minimal(C)
    if args.json:
        _emit(args, {"resolution": bool(res), "minimal": minimal, "problems": res.problems})
    else:
        print("resolution:", "yes" if res else "no")
        for msg in res.problems[:10]:
            print("  " + msg)
        print("minimal:", "yes" if minimal else "no")
    return EXIT_OK if res else EXIT_FAIL


def build_parser():
    parser = _Parser(prog="bmres", description="Barile-Macchia resolutions of monomial ideals")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help, search=False, required=True):
        p = sub.add_parser(name, help=help)
        _ideal_args(p, required)
        if search:
            _search_args(p)
        p.add_argument("--json", action="store_true")
        p.add_argument("--compact", action="store_true", help="single-line JSON")
        p.set_defaults(func=func)
        return p

    add("betti", cmd_betti, "multigraded Betti numbers")
    add("taylor", cmd_taylor, "Taylor resolution")
    p = add("matching", cmd_matching, "generalized Barile-Macchia matching", search=True)
    p.add_argument("--order", help="one ordering for every lattice point, greatest first")
    add("search-orderings", cmd_search, "per-point ordering search", search=True)
    add("resolve", cmd_resolve, "minimal resolution pipeline", search=True)
    p = add("verify", cmd_verify, "check a complex read from JSON", required=False)
    p.add_argument("complex", help="complex JSON, or a report written by 'resolve --json'")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except (TheoremViolation, InconsistencyError, MatchingError) as exc:
        print("internal error: %s" % exc, file=sys.stderr)
        return EXIT_ERROR
    except (ValueError, OSError, KeyError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
