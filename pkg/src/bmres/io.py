"""Reading ideals and reading/writing matchings, complexes and reports.

Ideal text holds one monomial per line, either as an exponent CSV
(``1,1,0``) or symbolically (``x1*x2``, ``x1^2``, ``xy^2``). ``#`` starts a
comment and blank lines are ignored.
"""

from __future__ import annotations

import json
import re

from .exceptions import ParseError, SchemaError
from .matching import AcyclicMatching
from .monomials import MonomialIdeal, minimalize
from .taylor import ChainComplex

_FACTOR = re.compile(r"\s*([A-Za-z]_?\d*)\s*(?:\^\s*(\d+))?\s*\*?")
_LETTERS = "xyzwvutsrqponmlkjihgfedcba"


def format_csv(m) -> str:
    return ",".join(str(e) for e in m)


def parse_csv(text: str):
    return tuple(int(e) for e in text.split(","))


def format_monomial(m, names=None) -> str:
    """Symbolic form; variables default to x1..xN."""
    if not any(m):
        return "1"
    if names is None:
        names = ["x%d" % (i + 1) for i in range(len(m))]
    out = []
    for name, e in zip(names, m):
        if e == 1:
            out.append(name)
        elif e:
            out.append("%s^%d" % (name, e))
    return "*".join(out)


def _parse_symbolic(text, lineno):
    factors = []
    pos = 0
    text = text.strip()
    if text == "1":
        return factors
    while pos < len(text):
        match = _FACTOR.match(text, pos)
        if not match or match.end() == pos:
            raise ParseError("cannot read monomial %r at %r" % (text, text[pos:]), lineno)
        name, exp = match.group(1), match.group(2)
        if text[match.end(1) :].lstrip().startswith("^") and exp is None:
            raise ParseError("missing exponent in %r" % text, lineno)
        factors.append((name.replace("_", ""), int(exp) if exp is not None else 1))
        pos = match.end()
    if text.endswith("*"):
        raise ParseError("dangling '*' in %r" % text, lineno)
    return factors


def _variable_order(names):
    indexed = {}
    for n in names:
        m = re.fullmatch(r"[A-Za-z](\d+)", n)
        if not m or int(m.group(1)) == 0:
            indexed = None
            break
        indexed[n] = int(m.group(1)) - 1
    if indexed is not None and len({n[0] for n in names}) == 1:
        return indexed, max(indexed.values()) + 1
    rank = {c: k for k, c in enumerate(_LETTERS)}
    ordered = sorted(names, key=lambda n: (rank.get(n[0].lower(), 99), n))
    return {n: k for k, n in enumerate(ordered)}, len(ordered)


def parse_monomials(lines, variables=None) -> list:
    """Exponent vectors from monomial strings.

    ``lines`` is a list of ``(lineno, text)``. ``variables`` fixes the
    symbolic variable names in order; otherwise ``x1, x2, ...`` style
    names are indexed by their number and single letters are ordered
    x, y, z, w, then backwards through the alphabet.
    """
    csv_rows, sym_rows = [], []
    first_kind = None
    for lineno, text in lines:
        is_csv = bool(re.fullmatch(r"\s*-?\d+(\s*,\s*-?\d+)*\s*", text))
        if first_kind is None:
            first_kind = is_csv
        elif is_csv != first_kind:
            raise ParseError("mixes exponent CSV and symbolic monomials", lineno)
        if is_csv:
            row = tuple(int(e) for e in text.split(","))
            if any(e < 0 for e in row):
                raise ParseError("negative exponent in %r" % text, lineno)
            csv_rows.append((lineno, row))
        else:
            sym_rows.append((lineno, _parse_symbolic(text, lineno)))
    if csv_rows:
        n = len(csv_rows[0][1])
        for lineno, row in csv_rows:
            if len(row) != n:
                raise ParseError("expected %d exponents, got %d" % (n, len(row)), lineno)
        return [row for _, row in csv_rows]
    names = sorted({name for _, fs in sym_rows for name, _ in fs})
    if variables:
        index = {v: k for k, v in enumerate(variables)}
        n = len(variables)
        for lineno, fs in sym_rows:
            for name, _ in fs:
                if name not in index:
                    raise ParseError("unknown variable %r" % name, lineno)
    else:
        index, n = _variable_order(names)
        n = max(n, 1)
    out = []
    for _, fs in sym_rows:
        e = [0] * n
        for name, k in fs:
            e[index[name]] += k
        out.append(tuple(e))
    return out


def _content_lines(text):
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_ideal(text: str, variables=None) -> MonomialIdeal:
    """Parse ideal text, one monomial per line."""
    rows = parse_monomials(list(_content_lines(text)), variables)
    if not rows:
        raise ParseError("no generators found")
    return minimalize(rows)


def parse_inline(text: str, variables=None) -> MonomialIdeal:
    """Generators separated by commas (symbolic) or semicolons (CSV)."""
    text = text.strip()
    if ";" in text or re.fullmatch(r"[\d,\s]+", text):
        parts = text.split(";")
    else:
        parts = text.split(",")
    lines = [(None, p.strip()) for p in parts if p.strip()]
    if not lines:
        raise ParseError("no generators found")
    return minimalize(parse_monomials(lines, variables))


def read_ideal(path: str, variables=None) -> MonomialIdeal:
    with open(path) as f:
        return parse_ideal(f.read(), variables)


def matching_to_json(I: MonomialIdeal, A: AcyclicMatching) -> list:
    return [{"source": s, "target": t, "lcm": format_csv(I.lcm(s))} for s, t in A.edges]


def matching_from_json(data, q: int) -> AcyclicMatching:
    try:
        return AcyclicMatching.from_edges(q, ((int(e["source"]), int(e["target"])) for e in data))
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaError("bad matching record: %s" % exc) from None


def complex_to_json(C: ChainComplex) -> dict:
    return {
        "ranks": list(C.ranks),
        "basis": [list(b) for b in C.basis[: len(C.ranks)]],
        "entries": [[i, r, c, coeff, format_csv(mono)] for i, r, c, coeff, mono in C.entries()],
    }


def complex_from_json(data, I: MonomialIdeal) -> ChainComplex:
    """Rebuild a complex; multidegrees of the basis come from I."""
    try:
        basis = [[int(m) for m in b] for b in data["basis"]]
        ranks = [int(r) for r in data["ranks"]]
        entries = data["entries"]
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaError("bad complex record: %s" % exc) from None
    if ranks != [len(b) for b in basis]:
        raise SchemaError("ranks %r do not match basis sizes" % ranks)
    for b in basis:
        for m in b:
            if m < 0 or m >> I.q:
                raise SchemaError("basis label %d is not a subset of %d generators" % (m, I.q))
    degrees = [[I.lcm(m) for m in b] for b in basis]
    diffs = [[] for _ in basis]
    for i in range(1, len(basis)):
        diffs[i] = [[] for _ in basis[i]]
    for item in entries:
        try:
            i, r, c, coeff, mono = item
            i, r, c, coeff = int(i), int(r), int(c), int(coeff)
            mono = parse_csv(mono)
        except (TypeError, ValueError) as exc:
            raise SchemaError("bad entry %r: %s" % (item, exc)) from None
        if not (1 <= i < len(basis)) or not (0 <= c < len(basis[i])) or not (0 <= r < len(basis[i - 1])):
            raise SchemaError("entry %r out of range" % (item,))
        if len(mono) != I.num_vars:
            raise SchemaError("entry %r has the wrong number of exponents" % (item,))
        diffs[i][c].append((r, coeff, mono))
    for cols in diffs:
        for col in cols:
            col.sort()
    return ChainComplex(I.num_vars, basis, degrees, diffs)


def betti_to_json(betti) -> list:
    return [[i, format_csv(p), v] for i, p, v in betti.rows()]


def report_to_json(report) -> dict:
    """Pipeline report: minimality verdict, Betti table, bad paths,
    matching and complex."""
    I = report.ideal
    cert = report.certificate
    bad = [
        {"lcm": format_csv(p), "cells": list(path.cells), "sign": path.sign}
        for p, paths in sorted(cert.bad_paths.items())
        for path in paths
    ]
    out = {
        "minimal": bool(report.certified),
        "betti": betti_to_json(cert.betti),
        "bad_paths": bad,
        "ideal": [format_csv(g) for g in I.gens],
        "jpart": list(I.jpart),
        "pure_powers": list(I.pure_powers),
        "ranks": list(report.ranks),
        "resolution": bool(report.resolution),
        "matching": matching_to_json(I, report.matching),
        "complex": complex_to_json(report.complex),
        "orderings": [
            {"lcm": format_csv(p), "order": list(report.search.family[p].order), "source": e.source}
            for p, e in sorted(report.search.per_point_log.items())
        ],
    }
    if report.restriction is not None:
        r = report.restriction
        out["restriction"] = {"valid": r.valid, "same_as_rerun": r.same_as_rerun, "minimal": r.minimal, "resolution": r.resolution}
    return out


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))
