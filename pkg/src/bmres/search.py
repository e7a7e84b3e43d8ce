"""Choosing one ordering per lcm-lattice point so that no bad gradient path
survives, and the end-to-end pipeline built on it.

Bad gradient paths of type p live inside the fiber of p, so every lattice
point is searched on its own. Only the generators of the J-part that divide
p matter for the fiber; the others are appended in index order and the pure
powers go last.
"""

from __future__ import annotations

import itertools
import logging
import random
from dataclasses import dataclass, field
from math import factorial
from typing import Sequence

from .exceptions import ArgumentError, DomainError, TheoremViolation
from .matching import (
    AcyclicMatching,
    OrderingFamily,
    TotalOrdering,
    barile_macchia,
    generalized_bm,
    gaps,
    sbridge,
    true_gap_witness,
    validate_matching,
)
from .monomials import MonomialIdeal, artinian_reduction, compress_mask, lcm_of, subideal
from .morse import build_morse
from .verification import check_resolution, find_bad_paths, is_minimal, minimality_certificate

log = logging.getLogger(__name__)

STRATEGIES = ("proof-guided", "exhaustive", "hybrid")


@dataclass
class SearchConfig:
    strategy: str = "hybrid"
    max_orderings_per_point: int = 120
    seed: int = 0
    best_effort: bool = False

    def __post_init__(self):
        if self.strategy not in STRATEGIES:
            raise ArgumentError("unknown strategy %r" % self.strategy)


@dataclass
class PointLog:
    point: tuple
    tried: list = field(default_factory=list)  # (head, number of bad paths)
    chosen: tuple = ()
    source: str = ""
    certified: bool = True


@dataclass
class SearchOutcome:
    family: OrderingFamily
    per_point_log: dict
    certified: bool


def extend_ordering(I: MonomialIdeal, head: Sequence[int]) -> TotalOrdering:
    """Total ordering with ``head`` on top (greatest first), then the rest
    of the J-part in index order, then the pure powers."""
    head = tuple(head)
    used = set(head)
    rest = [i for i in I.jpart if i not in used]
    tail = [i for i in range(I.q) if i not in used and i not in rest]
    return TotalOrdering(head + tuple(rest) + tuple(tail))


def sp_statistic(I: MonomialIdeal, p) -> int:
    """Fewest J-part generators dividing p whose lcm with the pure powers
    dividing p is p itself."""
    lat = I.lattice
    p = tuple(p)
    if p not in lat:
        raise ArgumentError("%r is not in the lcm lattice" % (p,))
    M = [I.gens[i] for i in lat.pure_powers(p)]
    mp = lat.mp(p)
    for size in range(len(mp) + 1):
        for sub in itertools.combinations(mp, size):
            if lcm_of(M + [I.gens[i] for i in sub], I.num_vars) == p:
                return size
    raise ArgumentError("%r is not generated by its divisors" % (p,))


def _fiber_matching(I, p, order) -> AcyclicMatching:
    return AcyclicMatching.from_edges(I.q, barile_macchia(I, I.lattice.fiber(p), order).items())


def bad_path_count(I: MonomialIdeal, p, order: TotalOrdering, limit: int = None) -> int:
    return len(find_bad_paths(I, _fiber_matching(I, p, order), p, limit).paths)


def _roles(I, order, path):
    """The generators m1 > m2 > m3 > m4 attached to a bad path: the bridge
    removed first, the smallest bridge of the start, a gap of the start
    that is not a true gap, and its witness. None unless all four are
    distinct."""
    s1, t1 = path.cells[0], path.cells[1]
    m1 = (s1 ^ t1).bit_length() - 1
    m2 = sbridge(I, s1, order)
    if m2 is None or m2 == m1:
        return None
    target = s1 ^ (1 << m2)
    fallback = None
    for g in sorted(gaps(I, s1), key=order.rank.__getitem__, reverse=True):
        if not order.dominates(m2, g):
            continue
        w = true_gap_witness(I, s1, g, order)
        if w is None:
            continue
        if sbridge(I, target | (1 << g), order) == g:
            fallback = (g, w)
            break
        fallback = fallback or (g, w)
    if fallback is None or len({m1, m2, *fallback}) < 4:
        return None
    return (m1, m2) + fallback


def _repair(I, p, head, window):
    """Rewrite a > b > c > d as b > d > a > c.

    The four roles come from a bad path when they are distinct and lie in
    ``window`` (the last four positions of ``head``); otherwise the four
    window positions are permuted directly.
    """
    order = extend_ordering(I, head)
    rep = find_bad_paths(I, _fiber_matching(I, p, order), p, limit=1)
    if not rep:
        return None
    slots = list(range(len(head) - window, len(head)))
    roles = _roles(I, order, rep.paths[0])
    if roles is None or not set(roles) <= {head[i] for i in slots}:
        roles = tuple(head[i] for i in slots)
    slots = sorted(head.index(x) for x in roles)
    a, b, c, d = roles
    new = list(head)
    for slot, x in zip(slots, (b, d, a, c)):
        new[slot] = x
    return tuple(new)


def _repairs(I, p, head, window=4, rounds=24):
    seen = []
    while head is not None and head not in seen and len(seen) < rounds:
        seen.append(head)
        yield head
        head = _repair(I, p, head, window)
    # the positional rewrite alone
    head = seen[0]
    for _ in range(3):
        slots = range(len(head) - window, len(head))
        a, b, c, d = (head[i] for i in slots)
        head = head[: len(head) - window] + (b, d, a, c)
        if head not in seen:
            seen.append(head)
            yield head


def proof_guided_candidates(I: MonomialIdeal, p):
    """Orderings of the J-part generators dividing p, greatest first,
    following the constructions used for four and five such generators."""
    lat = I.lattice
    p = tuple(p)
    mp = lat.mp(p)
    k = len(mp)
    if k <= 3:
        yield mp
        return
    if k == 4:
        yield from _repairs(I, p, mp)
        return
    if k > 5:
        yield mp
        return
    s = sp_statistic(I, p)
    M = [I.gens[i] for i in lat.pure_powers(p)]

    def covers(sub):
        return lcm_of(M + [I.gens[i] for i in sub], I.num_vars) == p

    if s == 0 or s >= 4:
        yield from _repairs(I, p, mp)
    elif s == 1:
        for a in mp:
            if covers([a]):
                yield from _repairs(I, p, (a,) + tuple(x for x in mp if x != a))
    elif s == 2:
        for pair in itertools.combinations(mp, 2):
            if not covers(pair):
                continue
            rest = [x for x in mp if x not in pair]
            for a, b in itertools.permutations(pair):
                for c, d, e in itertools.permutations(rest):
                    yield (a, b, c, d, e)
                    yield (c, d, e, a, b)
    else:
        for triple in itertools.combinations(mp, 3):
            if not covers(triple):
                continue
            rest = [x for x in mp if x not in triple]
            for a, b, c in itertools.permutations(triple):
                for d, e in itertools.permutations(rest):
                    yield (a, b, c, d, e)
                    yield (c, d, e, a, b)


def proof_guided_ordering(I: MonomialIdeal, p):
    """First proof-guided ordering without bad paths of type p, or None."""
    for head in proof_guided_candidates(I, p):
        order = extend_ordering(I, head)
        if bad_path_count(I, p, order, limit=1) == 0:
            return order
    return None


def _exhaustive(mp, cfg):
    total = factorial(len(mp))
    if total <= cfg.max_orderings_per_point:
        yield from itertools.permutations(mp)
        return
    rng = random.Random(cfg.seed)
    seen = set()
    while len(seen) < cfg.max_orderings_per_point:
        head = tuple(rng.sample(mp, len(mp)))
        if head not in seen:
            seen.add(head)
            yield head


def search_point(I: MonomialIdeal, p, cfg: SearchConfig) -> PointLog:
    p = tuple(p)
    mp = I.lattice.mp(p)
    entry = PointLog(p)
    if len(I.lattice.fiber(p)) < 2:
        entry.chosen, entry.source = mp, "trivial"
        return entry
    sources = []
    if cfg.strategy in ("proof-guided", "hybrid"):
        sources.append(("proof-guided", proof_guided_candidates(I, p)))
    if cfg.strategy in ("exhaustive", "hybrid"):
        sources.append(("exhaustive", _exhaustive(mp, cfg)))
    tried = set()
    for name, heads in sources:
        for head in heads:
            head = tuple(head)
            if head in tried:
                continue
            tried.add(head)
            n = bad_path_count(I, p, extend_ordering(I, head))
            entry.tried.append((head, n))
            if n == 0:
                entry.chosen, entry.source = head, name
                return entry
    entry.certified = False
    entry.chosen = min(entry.tried, key=lambda t: t[1])[0] if entry.tried else mp
    entry.source = "fewest-bad-paths"
    complete = cfg.strategy != "proof-guided" and factorial(len(mp)) <= cfg.max_orderings_per_point
    if len(I.jpart) <= 5 and complete:
        raise TheoremViolation("no ordering at %r avoids bad gradient paths" % (p,))
    return entry


def search_family(I: MonomialIdeal, cfg: SearchConfig = None) -> SearchOutcome:
    """Pick an ordering for every lattice point, one point at a time."""
    cfg = cfg or SearchConfig()
    if len(I.jpart) > 5 and not cfg.best_effort:
        raise DomainError("J-part has %d generators; certified search needs at most 5" % len(I.jpart))
    logs = {}
    per_point = {}
    for p in I.lattice.points:
        entry = search_point(I, p, cfg)
        logs[p] = entry
        per_point[p] = extend_ordering(I, entry.chosen)
    certified = all(e.certified for e in logs.values())
    return SearchOutcome(OrderingFamily(per_point), logs, certified)


def restrict_family(I: MonomialIdeal, family: OrderingFamily, J: MonomialIdeal, indices) -> OrderingFamily:
    """Orderings on the generators at ``indices`` induced from I's family,
    re-indexed for J."""
    indices = sorted(indices)
    where = {i: k for k, i in enumerate(indices)}
    per_point = {}
    for p in J.lattice.points:
        order = family[p].order
        per_point[p] = TotalOrdering([where[i] for i in order if i in where])
    return OrderingFamily(per_point)


@dataclass
class RestrictionReport:
    valid: bool
    same_as_rerun: bool
    minimal: bool
    resolution: bool
    size: int

    def __bool__(self):
        return self.valid and self.same_as_rerun and self.resolution


@dataclass
class PipelineReport:
    ideal: MonomialIdeal
    search: SearchOutcome
    matching: AcyclicMatching
    complex: object
    certificate: object
    resolution: object
    restriction: RestrictionReport = None
    original: "PipelineReport" = None

    @property
    def certified(self) -> bool:
        return self.search.certified and self.certificate.minimal

    @property
    def ranks(self):
        return self.complex.ranks

    @property
    def betti(self):
        return self.certificate.betti


def check_restriction(I: MonomialIdeal, family: OrderingFamily, A: AcyclicMatching) -> RestrictionReport:
    """The part of A among subsets of the J-part, as a matching of the
    ideal generated by the J-part."""
    idx = I.jpart
    J = subideal(I, idx)
    edges = [(compress_mask(s, idx), compress_mask(t, idx)) for s, t in A.restrict(I.jmask).edges]
    AJ = AcyclicMatching.from_edges(J.q, edges)
    valid = not validate_matching(J, AJ)
    rerun = generalized_bm(J, restrict_family(I, family, J, idx), validate=False)
    C = build_morse(J, AJ) if valid else None
    return RestrictionReport(
        valid,
        rerun.edges == AJ.edges,
        bool(C is not None and is_minimal(C)),
        bool(C is not None and check_resolution(J, C)),
        len(AJ),
    )


def resolve(I: MonomialIdeal, cfg: SearchConfig = None) -> PipelineReport:
    """Search orderings, build the matching and the Morse resolution, and
    certify minimality for I."""
    outcome = search_family(I, cfg)
    A = generalized_bm(I, outcome.family)
    C = build_morse(I, A)
    cert = minimality_certificate(I, A, C)
    res = check_resolution(I, C)
    restriction = check_restriction(I, outcome.family, A) if I.jpart and I.is_artinian_reduction else None
    return PipelineReport(I, outcome, A, C, cert, res, restriction)


def main_theorem_pipeline(J: MonomialIdeal, n: Sequence[int] = None, cfg: SearchConfig = None) -> PipelineReport:
    """Minimal generalized Barile-Macchia resolution of J, or of
    J + (x_1^{n_1}, ..., x_N^{n_N}) when ``n`` is given.

    When the pure powers absorb generators of J, J itself is resolved as
    well and attached as ``report.original``.
    """
    if n is None:
        return resolve(J, cfg)
    I = artinian_reduction(J, n)
    report = resolve(I, cfg)
    if len(I.jpart) != J.q:
        report.original = resolve(J, cfg)
    return report
