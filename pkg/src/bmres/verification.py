"""Independent checks: Betti numbers, exactness, minimality, bad paths.

Everything here is exact. Betti numbers come from the homology of the
fibers of the lcm map (the multigraded strands of Tor), exactness from
the homology of the strands of a complex at every lcm-lattice point.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field

from .exceptions import InconsistencyError
from .linalg import rank
from .matching import AcyclicMatching
from .monomials import MonomialIdeal, bits, divides, is_one, lcm_of, popcount
from .morse import GradientPath, build_morse
from .taylor import ChainComplex, face_sign


@dataclass
class BettiTable:
    """Nonzero multigraded Betti numbers, keyed by ``(i, multidegree)``."""

    entries: dict

    @property
    def totals(self) -> tuple:
        if not self.entries:
            return ()
        top = max(i for i, _ in self.entries)
        t = [0] * (top + 1)
        for (i, _), v in self.entries.items():
            t[i] += v
        return tuple(t)

    def __getitem__(self, key):
        return self.entries.get(key, 0)

    def rows(self) -> list:
        """``(i, multidegree, count)`` sorted by degree then multidegree."""
        return sorted((i, p, v) for (i, p), v in self.entries.items())


def _fiber_homology(I: MonomialIdeal, fiber, characteristic: int) -> dict:
    by_deg = defaultdict(list)
    for s in fiber:
        by_deg[popcount(s)].append(s)
    pos = {d: {s: k for k, s in enumerate(cells)} for d, cells in by_deg.items()}
    ranks = {}
    for d, cells in by_deg.items():
        if d == 0 or d - 1 not in by_deg:
            ranks[d] = 0
            continue
        below = pos[d - 1]
        rows = [[0] * len(cells) for _ in range(len(below))]
        for c, s in enumerate(cells):
            for k in bits(s):
                t = s ^ (1 << k)
                if t in below:
                    rows[below[t]][c] = face_sign(s, t)
        ranks[d] = rank(rows, characteristic)
    out = {}
    for d, cells in by_deg.items():
        h = len(cells) - ranks[d] - ranks.get(d + 1, 0)
        if h:
            out[d] = h
    return out


def betti_oracle(I: MonomialIdeal, characteristic: int = 0) -> BettiTable:
    """Multigraded Betti numbers of S/I over Q (or GF(p))."""
    lat = I.lattice
    entries = {}
    for p, fiber in zip(lat.points, lat.fibers):
        for d, h in _fiber_homology(I, fiber, characteristic).items():
            entries[d, p] = h
    return BettiTable(entries)


@dataclass
class ResolutionReport:
    ok: bool
    problems: list = field(default_factory=list)

    def __bool__(self):
        return self.ok


def _strand_matrix(C: ChainComplex, i: int, rows_in: dict, cols_in: dict) -> list:
    m = [[0] * len(cols_in) for _ in range(len(rows_in))]
    for c, cc in cols_in.items():
        for r, coeff, _ in C.diffs[i][c]:
            if r in rows_in:
                m[rows_in[r]][cc] = coeff
    return m


def strand_homology(C: ChainComplex, p, characteristic: int = 0) -> list:
    """Dimensions of the homology of the degree-p strand of C."""
    cells = []
    for degs in C.degrees:
        sel = [k for k, d in enumerate(degs) if divides(d, p)]
        cells.append({k: n for n, k in enumerate(sel)})
    ranks = [0] * (len(cells) + 1)
    for i in range(1, len(cells)):
        if cells[i] and cells[i - 1]:
            ranks[i] = rank(_strand_matrix(C, i, cells[i - 1], cells[i]), characteristic)
    return [len(cells[i]) - ranks[i] - ranks[i + 1] for i in range(len(cells))]


def _probe_points(I: MonomialIdeal, C: ChainComplex) -> list:
    """The lcm lattice of I joined with the labels of C.

    The strand at b depends only on which labels and generators divide b,
    so it is enough to look at lcms of those.
    """
    points = set(I.lattice.points)
    extra = {d for degs in C.degrees for d in degs} - points
    frontier = set(extra)
    while frontier:
        new = set()
        for a in frontier:
            for b in list(points):
                c = lcm_of((a, b), I.num_vars)
                if c not in points and c not in frontier:
                    new.add(c)
        points |= frontier
        frontier = new
    return sorted(points)


def check_resolution(I: MonomialIdeal, C: ChainComplex) -> ResolutionReport:
    """Whether C is a free resolution of S/I.

    Checks d^2 = 0 and homogeneity first, then the strand homology at
    every lcm of generators and basis labels: H_0 is k exactly when no
    generator divides the point, and all higher homology vanishes. Every
    other multidegree has the same strand as the lcm of the labels
    dividing it.
    """
    problems = []
    bad = C.d_squared_violations()
    if bad:
        return ResolutionReport(False, ["d^2 != 0 at %d entries, e.g. %r" % (len(bad), bad[0])])
    bad = C.homogeneity_violations()
    if bad:
        return ResolutionReport(False, ["entry monomials do not match labels at %d entries, e.g. %r" % (len(bad), bad[0])])
    if len(C.degrees) != len(C.basis) or any(len(d) != len(b) for d, b in zip(C.degrees, C.basis)):
        return ResolutionReport(False, ["basis and multidegrees disagree in shape"])
    if any(len(d) != I.num_vars for degs in C.degrees for d in degs):
        return ResolutionReport(False, ["multidegrees have the wrong number of variables"])
    for p in _probe_points(I, C):
        h = strand_homology(C, p)
        want0 = 0 if any(divides(g, p) for g in I.gens) else 1
        if h[0] != want0:
            problems.append("H_0 at %r has dimension %d, expected %d" % (p, h[0], want0))
        for i, v in enumerate(h[1:], 1):
            if v:
                problems.append("H_%d at %r has dimension %d" % (i, p, v))
    return ResolutionReport(not problems, problems)


def is_minimal(C: ChainComplex) -> bool:
    """True when no nonzero differential entry has a constant monomial part."""
    return not any(coeff and is_one(mono) for _, _, _, coeff, mono in C.entries())


@dataclass
class BadPathReport:
    point: tuple
    paths: list

    def __bool__(self):
        return bool(self.paths)


def find_bad_paths(I: MonomialIdeal, A: AcyclicMatching, p, limit: int = None) -> BadPathReport:
    """Alternating gradient paths between critical cells of lcm p.

    Starting at a critical sigma_1 of lcm p, the walk goes down along
    unmatched edges staying in the fiber of p and up along reversed
    matched edges, and stops at a critical cell one smaller than sigma_1.
    ``limit`` stops the search after that many paths.
    """
    p = tuple(p)
    fiber = set(I.lattice.fiber(p))
    found = []
    down, up = A.down, A.up

    def critical(s):
        return s not in down and s not in up

    def walk(sigma, cells, sign):
        for k in bits(sigma):
            tau = sigma ^ (1 << k)
            if tau not in fiber or down.get(sigma) == tau:
                continue
            s = sign * face_sign(sigma, tau)
            if critical(tau):
                found.append(GradientPath(tuple(cells) + (tau,), s))
                if limit is not None and len(found) >= limit:
                    return True
            elif tau in up:
                rho = up[tau]
                if walk(rho, cells + [tau, rho], -s * face_sign(rho, tau)):
                    return True
        return False

    for s1 in sorted(fiber):
        if critical(s1) and walk(s1, [s1], 1):
            break
    return BadPathReport(p, found)


@dataclass
class MinimalityCertificate:
    minimal: bool
    no_bad_paths: bool
    unit_free: bool
    ranks_match: bool
    bad_paths: dict
    betti: BettiTable
    complex: ChainComplex

    @property
    def ranks(self):
        return self.complex.ranks


def minimality_certificate(I: MonomialIdeal, A: AcyclicMatching, C: ChainComplex = None, betti: BettiTable = None) -> MinimalityCertificate:
    """Cross-check three minimality signals for the Morse resolution of A.

    Absence of bad paths must imply the absence of unit entries, and the
    absence of unit entries must coincide with the critical cells matching
    the Betti numbers in every multidegree. Anything else raises.
    """
    if C is None:
        C = build_morse(I, A)
    if betti is None:
        betti = betti_oracle(I)
    bad = {}
    for p in I.lattice.points:
        rep = find_bad_paths(I, A, p)
        if rep:
            bad[p] = rep.paths
    unit_free = is_minimal(C)
    counts = C.multidegree_counts()
    ranks_match = counts == betti.entries
    if not bad and not unit_free:
        raise InconsistencyError("unit entries in the differential but no bad gradient path")
    if unit_free != ranks_match:
        raise InconsistencyError("unit-entry test and Betti comparison disagree (unit_free=%s)" % unit_free)
    return MinimalityCertificate(unit_free and ranks_match, not bad, unit_free, ranks_match, bad, betti, C)
