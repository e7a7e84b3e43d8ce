"""Critical cells, gradient paths and the Morse resolution of a matching."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

from .exceptions import ArgumentError
from .matching import AcyclicMatching
from .monomials import MonomialIdeal, bits, popcount, quotient
from .taylor import ChainComplex, SubsetGraph, face_sign


@dataclass(frozen=True)
class GradientPath:
    cells: tuple
    sign: int

    def __len__(self):
        return len(self.cells)


def critical_cells(I: MonomialIdeal, A: AcyclicMatching) -> list:
    """Unmatched subsets bucketed by cardinality, ascending bitmask."""
    out = [[] for _ in range(I.q + 1)]
    for sigma in range(1 << I.q):
        if not A.is_matched(sigma):
            out[popcount(sigma)].append(sigma)
    return out


def edge_weight(sigma: int, tau: int, A: AcyclicMatching) -> int:
    """Weight of the edge sigma -> tau of G_I^A."""
    if tau & ~sigma == 0 and popcount(sigma ^ tau) == 1:
        if A.down.get(sigma) == tau:
            raise ArgumentError("%d -> %d is reversed by the matching" % (sigma, tau))
        return face_sign(sigma, tau)
    if sigma & ~tau == 0 and popcount(sigma ^ tau) == 1:
        if A.down.get(tau) != sigma:
            raise ArgumentError("%d -> %d is not an edge of G_I^A" % (sigma, tau))
        return -face_sign(tau, sigma)
    raise ArgumentError("%d -> %d is not an edge of G_I^A" % (sigma, tau))


def gradient_paths(start: int, end: int, A: AcyclicMatching) -> list:
    """All directed paths from ``start`` to ``end`` in G_I^A with their signs."""
    graph = SubsetGraph(A.q, A)
    size = popcount(end)
    found = []
    path = [start]

    def walk(v, sign):
        if v == end:
            found.append(GradientPath(tuple(path), sign))
            return
        # cardinality rises by at most one before it has to fall again
        if popcount(v) + 1 < size:
            return
        for w in graph.successors(v):
            path.append(w)
            walk(w, sign * edge_weight(v, w, A))
            path.pop()

    walk(start, 1)
    return found


class _Flow:
    """Memoized sums of path signs from a cell to the critical cells of
    its own cardinality."""

    def __init__(self, A: AcyclicMatching):
        self.A = A
        self.memo = {}

    def __call__(self, tau: int) -> dict:
        memo = self.memo
        if tau in memo:
            return memo[tau]
        A = self.A
        if tau in A.up:
            rho = A.up[tau]
            w = -face_sign(rho, tau)
            acc = defaultdict(int)
            for k in bits(rho):
                nu = rho ^ (1 << k)
                if nu == tau:
                    continue
                s = w * face_sign(rho, nu)
                for crit, c in self(nu).items():
                    acc[crit] += s * c
            out = {c: v for c, v in acc.items() if v}
        elif tau in A.down:
            out = {}
        else:
            out = {tau: 1}
        memo[tau] = out
        return out


def build_morse(I: MonomialIdeal, A: AcyclicMatching) -> ChainComplex:
    """The Morse resolution induced by a homogeneous acyclic matching."""
    lat = I.lattice
    crit = critical_cells(I, A)
    while len(crit) > 1 and not crit[-1]:
        crit.pop()
    position = [dict((c, k) for k, c in enumerate(b)) for b in crit]
    degrees = [[lat.lcm(c) for c in b] for b in crit]
    flow = _Flow(A)
    diffs = [[]]
    cancelled = 0
    for r in range(1, len(crit)):
        cols = []
        for sigma in crit[r]:
            p = lat.lcm(sigma)
            acc = defaultdict(int)
            touched = set()
            for k in bits(sigma):
                face = sigma ^ (1 << k)
                s = face_sign(sigma, face)
                for target, c in flow(face).items():
                    acc[target] += s * c
                    touched.add(target)
            col = []
            for target in sorted(acc, key=position[r - 1].__getitem__):
                if acc[target]:
                    col.append((position[r - 1][target], acc[target], quotient(p, lat.lcm(target))))
            cancelled += len(touched) - len(col)
            cols.append(col)
        diffs.append(cols)
    return ChainComplex(I.num_vars, crit, degrees, diffs, cancelled, info={"kind": "morse", "matching": A})
