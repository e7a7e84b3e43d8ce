"""The Taylor resolution and the covering digraph of the subset lattice."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field

from .exceptions import ArgumentError
from .monomials import MonomialIdeal, bits, popcount, quotient


def face_sign(sigma: int, tau: int) -> int:
    """The incidence sign [sigma : tau] of a codimension-one face.

    If the removed generator is the j-th smallest index of sigma
    (counting from 1) the sign is (-1)^(j+1).
    """
    removed = sigma ^ tau
    if tau & ~sigma or removed == 0 or removed & (removed - 1):
        raise ArgumentError("%s is not a codimension-one face of %s" % (bin(tau), bin(sigma)))
    below = popcount(sigma & (removed - 1))
    return -1 if below & 1 else 1


@dataclass
class ChainComplex:
    """A complex of free multigraded modules with sparse differentials.

    ``basis[i]`` lists the cell labels (bitmasks) in homological degree i
    and ``degrees[i]`` their multidegrees. ``diffs[i][c]`` is the column of
    ``d_i`` for cell ``c`` of degree i, a list of ``(row, coeff, mono)``
    with ``row`` indexing ``basis[i-1]``. ``diffs[0]`` is empty.
    """

    num_vars: int
    basis: list
    degrees: list
    diffs: list
    cancelled: int = 0
    info: dict = field(default_factory=dict)

    @property
    def ranks(self) -> tuple:
        r = [len(b) for b in self.basis]
        while len(r) > 1 and r[-1] == 0:
            r.pop()
        return tuple(r)

    @property
    def top(self) -> int:
        return len(self.basis) - 1

    def entries(self):
        """Yield ``(degree, row, col, coeff, mono)`` for every stored entry."""
        for i in range(1, len(self.diffs)):
            for c, col in enumerate(self.diffs[i]):
                for r, coeff, mono in col:
                    yield i, r, c, coeff, mono

    def column(self, i: int, cell: int) -> list:
        return self.diffs[i][self.basis[i].index(cell)]

    def multidegree_counts(self) -> dict:
        """(degree, multidegree) -> number of basis cells."""
        out = defaultdict(int)
        for i, degs in enumerate(self.degrees):
            for p in degs:
                out[i, p] += 1
        return dict(out)

    def d_squared_violations(self) -> list:
        """Entries of ``d_{i-1} d_i`` that fail to vanish.

        Each composite entry is accumulated per resulting monomial, so the
        check is exact as a map of free modules.
        """
        bad = []
        for i in range(2, len(self.diffs)):
            lower = self.diffs[i - 1]
            for c, col in enumerate(self.diffs[i]):
                acc = defaultdict(int)
                for mid, a, m1 in col:
                    for row, b, m2 in lower[mid]:
                        mono = tuple(x + y for x, y in zip(m1, m2))
                        acc[row, mono] += a * b
                for (row, mono), v in acc.items():
                    if v:
                        bad.append((i, row, c, v, mono))
        return bad

    def homogeneity_violations(self) -> list:
        """Entries with ``mono * deg(row) != deg(col)``."""
        bad = []
        for i, r, c, coeff, mono in self.entries():
            target = tuple(x + y for x, y in zip(mono, self.degrees[i - 1][r]))
            if target != self.degrees[i][c]:
                bad.append((i, r, c, coeff, mono))
        return bad


def build_taylor(I: MonomialIdeal) -> ChainComplex:
    """The Taylor resolution of S/I."""
    lat = I.lattice
    q = I.q
    basis = [[] for _ in range(q + 1)]
    for mask in range(1 << q):
        basis[popcount(mask)].append(mask)
    position = [dict((m, k) for k, m in enumerate(b)) for b in basis]
    degrees = [[lat.lcm(m) for m in b] for b in basis]
    diffs = [[]]
    for i in range(1, q + 1):
        cols = []
        for sigma in basis[i]:
            p = lat.lcm(sigma)
            col = []
            for k in bits(sigma):
                tau = sigma ^ (1 << k)
                col.append((position[i - 1][tau], face_sign(sigma, tau), quotient(p, lat.lcm(tau))))
            col.sort()
            cols.append(col)
        diffs.append(cols)
    return ChainComplex(I.num_vars, basis, degrees, diffs, info={"kind": "taylor"})


class SubsetGraph:
    """The digraph G_I on all subsets, edges ``sigma -> sigma - {m}``.

    With a matching, the matched edges point upwards instead (G_I^A).
    """

    def __init__(self, q: int, matching=None):
        self.q = q
        self.matching = matching

    @property
    def num_vertices(self) -> int:
        return 1 << self.q

    @property
    def num_edges(self) -> int:
        return self.q << (self.q - 1) if self.q else 0

    def vertices(self):
        return range(1 << self.q)

    def edges(self):
        """All edges of G_I^A as (source, target)."""
        for sigma in self.vertices():
            for tau in self.successors(sigma):
                yield sigma, tau

    def successors(self, sigma: int) -> list:
        A = self.matching
        out = []
        for k in bits(sigma):
            tau = sigma ^ (1 << k)
            if A is not None and A.down.get(sigma) == tau:
                continue
            out.append(tau)
        if A is not None and sigma in A.up:
            out.append(A.up[sigma])
        return out

    def is_reversed(self, sigma: int, tau: int) -> bool:
        return self.matching is not None and self.matching.down.get(sigma) == tau


def build_graph(I: MonomialIdeal) -> SubsetGraph:
    return SubsetGraph(I.q)
