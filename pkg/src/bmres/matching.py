"""Barile-Macchia matchings on the Taylor complex.

Bridges, gaps and true gaps of a subset, the smallest-bridge function,
the Barile-Macchia algorithm run on a set of subsets, the generalized
matching assembled fiber by fiber over the lcm lattice, and the type
classification of subsets.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .exceptions import ArgumentError, MatchingError
from .monomials import MonomialIdeal, bits, divides, popcount


class TotalOrdering:
    """A total ordering of generator indices.

    Built from a sequence listing the generators greatest first, so
    ``TotalOrdering([1, 0, 2])`` means ``m1 > m0 > m2``.
    """

    __slots__ = ("order", "rank")

    def __init__(self, order: Sequence[int]):
        order = tuple(int(i) for i in order)
        if sorted(order) != list(range(len(order))):
            raise ArgumentError("not a permutation: %r" % (order,))
        rank = [0] * len(order)
        for pos, i in enumerate(order):
            rank[i] = len(order) - 1 - pos
        self.order = order
        self.rank = tuple(rank)

    @classmethod
    def identity(cls, q: int) -> "TotalOrdering":
        """m0 > m1 > ... > m_{q-1}."""
        return cls(range(q))

    def __len__(self):
        return len(self.order)

    def dominates(self, a: int, b: int) -> bool:
        return self.rank[a] > self.rank[b]

    def smallest(self, items: Iterable[int]):
        items = list(items)
        if not items:
            return None
        return min(items, key=self.rank.__getitem__)

    def __eq__(self, other):
        return isinstance(other, TotalOrdering) and self.order == other.order

    def __hash__(self):
        return hash(self.order)

    def __repr__(self):
        return "TotalOrdering(%r)" % (self.order,)


@dataclass
class OrderingFamily:
    """One total ordering per lcm-lattice point, keyed by the point."""

    per_point: dict

    @classmethod
    def uniform(cls, I: MonomialIdeal, ordering: TotalOrdering) -> "OrderingFamily":
        return cls({p: ordering for p in I.lattice.points})

    def __getitem__(self, p):
        return self.per_point[tuple(p)]


@dataclass
class AcyclicMatching:
    """Matched edges ``source -> target`` with ``target`` one element smaller.

    ``down`` maps sources to targets and ``up`` targets to sources.
    """

    q: int
    down: dict = field(default_factory=dict)
    up: dict = field(default_factory=dict)

    @classmethod
    def from_edges(cls, q: int, edges: Iterable[tuple]) -> "AcyclicMatching":
        A = cls(q)
        for s, t in edges:
            A.down[s] = t
            A.up[t] = s
        return A

    @property
    def edges(self) -> list:
        return sorted(self.down.items())

    def __len__(self):
        return len(self.down)

    def is_matched(self, sigma: int) -> bool:
        return sigma in self.down or sigma in self.up

    def restrict(self, mask: int) -> "AcyclicMatching":
        """Edges whose source lies inside ``mask``."""
        return AcyclicMatching.from_edges(self.q, ((s, t) for s, t in self.down.items() if s & ~mask == 0))


def bridges(I: MonomialIdeal, sigma: int) -> list:
    """Generators m in sigma with lcm(sigma - {m}) = lcm(sigma)."""
    pt = I.lattice.point_of
    p = pt[sigma]
    return [k for k in bits(sigma) if pt[sigma ^ (1 << k)] == p]


def gaps(I: MonomialIdeal, sigma: int) -> list:
    """Generators m outside sigma with lcm(sigma + {m}) = lcm(sigma)."""
    lat = I.lattice
    p = lat.lcm(sigma)
    return [k for k in range(I.q) if not sigma >> k & 1 and divides(I.gens[k], p)]


def true_gap_witness(I: MonomialIdeal, sigma: int, m: int, order: TotalOrdering):
    """A non-true-gap witness of the gap m in sigma, or None.

    The witness is the smallest new bridge of sigma + {m} dominated by m.
    """
    grown = sigma | (1 << m)
    old = set(bridges(I, sigma))
    new = [b for b in bridges(I, grown) if b != m and b not in old and order.dominates(m, b)]
    return order.smallest(new)


def is_true_gap(I: MonomialIdeal, sigma: int, m: int, order: TotalOrdering, witness: bool = False):
    """Whether m is a true gap of sigma. With ``witness=True`` returns
    ``(flag, witness)`` where witness is None unless the failure comes from
    a new dominated bridge."""
    if sigma >> m & 1 or m not in gaps(I, sigma):
        return (False, None) if witness else False
    w = true_gap_witness(I, sigma, m, order)
    if witness:
        return w is None, w
    return w is None


def true_gaps(I: MonomialIdeal, sigma: int, order: TotalOrdering) -> list:
    return [m for m in gaps(I, sigma) if true_gap_witness(I, sigma, m, order) is None]


def sbridge(I: MonomialIdeal, sigma: int, order: TotalOrdering):
    """Smallest bridge of sigma, or None when sigma has no bridge."""
    return order.smallest(bridges(I, sigma))


def barile_macchia(I: MonomialIdeal, omega: Iterable[int], order: TotalOrdering) -> dict:
    """Run the Barile-Macchia algorithm on the subsets in ``omega``.

    Returns the matched edges as a dict ``source -> target``. Among
    subsets of equal maximal cardinality the lowest bitmask is picked
    first.
    """
    omega = sorted(set(omega), key=lambda s: (-popcount(s), s))
    remaining = set(omega)
    edges = {}
    bridge_of = {}
    for sigma in omega:
        if sigma not in remaining:
            continue
        remaining.discard(sigma)
        b = sbridge(I, sigma, order)
        if b is None:
            continue
        tau = sigma ^ (1 << b)
        remaining.discard(tau)
        edges[sigma] = tau
        bridge_of[sigma] = b

    # collisions on a target: keep the source whose smallest bridge is smallest
    winner = {}
    for sigma, tau in edges.items():
        rival = winner.get(tau)
        if rival is None or order.dominates(bridge_of[rival], bridge_of[sigma]):
            winner[tau] = sigma
    return {sigma: tau for tau, sigma in winner.items()}


def fiber_matching(I: MonomialIdeal, p, order: TotalOrdering) -> dict:
    return barile_macchia(I, I.lattice.fiber(p), order)


def generalized_bm(I: MonomialIdeal, family: OrderingFamily, validate: bool = True) -> AcyclicMatching:
    """Union over lattice points p of the matchings on the fibers of p
    computed with the ordering ``family[p]``."""
    lat = I.lattice
    edges = {}
    for p, fiber in zip(lat.points, lat.fibers):
        if len(fiber) < 2:
            continue
        edges.update(barile_macchia(I, fiber, family[p]))
    A = AcyclicMatching.from_edges(I.q, edges.items())
    if validate:
        problems = validate_matching(I, A)
        if problems:
            raise MatchingError("generalized Barile-Macchia matching is invalid: %s" % problems[:3])
    return A


class SetType(enum.Enum):
    TYPE1 = "type-1"
    POTENTIALLY_TYPE2 = "potentially-type-2"
    TYPE2 = "type-2"
    NEITHER = "neither"


def _potentially_type2(I, sigma, order):
    b = sbridge(I, sigma, order)
    if b is None:
        return None
    tg = true_gaps(I, sigma, order)
    if any(order.dominates(b, g) for g in tg):
        return None
    return b


def classify(I: MonomialIdeal, sigma: int, order: TotalOrdering, fiber: Sequence[int] = None) -> SetType:
    """The type of sigma with respect to ``order``.

    ``fiber`` is the set of subsets with the same lcm as sigma; it defaults
    to the lattice fiber. Type-2 is reported in preference to
    potentially-type-2.
    """
    if fiber is None:
        fiber = I.lattice.fibers[I.lattice.point_of[sigma]]
    b = _potentially_type2(I, sigma, order)
    if b is not None:
        target = sigma ^ (1 << b)
        for other in fiber:
            if other == sigma:
                continue
            b2 = _potentially_type2(I, other, order)
            if b2 is None or other ^ (1 << b2) != target:
                continue
            if not order.dominates(b2, b):
                return SetType.POTENTIALLY_TYPE2
        return SetType.TYPE2
    tg = true_gaps(I, sigma, order)
    if tg:
        g = order.smallest(tg)
        if not any(order.dominates(g, x) for x in bridges(I, sigma)):
            return SetType.TYPE1
    return SetType.NEITHER


def type2_edges(I: MonomialIdeal, fiber: Sequence[int], order: TotalOrdering) -> dict:
    """``{sigma: sigma - sbridge(sigma)}`` over the type-2 members of a fiber."""
    out = {}
    for sigma in fiber:
        if classify(I, sigma, order, fiber) is SetType.TYPE2:
            out[sigma] = sigma ^ (1 << sbridge(I, sigma, order))
    return out


def validate_matching(I: MonomialIdeal, A: AcyclicMatching) -> list:
    """Violations of the matching, homogeneity and acyclicity conditions.

    An empty list means A is a homogeneous acyclic matching.
    """
    problems = []
    seen = {}
    lat = I.lattice
    q = I.q
    for s, t in A.edges:
        d = s ^ t
        if t & ~s or d == 0 or d & (d - 1) or s >> q:
            problems.append("not an edge of G_I: %d -> %d" % (s, t))
            continue
        for v in (s, t):
            if v in seen:
                problems.append("subset %d is in two edges (%d->%d and %d->%d)" % (v, *seen[v], s, t))
            seen[v] = (s, t)
        if lat.point_of[s] != lat.point_of[t]:
            problems.append("lcm changes along %d -> %d" % (s, t))
    if problems:
        return problems
    if has_cycle(q, A):
        problems.append("G_I^A has a directed cycle")
    return problems


def has_cycle(q: int, A: AcyclicMatching) -> bool:
    """Kahn's algorithm on G_I with the edges of A reversed."""
    n = 1 << q
    indeg = [0] * n
    succ = [None] * n
    for sigma in range(n):
        out = [sigma ^ (1 << k) for k in bits(sigma) if A.down.get(sigma) != sigma ^ (1 << k)]
        if sigma in A.up:
            out.append(A.up[sigma])
        succ[sigma] = out
        for t in out:
            indeg[t] += 1
    queue = deque(v for v in range(n) if indeg[v] == 0)
    done = 0
    while queue:
        v = queue.popleft()
        done += 1
        for t in succ[v]:
            indeg[t] -= 1
            if indeg[t] == 0:
                queue.append(t)
    return done != n
