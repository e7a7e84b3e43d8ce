"""Monomials, monomial ideals and lcm lattices.

A monomial is a tuple of non-negative exponents. Subsets of the generators
of an ideal are encoded as bitmasks: bit ``i`` stands for ``gens[i]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .exceptions import CapacityError, DimensionError, DomainError, EmptyIdealError

Monomial = tuple  # tuple[int, ...]

MAX_GENS = 24


def monomial(exps: Iterable[int]) -> Monomial:
    m = tuple(int(e) for e in exps)
    if any(e < 0 for e in m):
        raise DomainError("negative exponent in %r" % (m,))
    return m


def one(n: int) -> Monomial:
    return (0,) * n


def divides(a: Monomial, b: Monomial) -> bool:
    """True if a | b."""
    return all(x <= y for x, y in zip(a, b))


def quotient(a: Monomial, b: Monomial) -> Monomial:
    """a / b, assuming b | a."""
    return tuple(x - y for x, y in zip(a, b))


def is_one(m: Monomial) -> bool:
    return not any(m)


def lcm_of(ms: Iterable[Monomial], n: int) -> Monomial:
    """Entrywise maximum of the exponent vectors; the empty lcm is 1."""
    out = [0] * n
    for m in ms:
        if len(m) != n:
            raise DimensionError("monomial %r has length %d, expected %d" % (m, len(m), n))
        for i, e in enumerate(m):
            if e > out[i]:
                out[i] = e
    return tuple(out)


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def bits(mask: int) -> list[int]:
    """Indices of the set bits, ascending."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def _antichain(gens: Sequence[Monomial]) -> list[int]:
    """Positions of the divisibility-minimal entries, first occurrence of
    duplicates kept, order preserved."""
    keep = []
    for i, g in enumerate(gens):
        ok = True
        for j, h in enumerate(gens):
            if i == j:
                continue
            if h == g:
                if j < i:
                    ok = False
                    break
            elif divides(h, g):
                ok = False
                break
        if ok:
            keep.append(i)
    return keep


@dataclass(frozen=True)
class MonomialIdeal:
    """An ideal given by its minimal monomial generators.

    ``jpart`` and ``pure_powers`` are index tuples. For an ideal built by
    :func:`artinian_reduction` they record which generators came from ``J``
    and which are the added powers ``x_i^{n_i}``; otherwise every generator
    belongs to the J-part.
    """

    num_vars: int
    gens: tuple
    jpart: tuple = None
    pure_powers: tuple = ()

    def __post_init__(self):
        if not self.gens:
            raise EmptyIdealError("an ideal needs at least one generator")
        gens = tuple(monomial(g) for g in self.gens)
        for g in gens:
            if len(g) != self.num_vars:
                raise DimensionError("generator %r does not have %d exponents" % (g, self.num_vars))
        if len(_antichain(gens)) != len(gens):
            raise DomainError("generators are not minimal: %r" % (gens,))
        object.__setattr__(self, "gens", gens)
        if self.jpart is None:
            object.__setattr__(self, "jpart", tuple(range(len(gens))))
        if set(self.jpart) & set(self.pure_powers):
            raise DomainError("J-part and pure powers overlap")

    @property
    def q(self) -> int:
        return len(self.gens)

    @property
    def full_mask(self) -> int:
        return (1 << self.q) - 1

    @property
    def jmask(self) -> int:
        return mask_of(self.jpart)

    @property
    def pure_mask(self) -> int:
        return mask_of(self.pure_powers)

    @property
    def is_artinian_reduction(self) -> bool:
        return bool(self.pure_powers) or len(self.jpart) != self.q

    def lcm(self, mask: int) -> Monomial:
        return self.lattice.lcm(mask)

    @cached_property
    def lattice(self) -> "LcmLattice":
        return build_lcm_lattice(self)

    def __str__(self):
        from .io import format_monomial

        return "(" + ", ".join(format_monomial(g) for g in self.gens) + ")"


def minimalize(gens: Sequence[Sequence[int]]) -> MonomialIdeal:
    """The ideal generated by ``gens``, reduced to its minimal generators.

    Duplicates and non-minimal elements are dropped; survivors keep their
    relative order.
    """
    if not gens:
        raise EmptyIdealError("cannot build an ideal from an empty list")
    ms = [monomial(g) for g in gens]
    n = len(ms[0])
    for m in ms:
        if len(m) != n:
            raise DimensionError("generators have mixed lengths")
    keep = _antichain(ms)
    return MonomialIdeal(n, tuple(ms[i] for i in keep))


def artinian_reduction(J: MonomialIdeal, n: Sequence[int]) -> MonomialIdeal:
    """``J + (x_1^{n_1}, ..., x_N^{n_N})`` with J-part/pure-power metadata.

    The generators of J come first. When a pure power coincides with a
    generator of J the latter is kept and counted in the J-part.
    """
    n = [int(e) for e in n]
    if len(n) != J.num_vars:
        raise DimensionError("need %d exponents, got %d" % (J.num_vars, len(n)))
    if any(e <= 0 for e in n):
        raise DomainError("Artinian exponents must be positive, got %r" % (n,))
    N = J.num_vars
    powers = []
    for i, e in enumerate(n):
        p = [0] * N
        p[i] = e
        powers.append(tuple(p))
    allgens = list(J.gens) + powers
    keep = _antichain(allgens)
    k = len(J.gens)
    jpart = tuple(pos for pos, i in enumerate(keep) if i < k)
    pure = tuple(pos for pos, i in enumerate(keep) if i >= k)
    return MonomialIdeal(N, tuple(allgens[i] for i in keep), jpart, pure)


def subideal(I: MonomialIdeal, indices: Sequence[int]) -> MonomialIdeal:
    """The ideal generated by the selected generators of I, in index order."""
    indices = sorted(indices)
    return MonomialIdeal(I.num_vars, tuple(I.gens[i] for i in indices))


def compress_mask(mask: int, indices: Sequence[int]) -> int:
    """Re-index a subset of ``indices`` to bits 0..len(indices)-1."""
    out = 0
    for pos, i in enumerate(sorted(indices)):
        if mask >> i & 1:
            out |= 1 << pos
    return out


def expand_mask(mask: int, indices: Sequence[int]) -> int:
    out = 0
    for pos, i in enumerate(sorted(indices)):
        if mask >> pos & 1:
            out |= 1 << i
    return out


@dataclass(frozen=True)
class LcmLattice:
    """The lcm lattice with the fibers of ``sigma -> lcm(sigma)``.

    ``point_of[mask]`` is the index into ``points`` of ``lcm(mask)``.
    Fibers are sorted by cardinality descending, then bitmask ascending.
    """

    ideal: MonomialIdeal
    points: tuple
    point_of: tuple
    fibers: tuple
    index: dict = field(repr=False)

    def lcm(self, mask: int) -> Monomial:
        return self.points[self.point_of[mask]]

    def __len__(self):
        return len(self.points)

    def __contains__(self, p):
        return tuple(p) in self.index

    def point_index(self, p: Monomial) -> int:
        try:
            return self.index[tuple(p)]
        except KeyError:
            raise DomainError("%r is not in the lcm lattice" % (p,)) from None

    def fiber(self, p: Monomial) -> tuple:
        return self.fibers[self.point_index(p)]

    def mp(self, p: Monomial) -> tuple:
        """J-part generators dividing p."""
        gens = self.ideal.gens
        return tuple(i for i in self.ideal.jpart if divides(gens[i], p))

    def pure_powers(self, p: Monomial) -> tuple:
        """Designated pure-power generators dividing p."""
        gens = self.ideal.gens
        return tuple(i for i in self.ideal.pure_powers if divides(gens[i], p))


def _lcm_table(gens: Sequence[Monomial], n: int) -> np.ndarray:
    q = len(gens)
    top = max((max(g) for g in gens if g), default=0)
    dtype = np.min_scalar_type(top)
    table = np.zeros((1 << q, n), dtype=dtype)
    for k, g in enumerate(gens):
        lo = 1 << k
        np.maximum(table[:lo], np.asarray(g, dtype=dtype), out=table[lo : 2 * lo])
    return table


def build_lcm_lattice(I: MonomialIdeal, max_gens: int = MAX_GENS) -> LcmLattice:
    q = I.q
    if q > max_gens:
        raise CapacityError("%d generators exceed the limit of %d" % (q, max_gens))
    table = _lcm_table(I.gens, I.num_vars)
    if I.num_vars:
        uniq, inverse = np.unique(table, axis=0, return_inverse=True)
    else:
        uniq, inverse = np.zeros((1, 0), dtype=int), np.zeros(len(table), dtype=int)
    inverse = inverse.reshape(-1)
    points = tuple(tuple(int(e) for e in row) for row in uniq)
    masks = np.arange(1 << q, dtype=np.int64)
    pc = np.zeros(1 << q, dtype=np.int64)
    for k in range(q):
        pc += (masks >> k) & 1
    order = np.lexsort((masks, -pc, inverse))
    bounds = np.searchsorted(inverse[order], np.arange(len(points) + 1))
    ordered = order.tolist()
    fibers = tuple(tuple(ordered[bounds[i] : bounds[i + 1]]) for i in range(len(points)))
    index = {p: i for i, p in enumerate(points)}
    return LcmLattice(I, points, tuple(inverse.tolist()), fibers, index)
