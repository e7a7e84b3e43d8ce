"""Structural lemmas checked on random instances.

Each ``check_*`` returns ``(instances examined, violations)`` so the
acceptance module can reuse it.
"""

import itertools
import random

from bmres import SetType, bridges, classify, find_bad_paths, gaps, generalized_bm
from bmres.matching import AcyclicMatching, barile_macchia
from bmres.monomials import divides
from bmres.search import extend_ordering

from conftest import dense_instances, random_family, suite_instances


def artinian_instances(count=1000, seed=2024):
    """Artinian reductions that keep at least one pure power."""
    return [I for _, n, I in suite_instances(count, seed) if n and I.pure_powers]


def check_localization(instances):
    """No pure power is a bridge; pure powers dividing p are never gaps of
    members of fiber(p)."""
    bad = []
    for I in instances:
        pure = set(I.pure_powers)
        for p, fiber in zip(I.lattice.points, I.lattice.fibers):
            dividing = {i for i in pure if divides(I.gens[i], p)}
            for s in fiber:
                if pure & set(bridges(I, s)):
                    bad.append((I, s, "pure-power bridge"))
                if dividing & set(gaps(I, s)):
                    bad.append((I, s, "pure-power gap"))
    return len(instances), bad


def check_lcm_structure(instances):
    """Members of one fiber contain the same pure powers."""
    bad = []
    for I in instances:
        pm = I.pure_mask
        for fiber in I.lattice.fibers:
            if len({s & pm for s in fiber}) > 1:
                bad.append((I, fiber))
    return len(instances), bad


def check_critical_two_ways(instances, seed=0):
    """Every critical set is bridgeless and neither type-1 nor potentially
    type-2, or potentially type-2 without being type-2."""
    rng = random.Random(seed)
    bad = []
    for I in instances:
        fam = random_family(I, rng)
        A = generalized_bm(I, fam)
        for p, fiber in zip(I.lattice.points, I.lattice.fibers):
            order = fam[p]
            for s in fiber:
                if A.is_matched(s):
                    continue
                t = classify(I, s, order, fiber)
                first = t is SetType.NEITHER and not bridges(I, s)
                second = t is SetType.POTENTIALLY_TYPE2
                if first == second:
                    bad.append((I, s, t))
    return len(instances), bad


def check_losing_the_end(instances, seed=0, jpart_only=False):
    """If m is the smallest generator for the ordering at p = lcm(sigma) and
    m divides lcm(sigma - m), sigma is matched. With ``jpart_only`` m is
    the smallest generator of the J-part instead."""
    rng = random.Random(seed)
    bad = []
    hits = 0
    for I in instances:
        fam = random_family(I, rng)
        A = generalized_bm(I, fam)
        for s in range(1, 1 << I.q):
            order = fam[I.lcm(s)].order
            if jpart_only:
                order = [x for x in order if x in I.jpart]
                if not order:
                    continue
            m = order[-1]
            if divides(I.gens[m], I.lcm(s & ~(1 << m))):
                hits += 1
                if not A.is_matched(s):
                    bad.append((I, s, m))
    assert hits > 0
    return len(instances), bad


def check_small_mp(instances):
    """With at most three J-part generators dividing p, no ordering leaves
    a bad path of type p."""
    bad = []
    for I in instances:
        for p, fiber in zip(I.lattice.points, I.lattice.fibers):
            mp = I.lattice.mp(p)
            if len(mp) > 3 or len(fiber) < 2:
                continue
            for head in itertools.permutations(mp):
                order = extend_ordering(I, head)
                A = AcyclicMatching.from_edges(I.q, barile_macchia(I, fiber, order).items())
                if find_bad_paths(I, A, p):
                    bad.append((I, p, head))
    return len(instances), bad


def small_mp_instances(count=300, seed=71):
    """Suite instances, where most lattice points qualify, alongside dense
    ones."""
    return [I for _, _, I in suite_instances(count, seed)] + list(dense_instances(count // 3, seed + 1))


def test_localization():
    n, bad = check_localization(artinian_instances())
    assert n >= 200 and not bad


def test_lcm_structure():
    n, bad = check_lcm_structure(artinian_instances())
    assert n >= 200 and not bad


def test_critical_two_ways():
    insts = [I for _, _, I in suite_instances(250, seed=72)] + list(dense_instances(60, seed=73))
    n, bad = check_critical_two_ways(insts)
    assert n >= 200 and not bad


def test_losing_the_end():
    insts = artinian_instances() + list(dense_instances(60, seed=74))
    n, bad = check_losing_the_end(insts)
    assert n >= 200 and not bad


def test_losing_the_end_jpart():
    insts = artinian_instances() + list(dense_instances(60, seed=75))
    n, bad = check_losing_the_end(insts, jpart_only=True)
    assert n >= 200 and not bad


def test_small_mp_never_bad():
    n, bad = check_small_mp(small_mp_instances())
    assert n >= 200 and not bad
