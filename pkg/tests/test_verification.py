import itertools
import random

import numpy as np
import pytest

from bmres import (
    AcyclicMatching,
    InconsistencyError,
    MonomialIdeal,
    OrderingFamily,
    TotalOrdering,
    betti_oracle,
    build_morse,
    build_taylor,
    check_resolution,
    find_bad_paths,
    generalized_bm,
    is_minimal,
    minimality_certificate,
    minimalize,
)
from bmres.linalg import rank
from bmres.monomials import divides
from bmres.verification import strand_homology

from conftest import dense_instances, random_family, suite_instances, xyz

# four generators whose identity-ordered matching leaves a bad path at x^2y^2z^2w^2
NONMINIMAL = minimalize([(2, 2, 0, 1), (2, 0, 0, 2), (2, 2, 2, 0), (1, 1, 2, 2)])
TOP = (2, 2, 2, 2)


def ident(I):
    return generalized_bm(I, OrderingFamily.uniform(I, TotalOrdering(range(I.q))))


def koszul_betti(I):
    """Betti numbers from the upper Koszul simplicial complex: b_{i,b} is
    the reduced homology in degree i-2 of {F : x^(b-F) in I}, with ranks
    taken in floating point by numpy."""
    n = I.num_vars
    out = {(0, (0,) * n): 1}
    for b in I.lattice.points:
        faces = []
        for F in itertools.product((0, 1), repeat=n):
            if all(f <= e for f, e in zip(F, b)):
                m = tuple(e - f for f, e in zip(F, b))
                if any(divides(g, m) for g in I.gens):
                    faces.append(F)
        by_dim = {}
        for F in faces:
            by_dim.setdefault(sum(F) - 1, []).append(F)
        if not faces:
            continue

        def bd_rank(d):
            if d not in by_dim or d - 1 not in by_dim:
                return 0
            rows = {F: k for k, F in enumerate(by_dim[d - 1])}
            M = np.zeros((len(rows), len(by_dim[d])))
            for c, F in enumerate(by_dim[d]):
                ones = [i for i in range(n) if F[i]]
                for j, i in enumerate(ones):
                    G = tuple(0 if k == i else F[k] for k in range(n))
                    M[rows[G], c] = (-1) ** j
            return np.linalg.matrix_rank(M)

        for d in range(-1, n):
            h = len(by_dim.get(d, [])) - bd_rank(d) - bd_rank(d + 1)
            if h:
                out[d + 2, b] = h
    return out


def test_betti_examples(triangle):
    B = betti_oracle(triangle)
    assert B.entries == {
        (0, (0, 0, 0)): 1,
        (1, (1, 1, 0)): 1,
        (1, (0, 1, 1)): 1,
        (1, (1, 0, 1)): 1,
        (2, (1, 1, 1)): 2,
    }
    assert B.totals == (1, 3, 2)
    assert betti_oracle(MonomialIdeal(1, ((1,),))).totals == (1, 1)
    assert betti_oracle(minimalize([(1, 0), (0, 1)])).totals == (1, 2, 1)
    assert betti_oracle(NONMINIMAL).totals == (1, 4, 3)


def test_betti_matches_koszul_complex():
    for J, n, I in suite_instances(150, seed=31):
        assert betti_oracle(I).entries == koszul_betti(I)
    for I in dense_instances(20, seed=32):
        assert betti_oracle(I).entries == koszul_betti(I)


def test_betti_characteristic_independent():
    # no torsion shows up for at most five generators in small degrees
    for J, n, I in suite_instances(150, seed=33):
        B = betti_oracle(I).entries
        assert betti_oracle(I, 2).entries == B
        assert betti_oracle(I, 3).entries == B


def test_rank_against_numpy():
    rng = random.Random(8)
    for _ in range(300):
        r, c = rng.randint(0, 6), rng.randint(0, 6)
        M = [[rng.randint(-2, 2) for _ in range(c)] for _ in range(r)]
        want = np.linalg.matrix_rank(np.array(M, dtype=float)) if r and c else 0
        assert rank(M) == want
    # 2 is a unit over Q, zero over GF(2)
    assert rank([[2]]) == 1 and rank([[2]], 2) == 0


def test_check_resolution_accepts(triangle):
    assert check_resolution(triangle, build_taylor(triangle))
    assert check_resolution(triangle, build_morse(triangle, ident(triangle)))
    assert check_resolution(NONMINIMAL, build_morse(NONMINIMAL, ident(NONMINIMAL)))


def test_check_resolution_rejects_corruption():
    I = minimalize([(1, 0), (0, 1)])
    C = build_taylor(I)
    r, coeff, mono = C.diffs[2][0][0]
    C.diffs[2][0][0] = (r, -coeff, mono)
    rep = check_resolution(I, C)
    assert not rep and "d^2" in rep.problems[0]

    C = build_taylor(I)
    C.diffs[2][0][0] = (C.diffs[2][0][0][0], C.diffs[2][0][0][1], (2, 0))
    assert not check_resolution(I, C)


def test_check_resolution_rejects_truncation(triangle):
    # dropping the top cell leaves H_2 at xyz
    T = build_taylor(triangle)
    T.basis, T.degrees, T.diffs = T.basis[:3], T.degrees[:3], T.diffs[:3]
    rep = check_resolution(triangle, T)
    assert not rep and any("H_2" in s for s in rep.problems)


def test_check_resolution_wrong_ideal(triangle):
    other = minimalize(xyz("xy", "yz", "xz2"))
    assert not check_resolution(other, build_taylor(triangle))


def test_is_minimal():
    I = minimalize([(1, 0), (0, 1)])
    assert is_minimal(build_taylor(I))
    assert not is_minimal(build_taylor(minimalize(xyz("xy", "yz", "xz"))))
    assert is_minimal(build_morse(minimalize(xyz("xy", "yz", "xz")), ident(minimalize(xyz("xy", "yz", "xz")))))
    assert not is_minimal(build_morse(NONMINIMAL, ident(NONMINIMAL)))


def test_find_bad_paths(triangle):
    A = ident(triangle)
    for p in triangle.lattice.points:
        assert not find_bad_paths(triangle, A, p)
    A = ident(NONMINIMAL)
    rep = find_bad_paths(NONMINIMAL, A, TOP)
    assert rep and rep.point == TOP
    assert (0b1011, 0b1001, 0b1101, 0b1100) in [p.cells for p in rep.paths]
    assert len(find_bad_paths(NONMINIMAL, A, TOP, limit=1).paths) == 1


def test_bad_paths_end_critical_and_alternate():
    rng = random.Random(4)
    for I in dense_instances(40, seed=41):
        A = generalized_bm(I, random_family(I, rng))
        for p in I.lattice.points:
            fiber = set(I.lattice.fiber(p))
            for path in find_bad_paths(I, A, p).paths:
                cells = path.cells
                assert all(c in fiber for c in cells)
                assert not A.is_matched(cells[0]) and not A.is_matched(cells[-1])
                assert bin(cells[0]).count("1") == bin(cells[-1]).count("1") + 1
                for a, b in zip(cells[1::2], cells[2::2]):
                    assert A.up[a] == b


def test_minimality_certificate(triangle):
    cert = minimality_certificate(triangle, ident(triangle))
    assert cert.minimal and cert.no_bad_paths and cert.ranks == (1, 3, 2)
    cert = minimality_certificate(NONMINIMAL, ident(NONMINIMAL))
    assert not cert.minimal and not cert.unit_free and TOP in cert.bad_paths
    assert cert.ranks == (1, 4, 4, 1)


def test_certificate_inconsistency(monkeypatch):
    import bmres.verification as mod

    monkeypatch.setattr(mod, "find_bad_paths", lambda I, A, p, limit=None: mod.BadPathReport(p, []))
    with pytest.raises(InconsistencyError):
        minimality_certificate(NONMINIMAL, ident(NONMINIMAL))


def test_unit_free_iff_betti_ranks():
    rng = random.Random(6)
    for I in dense_instances(60, seed=43):
        A = generalized_bm(I, random_family(I, rng))
        C = build_morse(I, A)
        assert is_minimal(C) == (C.multidegree_counts() == betti_oracle(I).entries)


def test_strand_homology_off_lattice(triangle):
    # a multidegree off the lattice has the strand of the largest lattice point below it
    T = build_taylor(triangle)
    assert strand_homology(T, (2, 1, 1)) == strand_homology(T, (1, 1, 1))
    assert strand_homology(T, (0, 0, 3)) == strand_homology(T, (0, 0, 0))
    assert strand_homology(T, (0, 0, 0)) == [1, 0, 0, 0]


def test_bad_paths_can_cancel():
    """Two bad paths of opposite sign: the complex is still minimal, so a
    bad path does not by itself force a unit entry."""
    I = minimalize([(1, 0, 0, 1), (0, 0, 2, 1), (1, 1, 2, 0), (1, 2, 0, 0), (0, 1, 1, 1)])
    A = generalized_bm(I, OrderingFamily.uniform(I, TotalOrdering((4, 0, 1, 3, 2))))
    rep = find_bad_paths(I, A, (1, 1, 2, 1))
    assert sorted((p.cells, p.sign) for p in rep.paths) == [((21, 5, 7, 6), 1), ((21, 20, 22, 6), -1)]
    cert = minimality_certificate(I, A)
    assert cert.minimal and not cert.no_bad_paths
    assert cert.ranks == betti_oracle(I).totals == (1, 5, 6, 2)
