import random

import pytest

from bmres import TotalOrdering, minimalize
from bmres.monomials import artinian_reduction

ACCEPTANCE_LINES = []


def random_gens(rng, n_gens, n_vars, max_exp):
    """Random nonconstant monomials."""
    out = []
    while len(out) < n_gens:
        g = tuple(rng.randint(0, max_exp) for _ in range(n_vars))
        if any(g):
            out.append(g)
    return out


def suite_instances(count=500, seed=2024):
    """The acceptance distribution: J with 1-5 generators in at most four
    variables, exponents at most 3; every other instance gets a random
    Artinian reduction with exponents at most 3.

    Yields ``(J, n, I)`` with ``n`` None when there is no reduction.
    """
    rng = random.Random(seed)
    for k in range(count):
        N = rng.randint(1, 4)
        J = minimalize(random_gens(rng, rng.randint(1, 5), N, 3))
        n = [rng.randint(1, 3) for _ in range(N)] if k % 2 else None
        I = artinian_reduction(J, n) if n else J
        yield J, n, I


def dense_instances(count, seed, artinian=True):
    """Instances with many lcm coincidences: up to six variables, small
    exponents, four or five generators in J."""
    rng = random.Random(seed)
    made = 0
    while made < count:
        N = rng.randint(3, 6)
        J = minimalize(random_gens(rng, 5, N, rng.choice([1, 1, 2])))
        if J.q < 4:
            continue
        made += 1
        if artinian and made % 2:
            yield artinian_reduction(J, [rng.randint(1, 3) for _ in range(N)])
        else:
            yield J


def random_family(I, rng):
    from bmres import OrderingFamily

    return OrderingFamily({p: TotalOrdering(rng.sample(range(I.q), I.q)) for p in I.lattice.points})


def xyz(*names):
    """Symbolic monomials in x, y, z, w as exponent tuples of length 3 or 4."""
    n = 4 if any("w" in s for s in names) else 3
    out = []
    for s in names:
        e = [0] * n
        i = 0
        while i < len(s):
            v = "xyzw".index(s[i])
            i += 1
            k = 1
            if i < len(s) and s[i].isdigit():
                k = int(s[i])
                i += 1
            e[v] += k
        out.append(tuple(e))
    return out


@pytest.fixture
def triangle():
    return minimalize(xyz("xy", "yz", "xz"))


@pytest.fixture
def acceptance():
    def record(name, ok, detail=""):
        ACCEPTANCE_LINES.append("%s  %s  %s" % ("PASS" if ok else "FAIL", name, detail))
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
