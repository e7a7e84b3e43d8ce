"""Exact matrix ranks over Q and over prime fields."""

from __future__ import annotations


def rank(rows, characteristic: int = 0) -> int:
    """Rank of an integer matrix given as a list of rows.

    Characteristic 0 uses fraction-free (Bareiss) elimination over the
    integers; a prime characteristic reduces mod p first.
    """
    if characteristic:
        return _rank_mod(rows, characteristic)
    return _rank_bareiss(rows)


def _rank_bareiss(rows) -> int:
    a = [list(r) for r in rows if any(r)]
    if not a:
        return 0
    m, n = len(a), len(a[0])
    r = 0
    prev = 1
    for c in range(n):
        piv = next((i for i in range(r, m) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        pr = a[r]
        pv = pr[c]
        for i in range(r + 1, m):
            row = a[i]
            f = row[c]
            for j in range(c + 1, n):
                row[j] = (pv * row[j] - f * pr[j]) // prev
            row[c] = 0
        prev = pv
        r += 1
        if r == m:
            break
    return r


def _rank_mod(rows, p: int) -> int:
    a = [[x % p for x in r] for r in rows]
    a = [r for r in a if any(r)]
    if not a:
        return 0
    m, n = len(a), len(a[0])
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][c], p - 2, p)
        pr = [x * inv % p for x in a[r]]
        a[r] = pr
        for i in range(m):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], pr)]
        r += 1
        if r == m:
            break
    return r
