"""Brute-force reference computations.

Nothing here imports the search or propagation code: every helper works by
plain enumeration over lists so it can serve as an independent check.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations, product

import numpy as np

# Alexander quandle of Z2 x Z2 under the swap of 2 and 3, and the pieces it comes from.
KLEIN_QUANDLE = [[1, 4, 4, 1], [3, 2, 2, 3], [2, 3, 3, 2], [4, 1, 1, 4]]
KLEIN = [[1, 2, 3, 4], [2, 1, 4, 3], [3, 4, 1, 2], [4, 3, 2, 1]]
KLEIN_PHI = (1, 3, 2, 4)
NON_ALEXANDER = [[1, 1, 2], [2, 2, 1], [3, 3, 3]]


def is_quandle(t) -> bool:
    n = len(t)
    r = range(n)
    if any(t[i][i] != i + 1 for i in r):
        return False
    if any(sorted(t[i][j] for i in r) != list(range(1, n + 1)) for j in r):
        return False
    return all(
        t[t[i][j] - 1][k] == t[t[i][k] - 1][t[j][k] - 1]
        for i in r for j in r for k in r
    )


def is_medial(t) -> bool:
    n = len(t)
    op = lambda a, b: t[a - 1][b - 1]  # noqa: E731
    els = range(1, n + 1)
    return all(
        op(op(a, b), op(c, d)) == op(op(a, c), op(b, d))
        for a in els for b in els for c in els for d in els
    )


def is_abelian_group(t) -> bool:
    n = len(t)
    r = range(n)
    if any(t[0][i] != i + 1 or t[i][0] != i + 1 for i in r):
        return False
    if any(t[i][j] != t[j][i] for i in r for j in r):
        return False
    if any(1 not in t[i] for i in r):
        return False
    return all(
        t[t[i][j] - 1][k] == t[i][t[j][k] - 1]
        for i in r for j in r for k in r
    )


def brute_force_abelian_tables(n: int) -> list[tuple[tuple[int, ...], ...]]:
    """Every standard-form abelian group table of order n <= 4.

    Enumerates all n ** ((n-1)**2) fillings of the inner block with numpy and
    filters by identity border (fixed), commutativity, inverses and
    associativity.
    """
    if n == 1:
        return [((1,),)]
    assert n <= 4, "exhaustive oracle is only practical up to order 4"
    m = (n - 1) ** 2
    digits = np.array(list(product(range(n), repeat=m)), dtype=np.int64)
    k = len(digits)
    tabs = np.empty((k, n, n), dtype=np.int64)
    tabs[:, 0, :] = np.arange(n)
    tabs[:, :, 0] = np.arange(n)
    tabs[:, 1:, 1:] = digits.reshape(k, n - 1, n - 1)
    keep = np.all(tabs == tabs.transpose(0, 2, 1), axis=(1, 2))
    keep &= np.all(np.any(tabs == 0, axis=2), axis=1)
    tabs = tabs[keep]
    k = len(tabs)
    idx = np.arange(k)[:, None, None, None]
    i = np.arange(n)[None, :, None, None]
    kk = np.arange(n)[None, None, None, :]
    ij = tabs[:, :, :, None]  # [t, i, j, k] -> ij
    jk = tabs[:, None, :, :]  # [t, i, j, k] -> jk
    assoc = np.all(tabs[idx, ij, kk] == tabs[idx, i, jk], axis=(1, 2, 3))
    tabs = tabs[assoc]
    out = [tuple(tuple(int(v) + 1 for v in row) for row in t) for t in tabs]
    return sorted(out)


def relabelings(table) -> list[tuple[tuple[int, ...], ...]]:
    """All relabelings of a group table by permutations fixing 1 (deduplicated, sorted)."""
    n = len(table)
    seen = set()
    for rest in permutations(range(2, n + 1)):
        p = (1,) + rest  # old label x -> new label p[x-1]
        new = [[0] * n for _ in range(n)]
        for a in range(n):
            for b in range(n):
                new[p[a] - 1][p[b] - 1] = p[table[a][b] - 1]
        seen.add(tuple(tuple(r) for r in new))
    return sorted(seen)


def _cyclic(n):
    return [[(i + j) % n + 1 for j in range(n)] for i in range(n)]


def _product(a, b):
    m = len(b)
    n = len(a) * m
    out = [[0] * n for _ in range(n)]
    for ia, ib, ja, jb in product(range(len(a)), range(m), range(len(a)), range(m)):
        out[ia * m + ib][ja * m + jb] = (a[ia][ja] - 1) * m + b[ib][jb]
    return out


@lru_cache(maxsize=None)
def all_abelian_tables(n: int) -> tuple:
    """Every labeled standard-form abelian table of order n <= 7.

    Uses the fact that the abelian groups of these orders are Z_n, plus
    Z2 x Z2 for n = 4, and relabels each in every way fixing 1.
    """
    assert n <= 7
    bases = [_cyclic(n)]
    if n == 4:
        bases.append(_product(_cyclic(2), _cyclic(2)))
    found = set()
    for base in bases:
        found.update(relabelings(base))
    return tuple(sorted(found))


def brute_force_automorphisms(table) -> list[tuple[int, ...]]:
    n = len(table)
    out = []
    for rest in permutations(range(2, n + 1)):
        phi = (1,) + rest
        if all(
            phi[table[a][b] - 1] == table[phi[a] - 1][phi[b] - 1]
            for a in range(n) for b in range(n)
        ):
            out.append(phi)
    return out


def alexander_table(table, phi) -> list[list[int]]:
    """a ▷ b = phi(a) + b - phi(b), evaluated with explicit inverse search."""
    n = len(table)
    add = lambda a, b: table[a - 1][b - 1]  # noqa: E731
    neg = {a: next(b for b in range(1, n + 1) if add(a, b) == 1) for a in range(1, n + 1)}
    return [
        [add(phi[a - 1], add(b, neg[phi[b - 1]])) for b in range(1, n + 1)]
        for a in range(1, n + 1)
    ]


def brute_force_presentations(q, tables) -> set:
    """All (table, phi) over the given tables and every bijection phi fixing 1."""
    n = len(q)
    q = [list(r) for r in q]
    found = set()
    for t in tables:
        for phi in brute_force_automorphisms(t):
            if alexander_table(t, phi) == q:
                found.add((tuple(tuple(r) for r in t), phi))
    return found


def brute_force_quandles(n: int) -> list[tuple[tuple[int, ...], ...]]:
    """Every labeled quandle of order n.

    Up to order 3 this scans all tables with the forced diagonal. From order
    4 on it picks column permutations fixing the diagonal entry one column at
    a time, checking self-distributivity on every triple whose columns are
    already chosen, and re-checks each finished table with is_quandle.
    """
    found = []
    if n <= 3:
        off = [(i, j) for i in range(n) for j in range(n) if i != j]
        for vals in product(range(1, n + 1), repeat=len(off)):
            t = [[i + 1 if i == j else 0 for j in range(n)] for i in range(n)]
            for (i, j), v in zip(off, vals):
                t[i][j] = v
            if is_quandle(t):
                found.append(tuple(tuple(r) for r in t))
        return sorted(found)

    options = [[p for p in permutations(range(n)) if p[j] == j] for j in range(n)]
    cols: list[tuple[int, ...]] = []

    def consistent(m: int) -> bool:
        # column j maps row i to cols[j][i]; only triples touching column m are new
        for j in range(m + 1):
            for k in range(m + 1):
                if m not in (j, k):
                    continue
                jk = cols[k][j]
                if jk > m:
                    continue
                for i in range(n):
                    if cols[k][cols[j][i]] != cols[jk][cols[k][i]]:
                        return False
        return True

    def extend(m: int) -> None:
        if m == n:
            t = [[cols[j][i] + 1 for j in range(n)] for i in range(n)]
            if is_quandle(t):
                found.append(tuple(tuple(r) for r in t))
            return
        for p in options[m]:
            cols.append(p)
            if consistent(m):
                extend(m + 1)
            cols.pop()

    extend(0)
    return sorted(found)


def brute_force_hom_count(src, dst) -> int:
    m, n = len(src), len(dst)
    return sum(
        all(f[src[i][j] - 1] == dst[f[i] - 1][f[j] - 1] for i in range(m) for j in range(m))
        for f in product(range(1, n + 1), repeat=m)
    )
