"""Standard-form Cayley matrices for finite groups.

A Cayley matrix lists ``x_i x_j`` in row ``i``, column ``j``, with element 1
as the identity, so row 1 and column 1 both read ``1..n``.
"""

from __future__ import annotations

import numpy as np

from ._table import Table, Verdict, as_permutation, as_zero_based
from .errors import GroupAxiomError, SizeCapExceeded, Violation

AUTOMORPHISM_CAP = 10


class CayleyMatrix(Table):
    """A validated standard-form group table (commutativity not required)."""

    __slots__ = ()

    def __init__(self, table):
        problem = _group_violation(as_zero_based(table))
        if problem is not None:
            raise GroupAxiomError(problem)
        super().__init__(table)

    @property
    def is_abelian(self) -> bool:
        return bool(is_commutative(self))

    def inverse(self, i: int) -> int:
        return group_inverse(self, i)


def _z(c) -> np.ndarray:
    return c.z if isinstance(c, Table) else as_zero_based(c)


def is_associative(c) -> Verdict:
    """Check ``(ij)k = i(jk)`` for every triple; witness is the first bad (i, j, k)."""
    z = _z(c)
    n = len(z)
    for i in range(n):
        # left[j, k] = (ij)k, right[j, k] = i(jk)
        left = z[z[i][:, None], np.arange(n)[None, :]]
        right = z[i][z]
        bad = np.argwhere(left != right)
        if len(bad):
            j, k = bad[0]
            return Verdict(False, (i + 1, int(j) + 1, int(k) + 1))
    return Verdict(True)


def is_commutative(c) -> Verdict:
    z = _z(c)
    bad = np.argwhere(z != z.T)
    if len(bad):
        i, j = bad[0]
        return Verdict(False, (int(i) + 1, int(j) + 1))
    return Verdict(True)


def has_inverses(c) -> Verdict:
    """Every row and every column must contain the identity 1.

    The witness is ``(i,)`` for a bad row or ``(0, j)`` for a bad column.
    """
    z = _z(c)
    rows = np.flatnonzero(~np.any(z == 0, axis=1))
    if len(rows):
        return Verdict(False, (int(rows[0]) + 1,))
    cols = np.flatnonzero(~np.any(z == 0, axis=0))
    if len(cols):
        return Verdict(False, (0, int(cols[0]) + 1))
    return Verdict(True)


def _latin_violation(z: np.ndarray) -> Violation | None:
    n = len(z)
    want = np.arange(n)
    for i in range(n):
        if not np.array_equal(np.sort(z[i]), want):
            return Violation("latin", (i + 1,), f"row {i + 1} is not a permutation of 1..{n}")
    for j in range(n):
        if not np.array_equal(np.sort(z[:, j]), want):
            return Violation("latin", (0, j + 1), f"column {j + 1} is not a permutation of 1..{n}")
    return None


def group_violation(c, abelian: bool = False) -> Violation | None:
    """First failed group axiom, scanning identity, associativity, inverses,
    Latin property and (when ``abelian``) commutativity, in that order."""
    return _group_violation(_z(c), abelian)


def _group_violation(z: np.ndarray, abelian: bool = False) -> Violation | None:
    n = len(z)
    for i in range(n):
        if z[0, i] != i or z[i, 0] != i:
            return Violation(
                "identity", (i + 1,),
                f"element 1 is not the identity: 1*{i + 1} = {z[0, i] + 1}, {i + 1}*1 = {z[i, 0] + 1}",
            )
    verdict = is_associative(z + 1)
    if not verdict:
        i, j, k = verdict.witness
        return Violation("associativity", verdict.witness, f"({i}*{j})*{k} != {i}*({j}*{k})")
    verdict = has_inverses(z + 1)
    if not verdict:
        where = f"row {verdict.witness[0]}" if len(verdict.witness) == 1 else f"column {verdict.witness[1]}"
        return Violation("inverses", verdict.witness, f"{where} does not contain the identity 1")
    problem = _latin_violation(z)
    if problem is not None:
        return problem
    if abelian:
        verdict = is_commutative(z + 1)
        if not verdict:
            i, j = verdict.witness
            return Violation("commutativity", verdict.witness, f"{i}*{j} != {j}*{i}")
    return None


def validate_group(c) -> CayleyMatrix:
    """Return ``c`` as a CayleyMatrix or raise GroupAxiomError naming the first failure."""
    problem = group_violation(c)
    if problem is not None:
        raise GroupAxiomError(problem)
    return CayleyMatrix._wrap(_z(c))


def validate_abelian_group(c) -> CayleyMatrix:
    problem = group_violation(c, abelian=True)
    if problem is not None:
        raise GroupAxiomError(problem)
    return CayleyMatrix._wrap(_z(c))


def cyclic_group(n: int) -> CayleyMatrix:
    """Cayley matrix of Z_n with label ``k`` standing for residue ``k - 1``."""
    if n < 1:
        raise ValueError("n must be positive")
    r = np.arange(n)
    return CayleyMatrix._wrap((r[:, None] + r[None, :]) % n)


def direct_product(a: CayleyMatrix, b: CayleyMatrix) -> CayleyMatrix:
    """Cayley matrix of a x b; the pair (i, j) gets label ``(i - 1) * |b| + j``."""
    za, zb = _z(a), _z(b)
    m = len(zb)
    # [ia, ib, ja, jb] -> za[ia, ja] * m + zb[ib, jb]
    big = za[:, None, :, None] * m + zb[None, :, None, :]
    return CayleyMatrix._wrap(big.reshape(len(za) * m, len(za) * m))


def group_inverse(c, i: int) -> int:
    z = _z(c)
    return int(np.flatnonzero(z[i - 1] == 0)[0]) + 1


def inverses(c) -> np.ndarray:
    """0-based inverse of every element, as an array."""
    z = _z(c)
    return np.argmin(z, axis=1)


def element_orders(c) -> list[int]:
    z = _z(c)
    orders = []
    for x in range(len(z)):
        k, y = 1, x
        while y != 0:
            y = int(z[y, x])
            k += 1
        orders.append(k)
    return orders


def is_group_automorphism(phi, c) -> bool:
    """True iff ``phi`` is a bijection with ``phi(ij) = phi(i) phi(j)`` for all i, j."""
    z = _z(c)
    try:
        p = as_permutation(phi, len(z))
    except ValueError:
        return False
    return bool(np.array_equal(p[z], z[p[:, None], p[None, :]]))


def automorphism_group(c, cap: int = AUTOMORPHISM_CAP) -> list[tuple[int, ...]]:
    """All automorphisms as 1-based image vectors, in lexicographic order.

    Exhaustive backtracking over images of 2, 3, ..., n. Candidates must keep
    element orders and every product of already-mapped elements. The search
    is refused for groups of order above ``cap``.
    """
    z = _z(c)
    n = len(z)
    if n > cap:
        raise SizeCapExceeded(f"automorphism search capped at order {cap}, got {n}")
    orders = element_orders(z + 1)
    z = z.tolist()
    phi = [-1] * n
    phi[0] = 0
    used = [False] * n
    used[0] = True
    found: list[tuple[int, ...]] = []

    def consistent(x: int) -> bool:
        # elements 0..x are assigned; check every product landing among them
        for a in range(x + 1):
            for b in range(x + 1):
                p = z[a][b]
                if phi[p] >= 0 and phi[p] != z[phi[a]][phi[b]]:
                    return False
        return True

    def extend(x: int) -> None:
        if x == n:
            found.append(tuple(v + 1 for v in phi))
            return
        for v in range(1, n):
            if used[v] or orders[v] != orders[x]:
                continue
            phi[x] = v
            used[v] = True
            if consistent(x):
                extend(x + 1)
            used[v] = False
            phi[x] = -1

    extend(1)
    return found


def compose(f, g) -> tuple[int, ...]:
    """``f after g`` for 1-based image vectors."""
    return tuple(f[x - 1] for x in g)


def inverse_permutation(f) -> tuple[int, ...]:
    out = [0] * len(f)
    for i, v in enumerate(f, start=1):
        out[v - 1] = i
    return tuple(out)


def relabel(c, perm) -> np.ndarray:
    """Transport the operation along the relabeling ``x -> perm(x)`` (1-based table out)."""
    z = _z(c)
    p = as_permutation(perm, len(z))
    out = np.empty_like(z)
    out[p[:, None], p[None, :]] = p[z]
    return out + 1


def nonabelian_order6() -> CayleyMatrix:
    """Cayley matrix of the symmetric group on three letters.

    Elements are the permutations of (0, 1, 2) in lexicographic order, so the
    identity comes first; the product is composition ``(st)(x) = s(t(x))``.
    """
    from itertools import permutations

    perms = list(permutations(range(3)))
    index = {p: k for k, p in enumerate(perms)}
    z = np.array([[index[tuple(s[t[x]] for x in range(3))] for t in perms] for s in perms])
    return CayleyMatrix._wrap(z)


__all__ = [
    "AUTOMORPHISM_CAP",
    "CayleyMatrix",
    "automorphism_group",
    "compose",
    "cyclic_group",
    "direct_product",
    "element_orders",
    "group_inverse",
    "group_violation",
    "has_inverses",
    "inverse_permutation",
    "inverses",
    "is_associative",
    "is_commutative",
    "is_group_automorphism",
    "nonabelian_order6",
    "relabel",
    "validate_abelian_group",
    "validate_group",
]
