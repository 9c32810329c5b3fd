"""Finite quandles as matrices.

Entry ``(i, j)`` of a quandle matrix is ``k`` when ``x_i ▷ x_j = x_k``. The
axioms are idempotency (``i ▷ i = i``), right invertibility (each column is
a permutation) and right self-distributivity
(``(i ▷ j) ▷ k = (i ▷ k) ▷ (j ▷ k)``).

Abelian quandles in the sense used here are often called *medial* elsewhere.
"""

from __future__ import annotations

from itertools import permutations

import numpy as np

from ._table import Table, Verdict, as_zero_based
from .errors import QuandleAxiomError, SizeCapExceeded, Violation
from .group import CayleyMatrix, inverses, validate_group

HOM_SOURCE_CAP = 8
HOM_TARGET_CAP = 12
ENUMERATION_CAP = 5


class QuandleMatrix(Table):
    """A validated quandle matrix. Construction raises on any axiom failure."""

    __slots__ = ()

    def __init__(self, table):
        z = as_zero_based(table)
        problem = _quandle_violation(z)
        if problem is not None:
            raise QuandleAxiomError(problem)
        super().__init__(table)

    @property
    def first_column(self) -> tuple[int, ...]:
        return tuple(int(v) + 1 for v in self.z[:, 0])


def _quandle_violation(z: np.ndarray) -> Violation | None:
    n = len(z)
    r = np.arange(n)
    bad = np.flatnonzero(z[r, r] != r)
    if len(bad):
        i = int(bad[0])
        return Violation("idempotency", (i + 1,), f"axiom (i) fails: {i + 1} ▷ {i + 1} = {z[i, i] + 1}")
    for j in range(n):
        seen: dict[int, int] = {}
        for i in range(n):
            v = int(z[i, j])
            if v in seen:
                return Violation(
                    "right-invertibility", (j + 1, seen[v] + 1, i + 1),
                    f"axiom (ii) fails: column {j + 1} maps rows {seen[v] + 1} and {i + 1} both to {v + 1}",
                )
            seen[v] = i
    for i in range(n):
        # left[j, k] = (i▷j)▷k, right[j, k] = (i▷k)▷(j▷k)
        left = z[z[i][:, None], r[None, :]]
        right = z[z[i][None, :], z]
        hit = np.argwhere(left != right)
        if len(hit):
            j, k = (int(x) for x in hit[0])
            return Violation(
                "self-distributivity", (i + 1, j + 1, k + 1),
                f"axiom (iii) fails: ({i + 1}▷{j + 1})▷{k + 1} != ({i + 1}▷{k + 1})▷({j + 1}▷{k + 1})",
            )
    return None


def quandle_violation(table) -> Violation | None:
    """First violated quandle axiom, or None.

    Axioms are scanned in the order (i), (ii), (iii) with row-major
    witnesses, so the report is deterministic. Malformed input raises
    MalformedTableError instead.
    """
    return _quandle_violation(as_zero_based(table))


def validate_quandle(table) -> QuandleMatrix:
    if isinstance(table, QuandleMatrix):
        return table
    z = as_zero_based(table)
    problem = _quandle_violation(z)
    if problem is not None:
        raise QuandleAxiomError(problem)
    return QuandleMatrix._wrap(z)


def dual_quandle(q: QuandleMatrix) -> QuandleMatrix:
    """Table of ◁, where ``a ◁ b`` is the unique ``c`` with ``c ▷ b = a``."""
    z = q.z
    n = len(z)
    out = np.empty_like(z)
    cols = np.arange(n)
    for i in range(n):
        out[z[i], cols] = i
    return QuandleMatrix._wrap(out)


def is_abelian(q: QuandleMatrix) -> Verdict:
    """Medial law ``(a▷b)▷(c▷d) = (a▷c)▷(b▷d)``; stops at the first bad ``a``."""
    z = q.z
    for a in range(len(z)):
        # indices [b, c, d]
        left = z[z[a][:, None, None], z[None, :, :]]
        right = z[z[a][None, :, None], z[:, None, :]]
        hit = np.argwhere(left != right)
        if len(hit):
            b, c, d = (int(x) + 1 for x in hit[0])
            return Verdict(False, (a + 1, b, c, d))
    return Verdict(True)


def is_left_distributive(q: QuandleMatrix) -> Verdict:
    z = q.z
    for a in range(len(z)):
        left = z[a][z]                                  # a▷(b▷c)
        right = z[z[a][:, None], z[a][None, :]]         # (a▷b)▷(a▷c)
        hit = np.argwhere(left != right)
        if len(hit):
            b, c = (int(x) + 1 for x in hit[0])
            return Verdict(False, (a + 1, b, c))
    return Verdict(True)


def trivial_quandle(n: int) -> QuandleMatrix:
    if n < 1:
        raise ValueError("n must be positive")
    return QuandleMatrix._wrap(np.repeat(np.arange(n)[:, None], n, axis=1))


def dihedral_quandle(n: int) -> QuandleMatrix:
    """``i ▷ j = 2j - i (mod n)``, written on labels as ``((2j - i - 1) mod n) + 1``."""
    if n < 1:
        raise ValueError("n must be positive")
    r = np.arange(n)
    return QuandleMatrix._wrap((2 * r[None, :] - r[:, None]) % n)


def conj_quandle(g) -> QuandleMatrix:
    """Conjugation quandle ``a ▷ b = b⁻¹ a b`` of any group table.

    Raises GroupAxiomError when ``g`` is not a standard-form group table.
    """
    c = g if isinstance(g, CayleyMatrix) else validate_group(g)
    z = c.z
    inv = inverses(c)
    # [a, b] -> (b⁻¹ a) b
    left = z[inv[None, :], np.arange(len(z))[:, None]]
    return QuandleMatrix._wrap(z[left, np.arange(len(z))[None, :]])


def is_quandle_hom(f, src: QuandleMatrix, dst: QuandleMatrix) -> bool:
    """True iff ``f(i ▷ j) = f(i) ▷ f(j)`` for all ``i, j`` in ``src``."""
    fz = np.asarray(f, dtype=np.int64) - 1
    if fz.shape != (src.n,) or np.any((fz < 0) | (fz >= dst.n)):
        return False
    return bool(np.array_equal(fz[src.z], dst.z[fz[:, None], fz[None, :]]))


def is_quandle_iso(f, src: QuandleMatrix, dst: QuandleMatrix) -> bool:
    if src.n != dst.n or sorted(int(v) for v in f) != list(range(1, src.n + 1)):
        return False
    return is_quandle_hom(f, src, dst)


def count_homs(
    src: QuandleMatrix,
    dst: QuandleMatrix,
    max_src: int = HOM_SOURCE_CAP,
    max_dst: int = HOM_TARGET_CAP,
) -> int:
    """Number of quandle homomorphisms ``src -> dst``.

    Exhaustive with partial-assignment pruning, so cost grows like
    ``|dst| ** |src|`` in the worst case; orders above the caps are refused.
    """
    m, n = src.n, dst.n
    if m > max_src or n > max_dst:
        raise SizeCapExceeded(
            f"count_homs capped at source order {max_src} and target order {max_dst}, got {m} -> {n}"
        )
    s = src.z.tolist()
    d = dst.z.tolist()
    f = [-1] * m
    count = 0

    def ok(x: int) -> bool:
        for a in range(x + 1):
            for b in range(x + 1):
                p = s[a][b]
                if p <= x and f[p] != d[f[a]][f[b]]:
                    return False
        return True

    def extend(x: int) -> None:
        nonlocal count
        if x == m:
            count += 1
            return
        for v in range(n):
            f[x] = v
            if ok(x):
                extend(x + 1)
        f[x] = -1

    extend(0)
    return count


def enumerate_quandles(n: int, cap: int = ENUMERATION_CAP):
    """Yield every labeled quandle matrix of order ``n`` (no isomorphism rejection).

    Columns are right translations ``f_j``, which are permutations fixing
    ``j``. Self-distributivity says ``f_k f_j f_k⁻¹ = f_{f_k(j)}``, so once
    two columns are chosen a third is forced; the search branches only on
    columns that are still free.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > cap:
        raise SizeCapExceeded(f"quandle enumeration capped at order {cap}, got {n}")
    choices = [[p for p in permutations(range(n)) if p[j] == j] for j in range(n)]

    def close(cols: list) -> bool:
        changed = True
        while changed:
            changed = False
            for k in range(n):
                fk = cols[k]
                if fk is None:
                    continue
                fk_inv = [0] * n
                for x, y in enumerate(fk):
                    fk_inv[y] = x
                for j in range(n):
                    fj = cols[j]
                    if fj is None:
                        continue
                    forced = tuple(fk[fj[fk_inv[x]]] for x in range(n))
                    target = fk[j]
                    if cols[target] is None:
                        cols[target] = forced
                        changed = True
                    elif cols[target] != forced:
                        return False
        return True

    def search(cols: list):
        try:
            j = cols.index(None)
        except ValueError:
            yield QuandleMatrix._wrap(np.array(cols, dtype=np.int64).T)
            return
        for p in choices[j]:
            trial = list(cols)
            trial[j] = p
            if close(trial):
                yield from search(trial)

    yield from search([None] * n)


__all__ = [
    "ENUMERATION_CAP",
    "HOM_SOURCE_CAP",
    "HOM_TARGET_CAP",
    "QuandleMatrix",
    "conj_quandle",
    "count_homs",
    "dihedral_quandle",
    "dual_quandle",
    "enumerate_quandles",
    "is_abelian",
    "is_left_distributive",
    "is_quandle_hom",
    "is_quandle_iso",
    "quandle_violation",
    "trivial_quandle",
    "validate_quandle",
]
