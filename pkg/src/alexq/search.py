"""Recovering Alexander presentations from a quandle matrix.

An Alexander presentation of a quandle is an abelian group structure on its
elements plus a group automorphism ``phi`` with ``a ▷ b = phi(a) + b - phi(b)``.
With the group identity pinned to element 1 (no loss of generality, since
translations are quandle automorphisms), ``phi`` is the first column of the
quandle matrix, and the group table is rebuilt cell by cell:

* ``a▷b + b▷a = a + b`` and ``a▷b + b▷c = a▷c + b`` identify pairs of cells
  that must hold the same value;
* commutativity, associativity and the Latin-square property fill further
  cells or expose contradictions;
* whatever is still blank is branched on, smallest value first, and every
  completed table is checked against ``phi`` and the original matrix.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .group import (
    CayleyMatrix,
    cyclic_group,
    has_inverses,
    inverses,
    is_associative,
    is_commutative,
    is_group_automorphism,
)
from ._table import as_permutation
from .errors import NotAnAutomorphism
from .quandle import QuandleMatrix, is_abelian, validate_quandle

NOT_ABELIAN = "not-abelian"
CONTRADICTION = "contradiction"
NO_VALID_GROUP = "no-valid-group"
SUCCESS = "success"


class Contradiction(Exception):
    """Two constraints demand different values for the same cell(s).

    ``cells`` holds the 1-based cell positions involved in the clash.
    """

    def __init__(self, message: str, cells: tuple[tuple[int, int], ...] = ()):
        super().__init__(message)
        self.cells = cells


class PartialCayley:
    """Cayley table under construction; 0 marks an unknown entry (1-based values)."""

    __slots__ = ("_cells",)

    def __init__(self, table):
        arr = np.array(table, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
            raise ValueError(f"partial table must be square, got shape {arr.shape}")
        n = arr.shape[0]
        if np.any((arr < 0) | (arr > n)):
            raise ValueError(f"partial table entries must lie in 0..{n}")
        arr.setflags(write=False)
        self._cells = arr

    @property
    def n(self) -> int:
        return self._cells.shape[0]

    @property
    def table(self) -> np.ndarray:
        return self._cells

    def tolist(self) -> list[list[int]]:
        return self._cells.tolist()

    def is_complete(self) -> bool:
        return bool(np.all(self._cells > 0))

    def unknowns(self) -> int:
        return int(np.count_nonzero(self._cells == 0))

    def __eq__(self, other) -> bool:
        if not isinstance(other, PartialCayley):
            return NotImplemented
        return bool(np.array_equal(self._cells, other._cells))

    def __hash__(self) -> int:
        return hash(self._cells.tobytes())

    def __repr__(self) -> str:
        return f"PartialCayley({self.tolist()})"


@dataclass(frozen=True)
class AlexanderPresentation:
    cayley: CayleyMatrix
    phi: tuple[int, ...]


@dataclass
class SearchOutcome:
    status: str
    presentations: list[AlexanderPresentation] = field(default_factory=list)
    diagnostics: str | None = None
    completions: int = 0

    @property
    def is_alexander(self) -> bool:
        return self.status == SUCCESS


class _Grid:
    """Mutable propagation state over a 0-based partial table (-1 = unknown).

    Every newly known cell is queued once; ``run`` drains the queue applying
    commutativity, associativity (any three of the four cells in
    ``(xy)z = x(yz)`` determine the fourth), Latin-square completion and the
    extra cell links supplied by the caller.
    """

    __slots__ = ("n", "cells", "rpos", "cpos", "rfree", "cfree", "queue", "links")

    def __init__(self, n: int, links=None):
        self.n = n
        self.cells = [[-1] * n for _ in range(n)]
        self.rpos = [[-1] * n for _ in range(n)]
        self.cpos = [[-1] * n for _ in range(n)]
        self.rfree = [n] * n
        self.cfree = [n] * n
        self.queue: list[tuple[int, int]] = []
        self.links = links

    @classmethod
    def from_partial(cls, partial: PartialCayley, links=None) -> "_Grid":
        grid = cls(partial.n, links)
        for (i, j), v in np.ndenumerate(partial.table):
            if v:
                grid.set(i, j, int(v) - 1)
        return grid

    def copy(self) -> "_Grid":
        new = _Grid.__new__(_Grid)
        new.n = self.n
        new.cells = [row[:] for row in self.cells]
        new.rpos = [row[:] for row in self.rpos]
        new.cpos = [row[:] for row in self.cpos]
        new.rfree = self.rfree[:]
        new.cfree = self.cfree[:]
        new.queue = self.queue[:]
        new.links = self.links
        return new

    def partial(self) -> PartialCayley:
        return PartialCayley(np.array(self.cells, dtype=np.int64) + 1)

    def set(self, i: int, j: int, v: int) -> None:
        cur = self.cells[i][j]
        if cur == v:
            return
        if cur != -1:
            raise Contradiction(
                f"cell ({i + 1},{j + 1}) holds {cur + 1} but {v + 1} is required",
                ((i + 1, j + 1),),
            )
        other = self.rpos[i][v]
        if other != -1:
            raise Contradiction(
                f"value {v + 1} would appear twice in row {i + 1}",
                ((i + 1, other + 1), (i + 1, j + 1)),
            )
        other = self.cpos[j][v]
        if other != -1:
            raise Contradiction(
                f"value {v + 1} would appear twice in column {j + 1}",
                ((other + 1, j + 1), (i + 1, j + 1)),
            )
        self.cells[i][j] = v
        self.rpos[i][v] = j
        self.cpos[j][v] = i
        self.rfree[i] -= 1
        self.cfree[j] -= 1
        self.queue.append((i, j))

    def unify(self, a: tuple[int, int], b: tuple[int, int]) -> None:
        va = self.cells[a[0]][a[1]]
        vb = self.cells[b[0]][b[1]]
        if va == vb:
            return
        if va == -1:
            self.set(a[0], a[1], vb)
        elif vb == -1:
            self.set(b[0], b[1], va)
        else:
            raise Contradiction(
                f"cells ({a[0] + 1},{a[1] + 1}) = {va + 1} and ({b[0] + 1},{b[1] + 1}) = {vb + 1} must agree",
                ((a[0] + 1, a[1] + 1), (b[0] + 1, b[1] + 1)),
            )

    def run(self) -> None:
        n = self.n
        c = self.cells
        rpos, cpos = self.rpos, self.cpos
        links = self.links
        queue = self.queue
        while queue:
            i, j = queue.pop()
            v = c[i][j]

            self.set(j, i, v)

            if links is not None:
                for k, perm in links[i * n + j]:
                    self.set(k // n, k % n, v if perm is None else perm[v])

            if self.rfree[i] == 1:
                self._complete_row(i)
            if self.cfree[j] == 1:
                self._complete_col(j)

            # (i j) z = i (j z)
            for z in range(n):
                yz = c[j][z]
                if yz != -1:
                    self.unify((v, z), (i, yz))
                else:
                    w = c[v][z]
                    if w != -1 and rpos[i][w] != -1:
                        self.set(j, z, rpos[i][w])
            # (x i) j = x (i j)
            for x in range(n):
                xi = c[x][i]
                if xi != -1:
                    self.unify((xi, j), (x, v))
                else:
                    w = c[x][v]
                    if w != -1 and cpos[j][w] != -1:
                        self.set(x, i, cpos[j][w])
            # i is a product x y: (x y) j = x (y j)
            for x in range(n):
                y = rpos[x][i]
                if y == -1:
                    continue
                yj = c[y][j]
                if yj != -1:
                    self.set(x, yj, v)
                elif rpos[x][v] != -1:
                    self.set(y, j, rpos[x][v])
            # j is a product y z: i (y z) = (i y) z
            for z in range(n):
                y = cpos[z][j]
                if y == -1:
                    continue
                iy = c[i][y]
                if iy != -1:
                    self.set(iy, z, v)
                elif cpos[z][v] != -1:
                    self.set(i, y, cpos[z][v])

    def _complete_row(self, i: int) -> None:
        row = self.cells[i]
        j = row.index(-1)
        v = self.rpos[i].index(-1)
        self.set(i, j, v)

    def _complete_col(self, j: int) -> None:
        col = [self.cells[i][j] for i in range(self.n)]
        i = col.index(-1)
        v = self.cpos[j].index(-1)
        self.set(i, j, v)

    def first_unknown(self) -> tuple[int, int] | None:
        for i, row in enumerate(self.cells):
            if self.rfree[i]:
                return i, row.index(-1)
        return None

    def identity_reachable(self) -> bool:
        """Every row and column still holds 1 or has a blank that could."""
        for k in range(self.n):
            if self.rpos[k][0] == -1 and self.rfree[k] == 0:
                return False
            if self.cpos[k][0] == -1 and self.cfree[k] == 0:
                return False
        return True


def _link_table(n: int, pairs, mapped=()) -> list[list]:
    """Adjacency list over flattened cells; ``mapped`` entries carry a value map."""
    links: list[list] = [[] for _ in range(n * n)]
    seen = set()
    for (a, b), (c, d) in pairs:
        p, q = a * n + b, c * n + d
        if p == q or (p, q) in seen:
            continue
        seen.add((p, q))
        seen.add((q, p))
        links[p].append((q, None))
        links[q].append((p, None))
    for (a, b), (c, d), perm, inv in mapped:
        p, q = a * n + b, c * n + d
        links[p].append((q, perm))
        links[q].append((p, inv))
    return links


def additive_cell_pairs(q: QuandleMatrix):
    """Cell pairs forced equal by ``a▷b + b▷a = a+b`` and ``a▷b + b▷c = a▷c + b``.

    Yields 0-based ``((row, col), (row, col))`` pairs.
    """
    z = q.z.tolist()
    n = len(z)
    for a in range(n):
        for b in range(n):
            yield (z[a][b], z[b][a]), (a, b)
    for a in range(n):
        for b in range(n):
            for c in range(n):
                yield (z[a][b], z[b][c]), (z[a][c], b)


def _presentation_links(q: QuandleMatrix, phi: list[int]) -> list[list]:
    # a▷b + phi(b) = phi(a) + b, and phi(x + y) = phi(x) + phi(y)
    z = q.z.tolist()
    n = len(z)
    pairs = list(additive_cell_pairs(q))
    pairs += [((z[a][b], phi[b]), (phi[a], b)) for a in range(n) for b in range(n)]
    inv = [0] * n
    for x, y in enumerate(phi):
        inv[y] = x
    mapped = [((i, j), (phi[i], phi[j]), phi, inv) for i in range(n) for j in range(n)]
    return _link_table(n, pairs, mapped)


def seed_partial(q: QuandleMatrix) -> PartialCayley:
    """Blank table with row and column 1 set to the identity pattern."""
    n = q.n
    cells = np.zeros((n, n), dtype=np.int64)
    cells[0, :] = np.arange(1, n + 1)
    cells[:, 0] = np.arange(1, n + 1)
    return PartialCayley(cells)


def apply_lemma_constraints(q: QuandleMatrix, c: PartialCayley) -> PartialCayley:
    """Fill every cell forced by the two additive identities and the group axioms.

    Raises Contradiction when two forced values clash; with the identity at
    element 1 that rules out any Alexander structure on ``q``.
    """
    q = validate_quandle(q)
    links = _link_table(q.n, additive_cell_pairs(q))
    grid = _Grid.from_partial(c, links)
    grid.run()
    return grid.partial()


def propagate_group_axioms(c: PartialCayley) -> PartialCayley:
    """Fixpoint of commutativity, associativity and Latin-square completion."""
    grid = _Grid.from_partial(c)
    grid.run()
    return grid.partial()


def find_zero(c: PartialCayley) -> tuple[int, int] | None:
    hits = np.argwhere(c.table == 0)
    if not len(hits):
        return None
    i, j = hits[0]
    return int(i) + 1, int(j) + 1


def _complete_tables(grid: _Grid) -> list[CayleyMatrix]:
    found: list[CayleyMatrix] = []
    seen: set[bytes] = set()
    n = grid.n

    def descend(g: _Grid) -> None:
        cell = g.first_unknown()
        if cell is None:
            z = np.array(g.cells, dtype=np.int64)
            key = z.tobytes()
            if key in seen:
                return
            if is_associative(z + 1) and is_commutative(z + 1) and has_inverses(z + 1):
                seen.add(key)
                found.append(CayleyMatrix._wrap(z))
            return
        i, j = cell
        for v in range(n):
            if g.rpos[i][v] != -1 or g.cpos[j][v] != -1:
                continue
            branch = g.copy()
            try:
                branch.set(i, j, v)
                branch.run()
            except Contradiction:
                continue
            if branch.identity_reachable():
                descend(branch)

    try:
        grid.run()
    except Contradiction:
        return found
    if grid.identity_reachable():
        descend(grid)
    return found


def zero_fill(c: PartialCayley) -> list[CayleyMatrix]:
    """All abelian group tables extending ``c``, in depth-first search order.

    Branches on the first blank cell (row-major) with values ascending and
    propagates after each choice.
    """
    return _complete_tables(_Grid.from_partial(c))


def alexander_quandle(c: CayleyMatrix, phi) -> QuandleMatrix:
    """Quandle matrix of ``a ▷ b = phi(a) + b - phi(b)`` on an abelian group."""
    if not isinstance(c, CayleyMatrix):
        c = CayleyMatrix(c)
    if not is_commutative(c):
        raise NotAnAutomorphism("Alexander quandles need a commutative group table")
    if not is_group_automorphism(phi, c):
        raise NotAnAutomorphism(f"{list(phi)} is not an automorphism of the group")
    z = c.z
    p = as_permutation(phi, c.n)
    shift = z[np.arange(c.n), inverses(c)[p]]  # b - phi(b)
    return QuandleMatrix._wrap(z[p[:, None], shift[None, :]])


def alexander_presentations(q, prune: bool = True) -> SearchOutcome:
    """Every Alexander presentation of ``q`` with the identity at element 1.

    Presentations are labeled: isomorphic groups with different labelings
    are reported separately, in the order the search reaches them.

    With ``prune`` the branch-and-propagate phase also enforces the
    reconstruction identity and the automorphism property of ``phi`` while
    filling cells. These hold for every presentation, so the output is the
    same; only dead branches are cut earlier.
    """
    q = validate_quandle(q)
    n = q.n
    phi = q.first_column
    if n == 1:
        return SearchOutcome(SUCCESS, [AlexanderPresentation(cyclic_group(1), phi)], completions=1)

    verdict = is_abelian(q)
    if not verdict:
        a, b, c, d = verdict.witness
        return SearchOutcome(
            NOT_ABELIAN,
            diagnostics=f"({a}▷{b})▷({c}▷{d}) != ({a}▷{c})▷({b}▷{d})",
        )

    try:
        partial = apply_lemma_constraints(q, seed_partial(q))
    except Contradiction as exc:
        return SearchOutcome(CONTRADICTION, diagnostics=str(exc))

    if prune:
        phi0 = [v - 1 for v in phi]
        tables = _complete_tables(_Grid.from_partial(partial, _presentation_links(q, phi0)))
    else:
        tables = zero_fill(partial)

    found = [
        AlexanderPresentation(c, phi)
        for c in tables
        if is_group_automorphism(phi, c) and alexander_quandle(c, phi) == q
    ]
    if found:
        return SearchOutcome(SUCCESS, found, completions=len(tables))
    return SearchOutcome(
        NO_VALID_GROUP,
        diagnostics=f"{len(tables)} completed group table(s), none reproduces the quandle",
        completions=len(tables),
    )


__all__ = [
    "CONTRADICTION",
    "NOT_ABELIAN",
    "NO_VALID_GROUP",
    "SUCCESS",
    "AlexanderPresentation",
    "Contradiction",
    "PartialCayley",
    "SearchOutcome",
    "alexander_presentations",
    "alexander_quandle",
    "apply_lemma_constraints",
    "find_zero",
    "additive_cell_pairs",
    "propagate_group_axioms",
    "seed_partial",
    "zero_fill",
]
