"""Fast certificate that a quandle cannot be Alexander.

The Alexanderization of ``Q`` is the free module over ``Z[t, t⁻¹]`` on the
elements ``x_1..x_n`` modulo ``t x_i + (1 - t) x_j = x_{i▷j}``. If ``Q`` is
Alexander, the map ``i -> x_i`` into it is injective. Saturating four sound
rules finds identifications ``x_i = x_j`` (partition ``e0``) and
``(1 - t) x_i = (1 - t) x_j`` (partition ``e1``):

R1  ``i ▷ j = i``             gives ``i ~ j`` in e1
R2  ``a ~ b`` in e1           gives ``k▷a ~ k▷b`` in e0 for every k
R3  ``i ~ j`` in e0           gives ``i ~ j`` in e1, ``i▷k ~ j▷k`` and ``k▷i ~ k▷j`` in e0
R4  ``i ▷ j = j``, ``i != j``  gives ``i ~ j`` in e0 (t is invertible)

Any nontrivial e0 class proves ``Q`` is not Alexander. The converse does not
hold: an ``inconclusive`` verdict says nothing, and the full search in
:mod:`alexq.search` is the deciding procedure.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .quandle import QuandleMatrix, validate_quandle

NOT_INJECTIVE = "not-injective"
INCONCLUSIVE = "inconclusive"


class UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if rb < ra:
            ra, rb = rb, ra
        self.parent[rb] = ra
        return True

    def same(self, a: int, b: int) -> bool:
        return self.find(a) == self.find(b)

    def classes(self) -> tuple[tuple[int, ...], ...]:
        """Classes as sorted 1-based tuples, ordered by smallest member."""
        groups: dict[int, list[int]] = {}
        for x in range(len(self.parent)):
            groups.setdefault(self.find(x), []).append(x + 1)
        return tuple(sorted(tuple(g) for g in groups.values()))


@dataclass(frozen=True)
class Step:
    """One merge. ``premise`` is rule specific (all 1-based):

    R1, R4: the cell ``(i, j)``; R2: ``(a, b, k)`` with ``a ~ b`` in e1;
    R3: ``(i, j)`` for the e1 merge, ``(i, j, k, side)`` for e0 merges, where
    side 0 means ``i▷k ~ j▷k`` and side 1 means ``k▷i ~ k▷j``.
    """

    rule: str
    premise: tuple[int, ...]
    partition: str
    pair: tuple[int, int]


@dataclass(frozen=True)
class ObstructionTrace:
    e0: tuple[tuple[int, ...], ...]
    e1: tuple[tuple[int, ...], ...]
    steps: tuple[Step, ...]

    def __len__(self) -> int:
        return len(self.steps)


@dataclass(frozen=True)
class ObstructionVerdict:
    status: str
    trace: ObstructionTrace

    @property
    def not_injective(self) -> bool:
        return self.status == NOT_INJECTIVE


class _Saturation:
    def __init__(self, q: QuandleMatrix):
        self.z = q.z.tolist()
        n = len(self.z)
        self.n = n
        self.e0 = UnionFind(n)
        self.e1 = UnionFind(n)
        self.steps: list[Step] = []
        self.work: deque[tuple[str, int, int]] = deque()

    def merge(self, partition: str, a: int, b: int, rule: str, premise: tuple[int, ...]) -> None:
        uf = self.e0 if partition == "e0" else self.e1
        if uf.union(a, b):
            self.steps.append(Step(rule, premise, partition, (a + 1, b + 1)))
            self.work.append((partition, a, b))

    def run(self) -> None:
        z, n = self.z, self.n
        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                if z[i][j] == i:
                    self.merge("e1", i, j, "R1", (i + 1, j + 1))
                if z[i][j] == j:
                    self.merge("e0", i, j, "R4", (i + 1, j + 1))
        # merging only the new pair suffices: images of a class already share a class
        while self.work:
            partition, a, b = self.work.popleft()
            if partition == "e1":
                for k in range(n):
                    self.merge("e0", z[k][a], z[k][b], "R2", (a + 1, b + 1, k + 1))
            else:
                self.merge("e1", a, b, "R3", (a + 1, b + 1))
                for k in range(n):
                    self.merge("e0", z[a][k], z[b][k], "R3", (a + 1, b + 1, k + 1, 0))
                    self.merge("e0", z[k][a], z[k][b], "R3", (a + 1, b + 1, k + 1, 1))

    def trace(self) -> ObstructionTrace:
        return ObstructionTrace(self.e0.classes(), self.e1.classes(), tuple(self.steps))


def obstruction_check(q) -> ObstructionVerdict:
    q = validate_quandle(q)
    sat = _Saturation(q)
    sat.run()
    trace = sat.trace()
    split = any(len(cls) > 1 for cls in trace.e0)
    return ObstructionVerdict(NOT_INJECTIVE if split else INCONCLUSIVE, trace)


class InvalidStep(ValueError):
    pass


def replay_trace(q, trace: ObstructionTrace) -> tuple[tuple, tuple]:
    """Re-derive the partitions from scratch, checking every step's premise.

    Returns ``(e0, e1)`` class tuples; raises InvalidStep on the first step
    whose premise does not hold or whose conclusion does not follow.
    """
    q = validate_quandle(q)
    z = q.z.tolist()
    n = len(z)
    e0, e1 = UnionFind(n), UnionFind(n)
    for idx, step in enumerate(trace.steps):
        x, y = (v - 1 for v in step.pair)
        p = [v - 1 for v in step.premise]
        if step.rule == "R1":
            i, j = p
            ok = step.partition == "e1" and z[i][j] == i and {x, y} == {i, j}
        elif step.rule == "R4":
            i, j = p
            ok = step.partition == "e0" and i != j and z[i][j] == j and {x, y} == {i, j}
        elif step.rule == "R2":
            a, b, k = p
            ok = step.partition == "e0" and e1.same(a, b) and {x, y} == {z[k][a], z[k][b]}
        elif step.rule == "R3" and len(p) == 2:
            i, j = p
            ok = step.partition == "e1" and e0.same(i, j) and {x, y} == {i, j}
        elif step.rule == "R3" and len(p) == 4:
            i, j, k = p[:3]
            side = step.premise[3]
            image = {z[i][k], z[j][k]} if side == 0 else {z[k][i], z[k][j]}
            ok = step.partition == "e0" and e0.same(i, j) and {x, y} == image
        else:
            ok = False
        if not ok:
            raise InvalidStep(f"step {idx + 1} ({step.rule}) does not follow: {step}")
        (e0 if step.partition == "e0" else e1).union(x, y)
    return e0.classes(), e1.classes()


def _x(i: int) -> str:
    return f"x{i}"


def explain_trace(trace: ObstructionTrace) -> str:
    """One line per step, each an equation chain ending in the merged pair."""
    if not trace.steps:
        return "no forced identifications"
    lines = []
    for num, step in enumerate(trace.steps, start=1):
        u, v = step.pair
        p = step.premise
        if step.rule == "R1":
            i, j = p
            body = (
                f"{i}▷{j} = {i}: t{_x(i)} + (1-t){_x(j)} = {_x(i)}"
                f"  =>  (1-t){_x(u)} = (1-t){_x(v)}"
            )
        elif step.rule == "R4":
            i, j = p
            body = f"{i}▷{j} = {j}: t{_x(i)} + (1-t){_x(j)} = {_x(j)}  =>  t{_x(i)} = t{_x(j)}  =>  {_x(u)} = {_x(v)}"
        elif step.rule == "R2":
            a, b, k = p
            body = (
                f"(1-t){_x(a)} = (1-t){_x(b)}  =>  "
                f"{_x(u)} = t{_x(k)} + (1-t){_x(a)} = t{_x(k)} + (1-t){_x(b)} = {_x(v)}"
            )
        elif len(p) == 2:
            i, j = p
            body = f"{_x(i)} = {_x(j)}  =>  (1-t){_x(u)} = (1-t){_x(v)}"
        else:
            i, j, k, side = p
            if side == 0:
                body = (
                    f"{_x(i)} = {_x(j)}  =>  "
                    f"{_x(u)} = t{_x(i)} + (1-t){_x(k)} = t{_x(j)} + (1-t){_x(k)} = {_x(v)}"
                )
            else:
                body = (
                    f"{_x(i)} = {_x(j)}  =>  "
                    f"{_x(u)} = t{_x(k)} + (1-t){_x(i)} = t{_x(k)} + (1-t){_x(j)} = {_x(v)}"
                )
        lines.append(f"{num:>3}. [{step.rule}] {body}")
    return "\n".join(lines)


__all__ = [
    "INCONCLUSIVE",
    "NOT_INJECTIVE",
    "InvalidStep",
    "ObstructionTrace",
    "ObstructionVerdict",
    "Step",
    "UnionFind",
    "explain_trace",
    "obstruction_check",
    "replay_trace",
]
