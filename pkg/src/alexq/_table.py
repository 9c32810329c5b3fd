from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .errors import MalformedTableError


class Verdict(NamedTuple):
    """Result of a universally quantified check.

    Truthy iff the property holds. ``witness`` holds the first failing
    1-based index tuple in row-major scan order, or ``None``.
    """

    holds: bool
    witness: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.holds


def as_zero_based(table) -> np.ndarray:
    """Parse a 1-based square table into a 0-based int array.

    Raises MalformedTableError on ragged, non-square, non-integer or
    out-of-range input.
    """
    if isinstance(table, Table):
        return table.z
    try:
        arr = np.asarray(table)
    except ValueError as exc:  # ragged nested lists
        raise MalformedTableError(f"table is not rectangular: {exc}") from None
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
        raise MalformedTableError(f"table must be a non-empty square matrix, got shape {arr.shape}")
    if arr.dtype.kind not in "iu":
        if arr.dtype.kind == "f" and np.all(np.mod(arr, 1) == 0):
            arr = arr.astype(np.int64)
        else:
            raise MalformedTableError("table entries must be integers")
    n = arr.shape[0]
    bad = np.argwhere((arr < 1) | (arr > n))
    if len(bad):
        i, j = bad[0]
        raise MalformedTableError(
            f"entry ({i + 1},{j + 1}) = {arr[i, j]} is outside 1..{n}"
        )
    return arr.astype(np.int64) - 1


class Table:
    """Immutable n x n operation table over the labels ``1..n``.

    Stored 0-based in ``z``; ``table`` and ``tolist`` speak 1-based labels.
    """

    __slots__ = ("_z",)

    def __init__(self, table):
        self._z = _freeze(as_zero_based(table))

    @classmethod
    def _wrap(cls, z: np.ndarray):
        obj = cls.__new__(cls)
        obj._z = _freeze(np.asarray(z, dtype=np.int64))
        return obj

    @property
    def z(self) -> np.ndarray:
        return self._z

    @property
    def n(self) -> int:
        return self._z.shape[0]

    @property
    def table(self) -> np.ndarray:
        return self._z + 1

    def tolist(self) -> list[list[int]]:
        return (self._z + 1).tolist()

    def __call__(self, i: int, j: int) -> int:
        return int(self._z[i - 1, j - 1]) + 1

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other) -> bool:
        if not isinstance(other, Table):
            return NotImplemented
        return self._z.shape == other._z.shape and bool(np.array_equal(self._z, other._z))

    def __hash__(self) -> int:
        return hash((self.n, self._z.tobytes()))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.tolist()})"

    def __str__(self) -> str:
        width = len(str(self.n))
        return "\n".join(" ".join(f"{v:>{width}}" for v in row) for row in self.tolist())


def _freeze(arr: np.ndarray) -> np.ndarray:
    arr = np.array(arr, dtype=np.int64, copy=True)
    arr.setflags(write=False)
    return arr


def as_permutation(vector, n: int | None = None) -> np.ndarray:
    """0-based array for a 1-based permutation vector; raises ValueError."""
    arr = np.asarray(vector, dtype=np.int64).ravel()
    m = len(arr)
    if n is not None and m != n:
        raise ValueError(f"vector has length {m}, expected {n}")
    if sorted(arr.tolist()) != list(range(1, m + 1)):
        raise ValueError(f"{arr.tolist()} is not a permutation of 1..{m}")
    return arr - 1
