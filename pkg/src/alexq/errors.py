"""Exception types shared across the package."""

from __future__ import annotations

from typing import NamedTuple


class MalformedTableError(ValueError):
    """The input is not a square table with entries in ``1..n``."""


class SizeCapExceeded(ValueError):
    """An exhaustive routine was asked to run beyond its configured size cap."""


class Violation(NamedTuple):
    """First failed axiom found by a scan, with 1-based witness indices."""

    axiom: str
    witness: tuple[int, ...]
    message: str

    def __str__(self) -> str:
        return self.message


class AxiomError(ValueError):
    def __init__(self, violation: Violation):
        super().__init__(violation.message)
        self.violation = violation

    @property
    def axiom(self) -> str:
        return self.violation.axiom

    @property
    def witness(self) -> tuple[int, ...]:
        return self.violation.witness


class QuandleAxiomError(AxiomError):
    pass


class GroupAxiomError(AxiomError):
    pass


class NotAnAutomorphism(ValueError):
    pass
