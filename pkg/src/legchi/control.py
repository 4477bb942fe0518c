"""Evaluation control and the exception hierarchy shared by all modules."""
from __future__ import annotations

from dataclasses import dataclass

#: Tail bounds cannot be certified below roundoff accumulation in binary64.
ABS_TOL_FLOOR = 1e-14


class DomainError(ValueError):
    """An argument lies outside the supported domain of an operation."""


class ConvergenceError(RuntimeError):
    """A series or acceleration failed to meet the requested tolerance."""


class EvaluationFault(RuntimeError):
    """A numerical fault: non-finite integrand value or denominator underflow."""


@dataclass(frozen=True)
class EvalControl:
    """Tolerance and truncation policy for series and quadrature.

    abs_tol   target absolute error; floored at ABS_TOL_FLOOR
    max_terms series truncation cap, and the per-call evaluation budget
              for adaptive quadrature
    """

    abs_tol: float = 1e-12
    max_terms: int = 1_000_000

    def __post_init__(self) -> None:
        if not (self.abs_tol >= ABS_TOL_FLOOR):
            raise DomainError(
                f"abs_tol must be >= {ABS_TOL_FLOOR:g}, got {self.abs_tol!r}"
            )
        if self.max_terms < 1:
            raise DomainError(f"max_terms must be >= 1, got {self.max_terms!r}")


DEFAULT_CONTROL = EvalControl()
