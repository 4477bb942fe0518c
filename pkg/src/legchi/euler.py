"""Exact Euler polynomials and the closed forms they give for the odd
trigonometric Dirichlet series at integer exponents.

Coefficients are exact rationals: the polynomials feed integrands that get
multiplied by factorially large prefactors, so the polynomial layer must
never be the suspect when a residual is debugged.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .control import DomainError

#: Degree cap. Verification needs degree <= 12; the cap just keeps the
#: exact integer growth trivial.
MAX_DEGREE = 64


@lru_cache(maxsize=None)
def euler_number(n: int) -> int:
    """n-th Euler (secant) number; zero for odd n.

    Uses the recurrence sum_{j<=m} C(2m, 2j) E_{2j} = 0 for m >= 1.
    """
    if n < 0:
        raise DomainError("Euler number index must be nonnegative")
    if n % 2 == 1:
        return 0
    m = n // 2
    acc = [1]  # E_0
    for i in range(1, m + 1):
        acc.append(-sum(math.comb(2 * i, 2 * j) * acc[j] for j in range(i)))
    return acc[m]


@dataclass
class EulerPolynomial:
    """A single Euler polynomial with exact rational coefficients.

    coeffs holds ascending powers of x; the polynomial is monic.
    Instances are immutable by convention; share freely across threads.
    """

    degree: int
    coeffs: tuple[Fraction, ...]
    _float_coeffs: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        self._float_coeffs = np.array([float(c) for c in self.coeffs])

    def __call__(self, x):
        """Horner evaluation in binary64; x may be a scalar or ndarray."""
        c = self._float_coeffs
        acc = c[-1] * (np.ones_like(x) if isinstance(x, np.ndarray) else 1.0)
        for a in c[-2::-1]:
            acc = acc * x + a
        return acc

    def eval_exact(self, x: Fraction | int) -> Fraction:
        """Horner evaluation in exact rational arithmetic."""
        x = Fraction(x)
        acc = Fraction(0)
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc


@lru_cache(maxsize=None)
def euler_polynomial(n: int) -> EulerPolynomial:
    """Euler polynomial of degree n with exact coefficients.

    Anchored at the midpoint values E_k(1/2) = E_k / 2^k and shifted:
        E_n(x) = sum_k C(n,k) (E_k / 2^k) (x - 1/2)^(n-k).
    """
    if n < 0:
        raise DomainError("degree must be nonnegative")
    if n > MAX_DEGREE:
        raise DomainError(f"degree cap is {MAX_DEGREE}, got {n}")
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(n + 1):
        centre = Fraction(euler_number(k), 2 ** k) * math.comb(n, k)
        # expand centre * (x - 1/2)^(n-k) into ascending powers of x
        m = n - k
        for j in range(m + 1):
            coeffs[j] += centre * math.comb(m, j) * Fraction(-1, 2) ** (m - j)
    return EulerPolynomial(degree=n, coeffs=tuple(coeffs))


def closed_form_S(n: int, x):
    """Value of sum_k sin((2k+1) pi x)/(2k+1)^(2n+1) via the degree-2n
    Euler polynomial: (-1)^n pi^(2n+1) / (4 (2n)!) * E_2n(x), x in [0, 1].

    n = 0 is valid only on the open interval.
    """
    _check_unit_interval(x)
    if n < 0:
        raise DomainError("n must be nonnegative")
    if n == 0 and np.any((np.asarray(x) <= 0.0) | (np.asarray(x) >= 1.0)):
        raise DomainError("n = 0 closed form requires 0 < x < 1")
    p = euler_polynomial(2 * n)
    return (-1) ** n * math.pi ** (2 * n + 1) / (4 * math.factorial(2 * n)) * p(x)


def closed_form_C(n: int, x):
    """Value of sum_k cos((2k+1) pi x)/(2k+1)^(2n) via the degree-(2n-1)
    Euler polynomial: (-1)^n pi^(2n) / (4 (2n-1)!) * E_(2n-1)(x), x in [0, 1].
    """
    _check_unit_interval(x)
    if n < 1:
        raise DomainError("n must be >= 1")
    p = euler_polynomial(2 * n - 1)
    return (-1) ** n * math.pi ** (2 * n) / (4 * math.factorial(2 * n - 1)) * p(x)


def _check_unit_interval(x) -> None:
    arr = np.asarray(x, dtype=float)
    if np.any(arr < -1e-15) or np.any(arr > 1 + 1e-15):
        raise DomainError("x must lie in [0, 1]")
