"""Closed-form evaluation of the four integral kernels.

Two kernel families appear in the integral representations:

  squared-argument kernels (variable t, angle pi*t)
      kernel_sin: 2z(1+z^2) sin(pi t) / (1 - 2 z^2 cos(2 pi t) + z^4)
      kernel_cos: 2z(1-z^2) cos(pi t) / (same denominator)

  unit-disk Poisson pair (raw angle t)
      poisson_sin: 2z sin t / (1 - 2z cos t + z^2)     (conjugate kernel)
      poisson_cos: (1 - z^2) / (1 - 2z cos t + z^2)

Denominators use the cancellation-free forms
  (1 - z^2)^2 + 4 z^2 sin^2(pi t)   and   (1 - z)^2 + 4 z sin^2(t/2),
algebraically identical to the cosine forms but stable as |z| -> 1.

Interior evaluation requires |z| < 1 strictly. The exact literals z = 1
(kernel_sin) and z = i (kernel_cos) switch to the boundary limits
csc(pi t) and i sec(pi t); no interpolation between the regimes.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .control import DomainError, EvaluationFault

#: |denominator| below this for interior z is a numerical fault: the true
#: denominator cannot vanish inside the open disk.
DENOM_GUARD = 1e-12

#: |denominator| below this flags the near-singular regime in diagnostics.
NEAR_SINGULAR = 1e-6

#: An evaluation point within this distance of a registered boundary
#: singularity is treated as the boundary literal in diagnostics.
SINGULARITY_SNAP = 1e-12

REGIME_REGULAR = "regular"
REGIME_NEAR_SINGULAR = "near-singular-guarded"
REGIME_LIMIT = "limit-substituted"


@dataclass(frozen=True)
class KernelEval:
    """Kernel value plus the evaluation regime it was produced under."""

    value: complex
    regime: str


def _interior(z) -> complex:
    zc = complex(z)
    if abs(zc) >= 1.0:
        raise DomainError(f"kernel requires |z| < 1; got |z| = {abs(zc):.9g}")
    return zc


def _squared_denominator(zc: complex, t):
    d = (1.0 - zc * zc) ** 2 + 4.0 * zc * zc * np.sin(np.pi * np.asarray(t)) ** 2
    if np.any(np.abs(d) < DENOM_GUARD):
        raise EvaluationFault(
            f"kernel denominator underflow for interior z = {zc!r}"
        )
    return d


def kernel_sin(z, t):
    """Sine-flavoured squared-argument kernel; z = 1 gives csc(pi t)."""
    if complex(z) == 1.0:
        t_arr = np.asarray(t, dtype=np.float64)
        if np.any(t_arr <= 0.0) or np.any(t_arr >= 1.0):
            raise DomainError("boundary limit csc(pi t) requires 0 < t < 1")
        out = 1.0 / np.sin(np.pi * t_arr)
        return out if isinstance(t, np.ndarray) else float(out)
    zc = _interior(z)
    num = 2.0 * zc * (1.0 + zc * zc) * np.sin(np.pi * np.asarray(t))
    out = num / _squared_denominator(zc, t)
    if isinstance(t, np.ndarray):
        return out
    return out.item()


def kernel_cos(z, t):
    """Cosine-flavoured squared-argument kernel; z = i gives i sec(pi t)."""
    if complex(z) == 1j:
        t_arr = np.asarray(t, dtype=np.float64)
        if np.any(np.abs(t_arr - 0.5) < SINGULARITY_SNAP):
            raise DomainError("boundary limit i*sec(pi t) is undefined at t = 1/2")
        out = 1j / np.cos(np.pi * t_arr)
        return out if isinstance(t, np.ndarray) else complex(out)
    zc = _interior(z)
    num = 2.0 * zc * (1.0 - zc * zc) * np.cos(np.pi * np.asarray(t))
    out = num / _squared_denominator(zc, t)
    if isinstance(t, np.ndarray):
        return out
    return out.item()


def _poisson_denominator(zc: complex, t):
    d = (1.0 - zc) ** 2 + 4.0 * zc * np.sin(0.5 * np.asarray(t)) ** 2
    if np.any(np.abs(d) < DENOM_GUARD):
        raise EvaluationFault(
            f"Poisson denominator underflow for interior z = {zc!r}"
        )
    return d


def poisson_sin(z, t):
    """Conjugate Poisson kernel 2z sin t / (1 - 2z cos t + z^2)."""
    zc = _interior(z)
    out = 2.0 * zc * np.sin(np.asarray(t)) / _poisson_denominator(zc, t)
    if isinstance(t, np.ndarray):
        return out
    return out.item()


def poisson_cos(z, t):
    """Poisson kernel (1 - z^2) / (1 - 2z cos t + z^2)."""
    zc = _interior(z)
    shaped = (1.0 - zc * zc) / _poisson_denominator(zc, t)
    out = shaped * np.ones_like(np.asarray(t, dtype=np.float64))
    if isinstance(t, np.ndarray):
        return out
    return out.item()


def _diagnose(z, t, boundary_literal, evaluate) -> KernelEval:
    zc = complex(z)
    if boundary_literal is not None and abs(zc - boundary_literal) < SINGULARITY_SNAP:
        return KernelEval(value=complex(evaluate(boundary_literal, t)), regime=REGIME_LIMIT)
    _interior(zc)
    d = (1.0 - zc * zc) ** 2 + 4.0 * zc * zc * np.sin(np.pi * t) ** 2
    regime = REGIME_NEAR_SINGULAR if abs(d) < NEAR_SINGULAR else REGIME_REGULAR
    return KernelEval(value=complex(evaluate(zc, t)), regime=regime)


def kernel_sin_eval(z, t: float) -> KernelEval:
    """kernel_sin plus the regime it was evaluated under (scalar t only)."""
    return _diagnose(z, t, 1.0 + 0j, kernel_sin)


def kernel_cos_eval(z, t: float) -> KernelEval:
    """kernel_cos plus the regime it was evaluated under (scalar t only)."""
    return _diagnose(z, t, 1j, kernel_cos)
