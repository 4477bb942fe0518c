"""NumPy implementation of the hot summation kernels.

Fallback for legchi._core (Cython). Both backends expose the same two
functions; legchi._backend picks one at import time. Work is blocked so the
intermediate (terms x nodes) matrices stay small.
"""
from __future__ import annotations

import numpy as np

_BLOCK = 8192


def _weighted_trig_sum(coeffs: np.ndarray, x: np.ndarray, trig) -> np.ndarray:
    coeffs = np.ascontiguousarray(coeffs)
    x = np.ascontiguousarray(x, dtype=np.float64)
    out = np.zeros(x.shape, dtype=coeffs.dtype)
    for start in range(0, coeffs.shape[0], _BLOCK):
        stop = min(start + _BLOCK, coeffs.shape[0])
        odd = 2.0 * np.arange(start, stop, dtype=np.float64) + 1.0
        out += coeffs[start:stop] @ trig(odd[:, None] * x[None, :])
    return out


def sin_weighted_sum(coeffs: np.ndarray, x: np.ndarray) -> np.ndarray:
    """out[j] = sum_k coeffs[k] * sin((2k+1) * x[j])."""
    return _weighted_trig_sum(coeffs, x, np.sin)


def cos_weighted_sum(coeffs: np.ndarray, x: np.ndarray) -> np.ndarray:
    """out[j] = sum_k coeffs[k] * cos((2k+1) * x[j])."""
    return _weighted_trig_sum(coeffs, x, np.cos)
