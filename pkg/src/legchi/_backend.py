"""Backend selection for the hot summation kernels.

Prefers the compiled Cython module when it is built; otherwise falls back to
the NumPy implementation. LEGCHI_BACKEND=compiled|python forces the choice
(forcing "compiled" raises if the extension is missing rather than silently
degrading).
"""
from __future__ import annotations

import os

_requested = os.environ.get("LEGCHI_BACKEND")

if _requested not in (None, "", "compiled", "python"):
    raise RuntimeError(
        f"LEGCHI_BACKEND must be 'compiled' or 'python', got {_requested!r}"
    )

if _requested == "python":
    from . import _core_py as _impl

    BACKEND_NAME = "python"
else:
    try:
        from . import _core as _impl  # type: ignore[attr-defined]

        BACKEND_NAME = "compiled"
    except ImportError:
        if _requested == "compiled":
            raise RuntimeError(
                "LEGCHI_BACKEND=compiled but legchi._core is not built; "
                "run 'pip install -e .' or 'python setup.py build_ext --inplace'"
            ) from None
        from . import _core_py as _impl

        BACKEND_NAME = "python"

sin_weighted_sum = _impl.sin_weighted_sum
cos_weighted_sum = _impl.cos_weighted_sum
