"""Backend selection for the hot kernels.

The compiled core (``ncomm._core``, Cython, int64 with overflow detection) is
used when it imports; otherwise, or with ``NCOMM_PURE_PYTHON=1`` in the
environment, the big-integer twins in ``ncomm._core_py`` are used. A compiled
call that overflows is transparently re-run on the Python path, so callers
always get exact results.
"""
from __future__ import annotations

import logging
import os

from ncomm import _core_py

log = logging.getLogger(__name__)

_compiled = None
if not os.environ.get("NCOMM_PURE_PYTHON"):
    try:
        from ncomm import _core as _compiled
    except ImportError:  # extension not built
        _compiled = None

BACKEND = "compiled" if _compiled is not None else "python"


def backends() -> dict:
    """Kernel implementations available in this process, by name."""
    out = {"python": _core_py}
    if _compiled is not None:
        out["compiled"] = _compiled
    return out


def _dispatch(name, *args, backend=None):
    if backend == "python" or _compiled is None:
        return getattr(_core_py, name)(*args)
    if backend not in (None, "compiled"):
        raise ValueError(f"unknown backend {backend!r}")
    try:
        return getattr(_compiled, name)(*args)
    except (OverflowError, MemoryError) as exc:
        if backend == "compiled":
            raise
        log.debug("%s: compiled kernel gave up (%s); using big integers", name, exc)
        return getattr(_core_py, name)(*args)


def standard_int(ops, backend=None):
    """s_N of integer operators given as ``(order, degree, coeff)`` triples."""
    return _dispatch("standard_int", ops, backend=backend)


def mp_sums(p, backend=None):
    """``(count, row_sum, col_sum)`` over the matrix set M_p."""
    return _dispatch("mp_sums", p, backend=backend)


iter_mp = _core_py.iter_mp
