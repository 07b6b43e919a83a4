"""Numba acceleration shim.

Hot numeric kernels are written once, in a numba-compatible subset of
numpy/python, and decorated with :func:`jit`.  By default the decorator
compiles with ``numba.njit(cache=True)``.  Setting the environment variable
``TWOCENTER_DISABLE_NUMBA=1`` (or running without numba installed) turns the
decorator into the identity, leaving the same code to run as the pure
python/numpy fallback path.  Results are identical in both modes; only the
wall time differs (see ``benchmarks/kernel_bench.py``).
"""

from __future__ import annotations

import os

DISABLE_FLAG = "TWOCENTER_DISABLE_NUMBA"

_disabled = os.environ.get(DISABLE_FLAG, "").strip() not in ("", "0")

try:
    if _disabled:
        raise ImportError
    from numba import njit as _njit

    HAS_NUMBA = True
except ImportError:
    HAS_NUMBA = False
    _njit = None


def jit(*args, **kwargs):
    """``numba.njit`` when acceleration is on, identity decorator otherwise.

    Supports both ``@jit`` and ``@jit(...)`` forms.
    """
    if args and callable(args[0]) and not kwargs:
        func = args[0]
        if HAS_NUMBA:
            return _njit(cache=True)(func)
        return func

    def wrap(func):
        if HAS_NUMBA:
            opts = dict(kwargs)
            opts.setdefault("cache", True)
            return _njit(*args, **opts)(func)
        return func

    return wrap


def accel_mode() -> str:
    """Human-readable name of the active execution mode."""
    return "numba" if HAS_NUMBA else "python"
