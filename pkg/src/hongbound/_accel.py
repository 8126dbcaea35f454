"""Kernel acceleration switch.

Hot loops are written once as plain Python over numpy arrays and compiled
with numba when available. Set ``HONGBOUND_DISABLE_NUMBA=1`` to run the
uncompiled path (the vectorised numpy fallbacks are selected the same way).
"""
import os

_FLAG = "HONGBOUND_DISABLE_NUMBA"


def _numba_requested():
    return os.environ.get(_FLAG, "").strip().lower() not in ("1", "true", "yes", "on")


try:
    if not _numba_requested():
        raise ImportError
    import numba as _numba
    USE_NUMBA = True
except ImportError:
    _numba = None
    USE_NUMBA = False

BACKEND = "numba" if USE_NUMBA else "numpy"


def njit(fn):
    """Compile ``fn`` in nopython mode, or return it untouched on the fallback path."""
    if USE_NUMBA:
        return _numba.njit(cache=True, nogil=True)(fn)
    return fn


def python_impl(fn):
    """Return the uncompiled body of a kernel (identity on the fallback path)."""
    return getattr(fn, "py_func", fn)
