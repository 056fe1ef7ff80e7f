"""Kernel selection: the compiled extension when importable, else pure Python.

Set ``SPECHTB_PURE_PYTHON=1`` to force the fallback.
"""
import os

from . import _kernels_py

BACKEND = "python"
_compiled = None
if not os.environ.get("SPECHTB_PURE_PYTHON"):
    try:
        from . import _kernels as _compiled
        BACKEND = "cython"
    except ImportError:
        _compiled = None

# the compiled kernels use 64-bit masks
_MAX_COMPILED = 62


def _pick(name):
    fast = getattr(_compiled, name, None) if _compiled is not None else None
    slow = getattr(_kernels_py, name)
    if fast is None:
        return slow

    def dispatch(mask, n):
        return fast(mask, n) if n <= _MAX_COMPILED else slow(mask, n)

    dispatch.__name__ = name
    dispatch.__doc__ = slow.__doc__
    return dispatch


is_dominant = _pick("is_dominant")
iota = _pick("iota")
suitable = _pick("suitable")
count_suitable = _pick("count_suitable")
