"""Backend selection for the hot membership kernel.

The compiled extension is used when it imports; setting ``ASG_PURE_PYTHON=1``
forces the fallback.  Both backends answer identically; the compiled one
may decline oversized inputs, which are then routed to the fallback.
"""
import os

from . import _kernels_py

_compiled = None
if os.environ.get("ASG_PURE_PYTHON", "") in ("", "0"):
    try:
        from . import _kernels as _compiled
    except ImportError:  # extension not built
        _compiled = None

BACKEND = _compiled.BACKEND if _compiled is not None else _kernels_py.BACKEND


def is_combination(gens, target, cuts=()):
    if _compiled is not None:
        res = _compiled.is_combination(gens, target, cuts)
        if res is not None:
            return res
    return _kernels_py.is_combination(gens, target, cuts)
