"""Histogram split-finding and tree-traversal kernels.

At import time this package picks the compiled Cython backend when it is
available and falls back to the numpy reference implementation otherwise.
Set ``SEQFORGE_PURE_PY=1`` to force the fallback (used by the backend
benchmark and the equivalence tests).  Both backends produce bit-identical
results, so the choice never affects outputs, only speed.
"""

import os

from . import _pyref

if os.environ.get("SEQFORGE_PURE_PY", "") not in ("", "0"):
    _impl = _pyref
else:
    try:
        from . import _native as _impl
    except ImportError:
        _impl = _pyref

BACKEND = _impl.BACKEND

hist_best_split_class = _impl.hist_best_split_class
hist_best_split_reg = _impl.hist_best_split_reg
partition_rows = _impl.partition_rows
tree_apply = _impl.tree_apply

__all__ = [
    "BACKEND",
    "hist_best_split_class",
    "hist_best_split_reg",
    "partition_rows",
    "tree_apply",
]
