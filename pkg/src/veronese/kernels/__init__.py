"""Hot numeric kernels with a numba backend and a pure-numpy fallback.

The backend is chosen once at import time.  Set ``VERONESE_DISABLE_NUMBA=1``
to force the numpy path (numba missing also selects it).
"""

import os

from . import _numpy

# The bundled TBB is often too old for numba and only produces a warning.
os.environ.setdefault("NUMBA_THREADING_LAYER", "workqueue")

_DISABLED = os.environ.get("VERONESE_DISABLE_NUMBA", "").strip().lower() in {"1", "true", "yes", "on"}

if _DISABLED:
    _impl = _numpy
    BACKEND = "numpy"
else:
    try:
        from . import _numba as _impl
        BACKEND = "numba"
    except ImportError:  # pragma: no cover - numba is an optional speedup
        _impl = _numpy
        BACKEND = "numpy"

subset_zeta = _impl.subset_zeta
minimal_members = _impl.minimal_members
encode_words = _impl.encode_words
split_weight_tally = _impl.split_weight_tally
conic_zero_stats = _impl.conic_zero_stats
count_triangles = _impl.count_triangles
count_quadrilaterals = _impl.count_quadrilaterals
aggregate_betti = _impl.aggregate_betti


def set_threads(threads):
    """Cap worker threads for parallel kernels; a no-op on the numpy path."""
    if BACKEND == "numba":
        import numba
        numba.set_num_threads(max(1, min(int(threads), numba.config.NUMBA_NUM_THREADS)))


__all__ = [
    "BACKEND",
    "aggregate_betti",
    "conic_zero_stats",
    "count_quadrilaterals",
    "count_triangles",
    "encode_words",
    "minimal_members",
    "set_threads",
    "split_weight_tally",
    "subset_zeta",
]
