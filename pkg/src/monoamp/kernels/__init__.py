"""Backend dispatch for the hot kernels.

Two interchangeable implementations:

* ``numba_backend`` -- ``@njit`` loops, the default whenever numba imports.
* ``numpy_backend`` -- vectorized numpy (matching via scipy.sparse.csgraph).

Set ``MONOAMP_BACKEND=numpy`` or ``MONOAMP_BACKEND=numba`` to force one.
The deterministic kernels (edge scan, pair enumeration) return identical
results on both backends; matchings may differ edge-by-edge, but sizes and
the Koenig certificate are contractual and always validated downstream.
"""

import os
import warnings

_VALID = ("numba", "numpy")


def _pick_backend() -> str:
    requested = os.environ.get("MONOAMP_BACKEND", "").strip().lower()
    if requested and requested not in _VALID:
        raise RuntimeError(
            f"MONOAMP_BACKEND must be one of {_VALID}, got {requested!r}"
        )
    if requested == "numpy":
        return "numpy"
    try:
        import numba  # noqa: F401
    except ImportError:
        if requested == "numba":
            raise RuntimeError("MONOAMP_BACKEND=numba, but numba is not importable")
        warnings.warn("numba unavailable, falling back to numpy kernels")
        return "numpy"
    return "numba"


BACKEND = _pick_backend()

if BACKEND == "numba":
    from . import numba_backend as _impl
else:
    from . import numpy_backend as _impl

first_violated_edge = _impl.first_violated_edge
violating_pairs = _impl.violating_pairs
maximum_matching = _impl.maximum_matching
koenig_cover = _impl.koenig_cover

__all__ = [
    "BACKEND",
    "first_violated_edge",
    "violating_pairs",
    "maximum_matching",
    "koenig_cover",
]
