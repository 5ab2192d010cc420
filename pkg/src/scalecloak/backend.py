"""Selection of the numeric-kernel backend.

The hot inner loops (per-row quadratic solves, median filtering, separable
resampling, scatter accumulation) exist twice: once as numba ``@njit``
kernels and once as pure-numpy fallbacks.  The env var ``SCALECLOAK_BACKEND``
picks the path:

* ``auto`` (default): numba when it imports cleanly, numpy otherwise.
* ``numba``: require numba, raise if missing.
* ``numpy``: force the fallbacks even when numba is installed.

``benchmarks/bench_backends.py`` times the two paths against each other.
"""

import os

_REQUESTED = os.environ.get("SCALECLOAK_BACKEND", "auto").strip().lower()
if _REQUESTED not in ("auto", "numba", "numpy"):
    raise ValueError(
        f"SCALECLOAK_BACKEND must be 'auto', 'numba' or 'numpy', got {_REQUESTED!r}"
    )

if _REQUESTED == "numpy":
    HAS_NUMBA = False
else:
    try:
        import numba  # noqa: F401

        HAS_NUMBA = True
    except ImportError:
        HAS_NUMBA = False
        if _REQUESTED == "numba":
            raise ImportError(
                "SCALECLOAK_BACKEND=numba but numba is not importable"
            ) from None

USE_NUMBA = HAS_NUMBA
ACTIVE_BACKEND = "numba" if USE_NUMBA else "numpy"
