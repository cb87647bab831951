"""JIT switch.

Kernels are compiled with numba unless ``RAMSEYDEG_NO_NUMBA`` is set to a
truthy value (or numba is not importable), in which case the pure numpy
paths in :mod:`ramseydeg.kernels` are used instead.
"""

import functools
import os

_flag = os.environ.get("RAMSEYDEG_NO_NUMBA", "").strip().lower()

try:
    import numba as nb
except ImportError:  # pragma: no cover - numba is a declared dependency
    nb = None

HAVE_NUMBA = nb is not None
USE_NUMBA = HAVE_NUMBA and _flag not in ("1", "true", "yes", "on")

if HAVE_NUMBA:
    njit = functools.partial(nb.njit, cache=True, nogil=True)
else:  # pragma: no cover
    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda f: f
