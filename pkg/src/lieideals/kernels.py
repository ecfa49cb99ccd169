"""Kernel backend selection.

The row-reduction inner loop dominates every enumeration and theorem
suite, so it has a compiled Cython implementation with a pure-numpy
fallback.  The backend is chosen once at import time; set
``LIEIDEALS_KERNEL=python`` (or ``cython``) to force one explicitly.
``benchmarks/bench_kernels.py`` compares the two.
"""

from __future__ import annotations

import os

_requested = os.environ.get("LIEIDEALS_KERNEL", "").strip().lower()

if _requested in ("py", "python"):
    from . import _rowreduce_py as _impl
elif _requested in ("c", "cy", "cython"):
    from . import _rowreduce_c as _impl  # type: ignore[no-redef]
else:
    try:
        from . import _rowreduce_c as _impl  # type: ignore[no-redef]
    except ImportError:
        from . import _rowreduce_py as _impl  # type: ignore[no-redef]

BACKEND: str = _impl.BACKEND
rref = _impl.rref
reduce_rows = _impl.reduce_rows
