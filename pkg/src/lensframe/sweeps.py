"""Backend dispatch for the unit-group sweep kernels.

The compiled extension is preferred when present; set ``LENSFRAME_PURE=1``
to force the pure-Python implementation.  Tables are cached per modulus
because the classification and verification layers reuse them heavily; the
kernels return tuples, so cached entries cannot be mutated by callers.
"""

from __future__ import annotations

import os
from functools import lru_cache

if os.environ.get("LENSFRAME_PURE"):
    from . import _sweeps_py as _impl

    BACKEND = "python"
else:
    try:
        from . import _sweeps_cy as _impl  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        from . import _sweeps_py as _impl  # type: ignore[no-redef]

        BACKEND = "python"

invariant_table = lru_cache(maxsize=None)(_impl.invariant_table)
residue_table = lru_cache(maxsize=None)(_impl.residue_table)
lift_mismatch = _impl.lift_mismatch
