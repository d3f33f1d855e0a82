"""Kernel backend selection.

The compiled extension is used when it imports; otherwise the pure-Python
module takes over.  Setting FRACWEYL_PURE=1 forces the fallback.
"""

import os

from . import _kernels_py

kernels = _kernels_py

if os.environ.get("FRACWEYL_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _compiled
    except ImportError:  # extension not built
        _compiled = None
    if _compiled is not None:
        kernels = _compiled

BACKEND = kernels.BACKEND


def available_backends():
    """Name -> module for every backend importable in this environment."""
    found = {"python": _kernels_py}
    try:
        from . import _kernels as compiled
        found["cython"] = compiled
    except ImportError:
        pass
    return found
