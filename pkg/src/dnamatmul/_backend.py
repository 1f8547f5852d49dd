"""Pick the growth kernels: compiled extension if importable, else pure Python.

Setting ``DNAMATMUL_PURE=1`` forces the pure-Python kernels.
"""

import os
from types import ModuleType

from . import _kernels_py

try:
    from . import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None

AVAILABLE: dict[str, ModuleType] = {"python": _kernels_py}
if _compiled is not None:
    AVAILABLE["cython"] = _compiled

if os.environ.get("DNAMATMUL_PURE") or _compiled is None:
    kernels = _kernels_py
else:
    kernels = _compiled

BACKEND = kernels.NAME


def get_kernels(name: str | None = None) -> ModuleType:
    if name is None:
        return kernels
    try:
        return AVAILABLE[name]
    except KeyError:
        raise ValueError(
            f"backend {name!r} unavailable; choose from {sorted(AVAILABLE)}"
        ) from None
