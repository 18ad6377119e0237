"""Kernel selection: the compiled extension when built, else pure Python.

Set ``THOMPSONF_PURE=1`` to force the fallback.
"""

import os

from . import _kernel_py

if os.environ.get("THOMPSONF_PURE"):
    _impl = _kernel_py
else:
    try:
        from . import _kernel as _impl  # type: ignore[attr-defined]
    except ImportError:
        _impl = _kernel_py

BACKEND = _impl.BACKEND
survivor_profile = _impl.survivor_profile
survivors = _impl.survivors
code_complexity = _impl.code_complexity
phi_carets = _impl.phi_carets
min_position = _impl.min_position

__all__ = [
    "BACKEND",
    "survivor_profile",
    "survivors",
    "code_complexity",
    "phi_carets",
    "min_position",
]
