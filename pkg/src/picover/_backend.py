"""Kernel backend selection.

The compiled extension is preferred when importable; set
``PICOVER_BACKEND=python`` (or ``c``) to force a choice.  Both backends
implement the same functions with identical results.
"""

from __future__ import annotations

import os

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built; pure Python still works
    _ckernels = None


def _select():
    choice = os.environ.get("PICOVER_BACKEND", "auto").lower()
    if choice in ("py", "python", "pure"):
        return _pykernels
    if choice in ("c", "compiled", "cython"):
        if _ckernels is None:
            raise ImportError(
                "PICOVER_BACKEND requests the compiled backend, "
                "but picover._ckernels is not built"
            )
        return _ckernels
    return _ckernels if _ckernels is not None else _pykernels


kernels = _select()


def active_backend() -> str:
    """Name of the kernel backend in use ('c' or 'python')."""
    return kernels.BACKEND_NAME


def available_backends() -> list[str]:
    names = [_pykernels.BACKEND_NAME]
    if _ckernels is not None:
        names.append(_ckernels.BACKEND_NAME)
    return names
