"""Kernel backend selection.

The compiled Cython extension is preferred when importable; otherwise the
NumPy fallback is used.  CLIFFALG_BACKEND=python|compiled forces a choice
(forcing "compiled" raises if the extension is missing).
"""

import os

_choice = os.environ.get("CLIFFALG_BACKEND", "auto").strip().lower()

if _choice in ("python", "pure", "py"):
    from . import _kernels_py as _impl

    BACKEND = "python"
elif _choice in ("auto", "", "compiled", "c"):
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        if _choice in ("compiled", "c"):
            raise
        from . import _kernels_py as _impl

        BACKEND = "python"
else:
    raise RuntimeError(f"unknown CLIFFALG_BACKEND value: {_choice!r}")

geometric_product = _impl.geometric_product
exterior_product = _impl.exterior_product


def get_kernels(name: str):
    """Return a kernel module by name ("compiled" or "python"), for benchmarks/tests."""
    if name == "python":
        from . import _kernels_py

        return _kernels_py
    if name == "compiled":
        from . import _kernels  # type: ignore[attr-defined]

        return _kernels
    raise ValueError(f"unknown backend name: {name!r}")
