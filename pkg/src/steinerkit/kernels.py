"""Kernel backend selection.

The compiled extension (``_kernels``) is preferred when importable; the
pure-Python module (``_kernels_py``) is the fallback.  Both implement the
same four functions with identical semantics and tie-breaking, so selection
never changes results, only speed.

Set ``STEINER_KIT_BACKEND=python`` or ``=c`` before importing the package
to force a backend; forcing ``c`` when the extension is missing is an error.
"""

import os

from . import _kernels_py
from .errors import SteinerKitError

_choice = os.environ.get("STEINER_KIT_BACKEND", "").strip().lower()
if _choice not in ("", "c", "python"):
    raise SteinerKitError(f"STEINER_KIT_BACKEND must be 'c' or 'python', got {_choice!r}")

_impl = None
if _choice != "python":
    try:
        from . import _kernels as _compiled

        _impl = _compiled
    except ImportError:
        if _choice == "c":
            raise SteinerKitError(
                "STEINER_KIT_BACKEND=c but the compiled extension is not built"
            ) from None
if _impl is None:
    _impl = _kernels_py

BACKEND: str = _impl.BACKEND

pack = _impl.pack
steiner_value = _impl.steiner_value
greedy_extend = _impl.greedy_extend
brute_ecc = _impl.brute_ecc


def available_backends() -> tuple[str, ...]:
    """Names of importable backends, for benchmarks and diagnostics."""
    names = ["python"]
    try:
        from . import _kernels  # noqa: F401

        names.append("c")
    except ImportError:
        pass
    return tuple(names)
