"""Backend selection for the search kernels.

The compiled extension `cpgraphs._ckernels` is used when it was built and
the graph fits in 64-bit masks; otherwise the pure-Python `_pykernels`
module serves. Both backends are drop-in twins returning identical results.

Set CPGRAPHS_KERNELS=python to force the pure backend, or =c to insist on
the compiled one (ImportError if it is missing). `force_backend` does the
same at runtime; the differential tests and the benchmark use it.
"""

from __future__ import annotations

import os

from . import _pykernels
from ._pykernels import PARITY_ANY, PARITY_EVEN, PARITY_ODD

_requested = os.environ.get("CPGRAPHS_KERNELS", "auto").strip().lower() or "auto"

_ckernels = None
if _requested in ("auto", "c"):
    try:
        from . import _ckernels  # type: ignore[attr-defined]
    except ImportError:
        if _requested == "c":
            raise ImportError(
                "CPGRAPHS_KERNELS=c but the compiled kernels are not built"
            )
        _ckernels = None
elif _requested != "python":
    raise ValueError(f"CPGRAPHS_KERNELS must be auto, c or python, not {_requested!r}")

BACKEND = "c" if _ckernels is not None else "python"

_forced = None

# Compiled weights are int64; anything bigger falls back to pure Python.
_WEIGHT_LIMIT = 1 << 56


def available_backends() -> tuple[str, ...]:
    return ("python", "c") if _ckernels is not None else ("python",)


def force_backend(name) -> None:
    """Pin kernel dispatch to 'python' or 'c'; None restores automatic."""
    global _forced
    if name not in (None, "python", "c"):
        raise ValueError(f"unknown backend {name!r}")
    if name == "c" and _ckernels is None:
        raise ValueError("compiled kernels are not built")
    _forced = name


def _pick(n, weights=None):
    if _forced == "python":
        return _pykernels
    if _forced == "c":
        if n > 64:
            raise ValueError("compiled kernels support at most 64 vertices")
        return _ckernels
    if _ckernels is None or n > 64:
        return _pykernels
    if weights is not None and any(
        w >= _WEIGHT_LIMIT or w <= -_WEIGHT_LIMIT for w in weights
    ):
        return _pykernels
    return _ckernels


def find_hole(masks, min_len=4, parity=PARITY_ANY, start_u=-1, start_v=-1):
    return _pick(len(masks)).find_hole(masks, min_len, parity, start_u, start_v)


def find_expanded_antihole_at(masks, u, v):
    return _pick(len(masks)).find_expanded_antihole_at(masks, u, v)


def max_weight_stable(masks, weights, allowed=-1):
    return _pick(len(masks), weights).max_weight_stable(masks, weights, allowed)
