"""Hot-kernel dispatch for flow-surface jet evaluation.

The per-point jet of a flow surface is the inner loop of every grid scan,
so it exists twice: a compiled extension (``powergeom._speedups``, built
with Cython) and the pure-Python composition below. The compiled kernel
mirrors the Python arithmetic expression for expression, in the same
order and compiled without FP contraction, so both produce bit-identical
slots; which one runs is decided once at import.

Set ``POWERGEOM_BACKEND=python`` or ``=compiled`` to force a side (the
default ``auto`` prefers the compiled kernel when present), and
``POWERGEOM_THREADS`` to cap scan parallelism.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import jets
from .jets import Jet3

KIND_REAL = 0
KIND_IMAGINARY = 1
KIND_COMPLEX = 2

_ONE = jets.jet_const(1.0)


def _unit_slots_py(code: int, a1: float, a2: float) -> Jet3:
    """Unit-scale (k=1) jet of the selected flow surface at (a1, a2)."""
    t1 = jets.jet_tan(jets.jet_seed(1, a1))
    t2 = jets.jet_tan(jets.jet_seed(2, a2))
    u = jets.jet_linear(t1, t2, 1.0, -1.0)
    den = jets.jet_linear(_ONE, jets.jet_mul(u, u), 1.0, 1.0)
    inv = jets.jet_reciprocal(den)
    if code == KIND_REAL:
        return inv
    if code == KIND_IMAGINARY:
        return jets.jet_mul(u, inv)
    if code == KIND_COMPLEX:
        return jets.jet_mul(jets.jet_linear(_ONE, u, 1.0, 1.0), inv)
    raise ValueError(f"unknown flow kind code {code!r}")


def _batch_slots_py(code: int, a1: np.ndarray, a2: np.ndarray,
                    out: np.ndarray, start: int, stop: int) -> None:
    for i in range(start, stop):
        out[i, :] = _unit_slots_py(code, a1[i], a2[i])


try:
    from . import _speedups as _compiled
except ImportError:  # pure fallback stays available without a compiler
    _compiled = None

_requested = os.environ.get("POWERGEOM_BACKEND", "auto").strip().lower()
if _requested not in ("auto", "compiled", "python"):
    raise RuntimeError(
        f"POWERGEOM_BACKEND must be auto, compiled or python, got {_requested!r}")
if _requested == "compiled" and _compiled is None:
    raise RuntimeError(
        "POWERGEOM_BACKEND=compiled but the extension is not built")

USE_COMPILED = _compiled is not None and _requested != "python"
BACKEND_NAME = "compiled" if USE_COMPILED else "python"


def unit_slots(code: int, a1: float, a2: float) -> Jet3:
    """Unit-scale jet of flow ``code`` at one point, via the active backend."""
    if USE_COMPILED:
        return Jet3(*_compiled.unit_slots(code, a1, a2))
    return _unit_slots_py(code, a1, a2)


def default_threads() -> int:
    """Thread cap from ``POWERGEOM_THREADS`` (defaults to 1)."""
    raw = os.environ.get("POWERGEOM_THREADS", "").strip()
    if not raw:
        return 1
    return max(1, int(raw))


def batch_slots(code: int, a1: np.ndarray, a2: np.ndarray,
                threads: int | None = None) -> np.ndarray:
    """Unit-scale jets for flat point arrays as an ``(n, 10)`` array.

    Rows may be filled from several threads, but each point's slots depend
    only on that point, so the result is identical for any thread count.
    """
    a1 = np.ascontiguousarray(a1, dtype=np.float64)
    a2 = np.ascontiguousarray(a2, dtype=np.float64)
    if a1.shape != a2.shape or a1.ndim != 1:
        raise ValueError("batch_slots expects matching 1-d point arrays")
    n = a1.shape[0]
    out = np.empty((n, 10), dtype=np.float64)
    fill = _compiled.batch_slots if USE_COMPILED else _batch_slots_py
    if threads is None:
        threads = default_threads()
    threads = min(threads, max(1, n))
    if threads <= 1:
        fill(code, a1, a2, out, 0, n)
        return out
    chunk = (n + threads - 1) // threads
    spans = [(s, min(s + chunk, n)) for s in range(0, n, chunk)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        futures = [pool.submit(fill, code, a1, a2, out, s, e) for s, e in spans]
        for fut in futures:
            fut.result()
    return out
