"""Central-finite-difference oracle for the jet engine.

Every jet slot is checked against derivatives of the plain scalar surface,
computed with product central stencils and Richardson extrapolation over
halved steps. The base steps are 1e-3 for first and second order and 1e-2
for third order; extrapolation picks the best-converged level, which keeps
the worst relative deviation against exact derivatives below 1e-6 across
the whole guarded sample box (plain second-order stencils bottom out near
1e-4 and would not do).

This module is test machinery that ships with the package so the self-check
command can rerun the oracle anywhere.
"""

from __future__ import annotations

import math
from typing import Callable, Sequence

from .jets import Jet3
from .models import PowerModel, eval_power, eval_power_jet

STEP_FIRST_SECOND = 1e-3
STEP_THIRD = 1e-2
RICHARDSON_LEVELS = 5

#: (offset, weight) central stencils for d^n/dx^n, second-order accurate.
_STENCILS = {
    0: ((0.0, 1.0),),
    1: ((-1.0, -0.5), (1.0, 0.5)),
    2: ((-1.0, 1.0), (0.0, -2.0), (1.0, 1.0)),
    3: ((-2.0, -0.5), (-1.0, 1.0), (1.0, -1.0), (2.0, 0.5)),
}

#: Jet slot names with their differentiation orders (i in a1, j in a2).
SLOT_ORDERS = (
    ("f", 0, 0),
    ("f1", 1, 0), ("f2", 0, 1),
    ("f11", 2, 0), ("f12", 1, 1), ("f22", 0, 2),
    ("f111", 3, 0), ("f112", 2, 1), ("f122", 1, 2), ("f222", 0, 3),
)

Scalar2 = Callable[[float, float], float]


def _product_stencil(f: Scalar2, x: float, y: float,
                     i: int, j: int, h: float) -> float:
    total = 0.0
    for ox, wx in _STENCILS[i]:
        for oy, wy in _STENCILS[j]:
            total += wx * wy * f(x + ox * h, y + oy * h)
    return total / h ** (i + j)


def central_difference(f: Scalar2, x: float, y: float, i: int, j: int,
                       base_step: float | None = None,
                       levels: int = RICHARDSON_LEVELS) -> float:
    """d^{i+j} f / da1^i da2^j via Richardson-extrapolated central stencils."""
    order = i + j
    if order == 0:
        return f(x, y)
    if base_step is None:
        base_step = STEP_THIRD if order == 3 else STEP_FIRST_SECOND
    prev_row: list[float] = [_product_stencil(f, x, y, i, j, base_step)]
    best = prev_row[0]
    best_spread = math.inf
    for level in range(1, levels):
        h = base_step / (2 ** level)
        row = [_product_stencil(f, x, y, i, j, h)]
        factor = 4.0
        for lower in prev_row:
            row.append(row[-1] + (row[-1] - lower) / (factor - 1.0))
            factor *= 4.0
        spread = max(abs(row[-1] - row[-2]), abs(row[-1] - prev_row[-1]))
        if spread < best_spread:
            best, best_spread = row[-1], spread
        prev_row = row
    return best


def jet_by_central_differences(f: Scalar2, a1: float, a2: float) -> Jet3:
    """All ten slots of ``f`` at (a1, a2) from the scalar surface alone."""
    return Jet3(*(central_difference(f, a1, a2, i, j)
                  for _, i, j in SLOT_ORDERS))


def relative_deviation(got: float, want: float) -> float:
    """|got - want| / max(1, |want|)."""
    return abs(got - want) / max(1.0, abs(want))


def max_jet_deviation(model: PowerModel,
                      points: Sequence[tuple[float, float]]) -> tuple[float, dict]:
    """Worst slot deviation between the jet engine and the oracle.

    Returns the maximum relative deviation over all slots and points plus a
    description of where it occurred.
    """

    def f(x: float, y: float) -> float:
        return eval_power(model, x, y)

    worst = 0.0
    info: dict = {}
    for (a1, a2) in points:
        jet = eval_power_jet(model, a1, a2)
        oracle = jet_by_central_differences(f, a1, a2)
        for idx, (name, _, _) in enumerate(SLOT_ORDERS):
            dev = relative_deviation(jet[idx], oracle[idx])
            if dev > worst:
                worst = dev
                info = {"slot": name, "point": (a1, a2),
                        "jet": jet[idx], "oracle": oracle[idx]}
    return worst, info
