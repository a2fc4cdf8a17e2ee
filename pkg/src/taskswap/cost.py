"""Migration cost of a swap plan and the net benefit of reassigning tasks."""
from __future__ import annotations

from dataclasses import dataclass
from numbers import Real

from .plan import SwapPlan


def _check_real(name: str, value):
    if isinstance(value, bool) or not isinstance(value, Real):
        raise ValueError(f"{name} must be a real number, got {value!r}")


@dataclass(frozen=True)
class CostParams:
    """Uniform per-swap cost ``c`` and the costs ``h1``, ``h2`` of the two assignments.

    ``swaps_by_distance`` counts swaps at swapping distance 1, 2, ...; only
    the first entry may be non-zero because plans here use adjacent swaps.
    """

    c: Real
    h1: Real = 0
    h2: Real = 0
    swaps_by_distance: tuple[int, ...] = ()

    def __post_init__(self):
        for name in ("c", "h1", "h2"):
            _check_real(name, getattr(self, name))
        if self.c < 0:
            raise ValueError(f"cost per swap must be non-negative, got {self.c}")
        counts = tuple(self.swaps_by_distance)
        object.__setattr__(self, "swaps_by_distance", counts)
        if any(x < 0 for x in counts):
            raise ValueError("swap counts must be non-negative")
        if any(counts[1:]):
            raise ValueError("only swaps between adjacent agents are supported")

    def total_cost(self) -> Real:
        """``c * sum(m * s_m)`` over the recorded swap counts."""
        return sum(self.c * m * s for m, s in enumerate(self.swaps_by_distance, 1))


def migration_cost(plan: SwapPlan, params: CostParams) -> Real:
    return params.c * plan.length


def reassignment_benefit(params: CostParams, f: Real) -> Real:
    """``h1 - h2 - f``; negative means the move costs more than it saves."""
    _check_real("f", f)
    return params.h1 - params.h2 - f


def benefit_report(params: CostParams, f: Real) -> dict:
    b = reassignment_benefit(params, f)
    return {"h1": params.h1, "h2": params.h2, "f": f, "benefit": b, "desirable": b > 0}
