"""Swap plans: ordered sequences of adjacent swaps, plus step-by-step checking."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import PermutationError
from .perm import Permutation, Transposition, apply_swap


@dataclass(frozen=True)
class SwapPlan:
    """Swaps applied left to right; each one right-multiplies the assignment."""

    swaps: tuple[Transposition, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "swaps", tuple(self.swaps))

    @classmethod
    def from_pairs(cls, pairs: Iterable[Iterable[int]]) -> SwapPlan:
        return cls(tuple(Transposition(*p) for p in pairs))

    @property
    def length(self) -> int:
        return len(self.swaps)

    def __len__(self):
        return len(self.swaps)

    def __iter__(self):
        return iter(self.swaps)

    def __add__(self, other: SwapPlan) -> SwapPlan:
        return SwapPlan(self.swaps + other.swaps)

    def pairs(self) -> list[tuple[int, int]]:
        return [(t.a, t.b) for t in self.swaps]

    def to_dict(self, source: Permutation | None = None) -> dict:
        """Serialise; passing ``source`` also records every intermediate assignment."""
        d = {"length": self.length, "swaps": [t.to_list() for t in self.swaps]}
        if source is not None:
            d["states"] = [s.to_list() for s in plan_states(source, self)]
        return d

    @classmethod
    def from_dict(cls, data: dict) -> SwapPlan:
        if not isinstance(data, dict) or "swaps" not in data:
            raise PermutationError("plan must be an object with a 'swaps' list")
        swaps = data["swaps"]
        if not isinstance(swaps, list) or not all(
            isinstance(s, list) and len(s) == 2 and all(isinstance(x, int) for x in s) for s in swaps
        ):
            raise PermutationError("field 'swaps' must be a list of [a, b] integer pairs")
        plan = cls.from_pairs(swaps)
        if "length" in data and data["length"] != plan.length:
            raise PermutationError(
                f"field 'length' is {data['length']} but 'swaps' holds {plan.length} entries"
            )
        return plan


def apply_plan(p: Permutation, plan: SwapPlan) -> Permutation:
    for t in plan.swaps:
        p = apply_swap(p, t)
    return p


def plan_states(p: Permutation, plan: SwapPlan) -> list[Permutation]:
    """``[p, p t1, p t1 t2, ...]``, one entry more than the plan length."""
    states = [p]
    for t in plan.swaps:
        p = apply_swap(p, t)
        states.append(p)
    return states


@dataclass(frozen=True)
class PlanCheck:
    ok: bool
    step: int | None = None
    reason: str | None = None
    reached: Permutation | None = None

    def to_dict(self) -> dict:
        if self.ok:
            return {"verdict": "OK"}
        d = {"verdict": "FAIL", "step": self.step, "reason": self.reason}
        if self.reached is not None:
            d["reached"] = self.reached.to_list()
        return d


def check_plan(graph, source: Permutation, target: Permutation, plan: SwapPlan) -> PlanCheck:
    """Replay ``plan`` on ``graph``.

    Fails at the first swap that is not an edge (``step`` is 1-based), or at
    the end if the final assignment differs from ``target``.
    """
    p = source
    for step, t in enumerate(plan.swaps, 1):
        if t.b > graph.n or not graph.is_edge(t):
            return PlanCheck(False, step, "non-edge")
        p = apply_swap(p, t)
    if p != target:
        return PlanCheck(False, plan.length, "endpoint-mismatch", reached=p)
    return PlanCheck(True)
