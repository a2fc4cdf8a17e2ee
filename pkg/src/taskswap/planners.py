"""Shortest adjacent-swap plans between two task assignments.

For a source ``p1`` and target ``p2`` the plan ``g1 ... gk`` satisfies
``p1 g1 ... gk == p2``; equivalently it factorises ``p1^-1 p2`` over the
graph's edge transpositions, or sorts ``p2^-1 p1`` to the identity when the
swaps are applied to it in the same order.  Every topology-specific planner
below returns a :class:`~taskswap.plan.SwapPlan` in that orientation.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import (
    NotATreeError,
    PermutationError,
    PlannerInvariantError,
    SizeMismatchError,
    TopologyError,
    UnstableDisplacementError,
)
from .perm import (
    Permutation,
    Transposition,
    apply_swap,
    compose,
    disjoint_cycles,
    inverse,
)
from .plan import SwapPlan
from .topology import TaskSwapGraph

T = Transposition


def _check_pair(source: Permutation, target: Permutation):
    if source.n != target.n:
        raise SizeMismatchError(f"source has n={source.n}, target has n={target.n}")


def reassignment(source: Permutation, target: Permutation) -> Permutation:
    """``p1^-1 p2``, the permutation a plan must factorise."""
    _check_pair(source, target)
    return compose(inverse(source), target)


def to_sort(source: Permutation, target: Permutation) -> Permutation:
    """``p2^-1 p1``, the permutation a plan sorts to the identity."""
    _check_pair(source, target)
    return compose(inverse(target), source)


# -- line ---------------------------------------------------------------------

def plan_line(source: Permutation, target: Permutation) -> SwapPlan:
    """Bubble sort of ``p2^-1 p1``; every swap removes exactly one inversion."""
    p = list(to_sort(source, target).mapping)
    swaps = []
    n = len(p)
    for end in range(n - 1, 0, -1):
        swapped = False
        for i in range(end):
            if p[i] > p[i + 1]:
                p[i], p[i + 1] = p[i + 1], p[i]
                swaps.append(T(i + 1, i + 2))
                swapped = True
        if not swapped:
            break
    return SwapPlan(tuple(swaps))


# -- star ---------------------------------------------------------------------

def star_cycle_factors(cycle: Sequence[int]) -> list[Transposition]:
    """Factor one cycle over the star transpositions ``(1 i)``.

    The cycle through the supervisor ``(1 q2 ... qs)`` costs ``s - 1``;
    any other cycle ``(c1 ... cl)`` costs ``l + 1``.
    """
    if len(cycle) < 2:
        return []
    if 1 in cycle:
        i = list(cycle).index(1)
        q = list(cycle[i:]) + list(cycle[:i])
        return [T(1, x) for x in reversed(q[1:])]
    c = list(cycle)
    return [T(1, c[0])] + [T(1, x) for x in reversed(c)]


def plan_star(source: Permutation, target: Permutation) -> SwapPlan:
    decomposition = disjoint_cycles(reassignment(source, target))
    swaps = []
    for cycle in decomposition.cycles:
        swaps.extend(star_cycle_factors(cycle))
    return SwapPlan(tuple(swaps))


# -- complete -----------------------------------------------------------------

def plan_complete(source: Permutation, target: Permutation) -> SwapPlan:
    """Each ``l``-cycle ``(q1 ... ql)`` becomes ``(q1 ql) ... (q1 q2)``; ``n - r`` swaps."""
    decomposition = disjoint_cycles(reassignment(source, target))
    swaps = []
    for q in decomposition.cycles:
        swaps.extend(T(q[0], x) for x in reversed(q[1:]))
    return SwapPlan(tuple(swaps))


# -- complete bipartite -------------------------------------------------------

def _check_bipartite_cycle(cycle: Sequence[int], k: int, n: int):
    if not 1 <= k < n:
        raise TopologyError(f"bipartite index k must satisfy 1 <= k < n={n}, got {k}")
    if len(cycle) < 2:
        raise PermutationError(f"cycle {list(cycle)} has fewer than two elements")
    if len(set(cycle)) != len(cycle):
        raise PermutationError(f"cycle {list(cycle)} repeats an element")
    for x in cycle:
        if not 1 <= x <= n:
            raise PermutationError(f"cycle element {x} outside 1..{n}")


def mixed_segments(cycle: Sequence[int], k: int) -> list[list[int]]:
    """Split a mixed cycle into simple cycles (an upper block then a lower block).

    The cycle is rotated to start at the smallest upper element (``<= k``)
    whose predecessor is a lower element, which is where a simple cycle can
    begin.
    """
    c = list(cycle)
    L = len(c)
    starts = [c[i] for i in range(L) if c[i] <= k and c[i - 1] > k]
    if not starts:
        raise PermutationError(f"cycle {c} is not mixed for k={k}")
    i = c.index(min(starts))
    c = c[i:] + c[:i]
    segments = []
    for x in c:
        if x <= k and (not segments or segments[-1][-1] > k):
            segments.append([x])
        else:
            segments[-1].append(x)
    return segments


def simple_cycle_factors(segment: Sequence[int], k: int) -> list[Transposition]:
    """``(i1..ia j1..jb) = (i1 jb)...(i1 j2)(ia j1)...(i2 j1)(i1 j1)``."""
    a = sum(1 for x in segment if x <= k)
    upper, lower = list(segment[:a]), list(segment[a:])
    i1, j1 = upper[0], lower[0]
    out = [T(i1, j) for j in reversed(lower[1:])]
    out += [T(i, j1) for i in reversed(upper[1:])]
    out.append(T(i1, j1))
    return out


def _mixed_factors(segments: list[list[int]], k: int) -> list[Transposition]:
    factors = simple_cycle_factors(segments[0], k)
    if len(segments) == 1:
        return factors
    # C = (v1 v2)(E1)(E2 ... Es); fold the non-generator (v1 v2) into E1's leading factor
    v1, v2 = segments[0][0], segments[1][0]
    w = factors[0]
    if v1 in w:
        w2 = w.other(v1)
        head = [w, T(v2, w2)]
    else:
        w2 = w.b if w.a <= k else w.a
        head = [w, T(v2, w2), T(v1, w2), T(v2, w2)]
    return head + factors[1:] + _mixed_factors(segments[1:], k)


def bipartite_cycle_factorization(cycle: Sequence[int], k: int, n: int) -> list[Transposition]:
    """Factor one cycle over ``{(i j) : i <= k < j}``.

    Internal cycles pivot on ``k + 1``, external cycles on ``1``; mixed
    cycles are split into simple cycles and linked recursively.
    """
    _check_bipartite_cycle(cycle, k, n)
    c = list(cycle)
    if all(x <= k for x in c):
        t = k + 1
        return [T(c[0], t)] + [T(x, t) for x in reversed(c[1:])] + [T(c[0], t)]
    if all(x > k for x in c):
        u = 1
        return [T(u, c[-1])] + [T(u, x) for x in reversed(c[:-1])] + [T(u, c[-1])]
    return _mixed_factors(mixed_segments(c, k), k)


def peel_mixed_cycle(cycle: Sequence[int], k: int) -> list[Transposition]:
    """Factor a mixed ``L``-cycle into exactly ``L - 1`` bipartite transpositions.

    Repeatedly uses ``(x y z ...) = (x y)(y z ...)`` with ``x`` and ``y`` on
    opposite layers, removing ``x`` from a layer that keeps another element
    so the remainder stays mixed.
    """
    c = list(cycle)
    out = []
    while len(c) > 2:
        L = len(c)
        upper = sum(1 for x in c if x <= k)
        side = (lambda x: x <= k) if upper >= 2 else (lambda x: x > k)
        cands = [i for i in range(L) if side(c[i]) and (c[i] <= k) != (c[(i + 1) % L] <= k)]
        i = min(cands, key=lambda j: c[j])
        x, y = c[i], c[(i + 1) % L]
        out.append(T(x, y))
        c = c[i + 1:] + c[:i]
    out.append(T(c[0], c[1]))
    return out


def plan_bipartite(source: Permutation, target: Permutation, k: int) -> SwapPlan:
    """Shortest plan on the complete bipartite graph with upper layer ``1..k``.

    Internal and external cycles are paired off and each pair is merged
    into one simple cycle by a single linking swap; unpaired ones use the
    pivot factorisation and mixed cycles are factored in ``L - 1`` swaps.
    The total is ``n - c + 2 max(#internal, #external)``.
    """
    pi = reassignment(source, target)
    n = pi.n
    if not 1 <= k < n:
        raise TopologyError(f"bipartite index k must satisfy 1 <= k < n={n}, got {k}")
    cycles = disjoint_cycles(pi).cycles
    internal = [c for c in cycles if all(x <= k for x in c)]
    external = [c for c in cycles if all(x > k for x in c)]
    partner = dict(zip(internal, external))
    partner.update({e: None for e in external[:len(internal)]})
    swaps = []
    for c in cycles:
        if c in partner:
            mate = partner[c]
            if mate is None:
                continue
            # C D = (u l) M with M the simple cycle C followed by D
            swaps.append(T(c[0], mate[0]))
            swaps.extend(simple_cycle_factors(list(c) + list(mate), k))
        elif c in internal or c in external:
            swaps.extend(bipartite_cycle_factorization(c, k, n))
        else:
            factors = bipartite_cycle_factorization(c, k, n)
            if len(factors) != len(c) - 1:
                factors = peel_mixed_cycle(c, k)
            swaps.extend(factors)
    return SwapPlan(tuple(swaps))


def bipartite_distance(pi: Permutation, k: int) -> int:
    """Closed-form length of :func:`plan_bipartite` for the permutation ``pi``."""
    dec = disjoint_cycles(pi)
    internal = sum(1 for c in dec.cycles if all(x <= k for x in c))
    external = sum(1 for c in dec.cycles if all(x > k for x in c))
    return pi.n - dec.cycle_count_with_fixed + 2 * max(internal, external)


# -- ring ---------------------------------------------------------------------

@dataclass(frozen=True)
class DisplacementVector:
    """Signed offsets ``d[i] = pos(i) - i`` of a circular permutation (1-based ``i``)."""

    d: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "d", tuple(int(x) for x in self.d))
        if sum(self.d) != 0:
            raise ValueError(f"displacement components must sum to 0, got {sum(self.d)}")

    @property
    def n(self) -> int:
        return len(self.d)

    def __getitem__(self, i: int) -> int:
        """Component for element ``i`` (1-based)."""
        return self.d[i - 1]

    def is_stable(self) -> bool:
        return max(self.d) - min(self.d) <= self.n

    def to_list(self) -> list[int]:
        return list(self.d)


def displacement_vector(p: Permutation) -> DisplacementVector:
    pos = [0] * p.n
    for j, v in enumerate(p.mapping, 1):
        pos[v - 1] = j
    return DisplacementVector(tuple(pos[i - 1] - i for i in range(1, p.n + 1)))


def stabilize(d: DisplacementVector) -> DisplacementVector:
    """Apply contracting transformations until ``max - min <= n``.

    Ties for the maximum or minimum go to the smallest index.
    """
    v = list(d.d)
    n = len(v)
    while True:
        hi, lo = max(v), min(v)
        if hi - lo <= n:
            return DisplacementVector(tuple(v))
        s, t = v.index(hi), v.index(lo)
        v[s] -= n
        v[t] += n


def ring_inversion(dbar: DisplacementVector) -> int:
    """Inversion count of a stable displacement vector: the swap distance on a ring."""
    if not dbar.is_stable():
        raise UnstableDisplacementError(f"{dbar.to_list()} is not stable")
    n = dbar.n
    e = [i + x for i, x in enumerate(dbar.d, 1)]
    count = 0
    for i in range(n):
        for j in range(i + 1, n):
            if e[i] > e[j] or e[i] + n < e[j]:
                count += 1
    return count


def ring_distance(p: Permutation) -> int:
    return ring_inversion(stabilize(displacement_vector(p)))


def plan_ring(source: Permutation, target: Permutation) -> SwapPlan:
    """Sort ``p2^-1 p1`` on the ring, one inversion at a time.

    Each step looks (edges ``(v, v+1)`` then ``(n, 1)``, smallest ``v``
    first) for two elements whose paths home cross that edge in opposite
    directions; failing that, for a homed element next to one whose path
    passes through it.  The swap must lower the ring inversion count by one.
    """
    sigma = to_sort(source, target)
    n = sigma.n
    swaps = []
    current = ring_distance(sigma)
    while current:
        dbar = stabilize(displacement_vector(sigma))
        edges = [(v, v % n + 1) for v in range(1, n + 1)]
        opposite, homed = [], []
        for v1, v2 in edges:
            s, t = sigma(v1), sigma(v2)
            # s moves clockwise onto v2, t counter-clockwise onto v1
            if dbar[s] < 0 and dbar[t] > 0:
                opposite.append((v1, v2))
            elif (dbar[s] == 0 and dbar[t] > 0) or (dbar[t] == 0 and dbar[s] < 0):
                homed.append((v1, v2))
        for v1, v2 in opposite + homed:
            cand = apply_swap(sigma, T(v1, v2))
            d = ring_distance(cand)
            if d == current - 1:
                sigma, current = cand, d
                swaps.append(T(v1, v2))
                break
        else:
            raise PlannerInvariantError(
                f"no inversion-reducing ring swap found for {sigma} (inversions {current})"
            )
    if not sigma.is_identity():
        raise PlannerInvariantError(f"ring inversion count hit 0 at non-identity {sigma}")
    return SwapPlan(tuple(swaps))


# -- tree ---------------------------------------------------------------------

def tree_step_bound(g: TaskSwapGraph, pi: Permutation) -> int:
    """``c(pi) - n + sum_i d(i, pi(i))``, the marker-puzzle step count on a tree."""
    if not g.is_tree:
        raise NotATreeError(f"{g.kind} graph is not a tree")
    c = disjoint_cycles(pi).cycle_count_with_fixed
    return c - pi.n + sum(g.tree_distance(i, pi(i)) for i in range(1, pi.n + 1))


def plan_tree(g: TaskSwapGraph, source: Permutation, target: Permutation) -> SwapPlan:
    """Marker-puzzle sort of ``p2^-1 p1`` on a tree.

    Vertex ``v`` holds marker ``sigma(v)``.  A step swaps across an edge when
    both markers are unhomed and must cross that edge toward each other, or
    when one is homed and the other's way home passes through it.
    """
    if not g.is_tree:
        raise NotATreeError(f"{g.kind} graph is not a tree")
    sigma = to_sort(source, target)
    if sigma.n != g.n:
        raise SizeMismatchError(f"assignments have n={sigma.n}, graph has n={g.n}")
    swaps = []
    while not sigma.is_identity():
        for t in g.generators:
            a, b = t.a, t.b
            x, y = sigma(a), sigma(b)
            x_goes = x != a and g.next_hop(a, x) == b
            y_goes = y != b and g.next_hop(b, y) == a
            if (x_goes and y_goes) or (x == a and y_goes) or (y == b and x_goes):
                sigma = apply_swap(sigma, t)
                swaps.append(t)
                break
        else:
            raise PlannerInvariantError(f"no legal marker move found for {sigma}")
    return SwapPlan(tuple(swaps))


# -- dispatch -----------------------------------------------------------------

def plan(g: TaskSwapGraph, source: Permutation, target: Permutation) -> SwapPlan:
    """Shortest plan from ``source`` to ``target`` on ``g``."""
    for p, name in ((source, "source"), (target, "target")):
        if p.n != g.n:
            raise SizeMismatchError(f"{name} has n={p.n}, graph has n={g.n}")
    if source == target:
        return SwapPlan()
    kind = g.kind
    if kind == "line":
        return plan_line(source, target)
    if kind == "star":
        return plan_star(source, target)
    if kind == "complete":
        return plan_complete(source, target)
    if kind == "complete_bipartite":
        return plan_bipartite(source, target, g.k)
    if kind == "ring":
        return plan_ring(source, target)
    return plan_tree(g, source, target)
