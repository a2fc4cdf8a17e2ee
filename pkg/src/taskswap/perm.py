"""Permutations of ``{1..n}`` in one-line notation.

A :class:`Permutation` stores ``p(1), ..., p(n)``.  Composition follows the
function convention ``compose(p, q)(i) == p(q(i))`` so ``q`` acts first, and
right multiplication by a transposition ``(a b)`` exchanges the entries at
positions ``a`` and ``b``.  Everything is immutable.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import PermutationError, SizeMismatchError

__all__ = [
    "Permutation",
    "Transposition",
    "CycleDecomposition",
    "identity",
    "compose",
    "compose_all",
    "inverse",
    "apply_swap",
    "transposition_permutation",
    "disjoint_cycles",
    "from_cycles",
    "cycle_permutation",
    "inversion_number",
]


@dataclass(frozen=True)
class Permutation:
    """Bijection of ``{1..n}``; ``mapping[i - 1]`` is the image of ``i``."""

    mapping: tuple[int, ...]

    def __post_init__(self):
        m = tuple(int(x) for x in self.mapping)
        object.__setattr__(self, "mapping", m)
        if not m:
            raise PermutationError("permutation must have at least one element")
        if sorted(m) != list(range(1, len(m) + 1)):
            raise PermutationError(f"{list(m)} is not a permutation of 1..{len(m)}")

    @classmethod
    def of(cls, *values: int) -> Permutation:
        return cls(tuple(values))

    @property
    def n(self) -> int:
        return len(self.mapping)

    def __len__(self):
        return len(self.mapping)

    def __iter__(self):
        return iter(self.mapping)

    def __call__(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise PermutationError(f"element {i} outside 1..{self.n}")
        return self.mapping[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __str__(self):
        return " ".join(map(str, self.mapping))

    def __repr__(self):
        return f"Permutation({list(self.mapping)})"

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.mapping, 1))

    def position_of(self, value: int) -> int:
        """Return ``j`` with ``p(j) == value``."""
        return self.mapping.index(value) + 1

    def to_list(self) -> list[int]:
        return list(self.mapping)


@dataclass(frozen=True, order=True)
class Transposition:
    """Unordered pair of distinct labels, stored with ``a < b``."""

    a: int
    b: int

    def __post_init__(self):
        a, b = int(self.a), int(self.b)
        if a == b:
            raise PermutationError(f"transposition needs two distinct labels, got ({a} {b})")
        if min(a, b) < 1:
            raise PermutationError(f"labels are 1-based, got ({a} {b})")
        if a > b:
            a, b = b, a
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    def __iter__(self):
        return iter((self.a, self.b))

    def __contains__(self, x: int) -> bool:
        return x == self.a or x == self.b

    def other(self, x: int) -> int:
        """The endpoint that is not ``x``."""
        if x == self.a:
            return self.b
        if x == self.b:
            return self.a
        raise ValueError(f"{x} is not an endpoint of {self}")

    def __str__(self):
        return f"({self.a} {self.b})"

    def to_list(self) -> list[int]:
        return [self.a, self.b]


@dataclass(frozen=True)
class CycleDecomposition:
    """Disjoint cycles of a permutation in canonical form.

    Each cycle starts at its smallest element and cycles are sorted by that
    element.  ``fixed_points`` holds the length-1 cycles.
    """

    cycles: tuple[tuple[int, ...], ...]
    fixed_points: tuple[int, ...]

    @property
    def cycle_count_with_fixed(self) -> int:
        return len(self.cycles) + len(self.fixed_points)

    @property
    def n(self) -> int:
        return sum(map(len, self.cycles)) + len(self.fixed_points)

    def __str__(self):
        if not self.cycles:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles)


def _check_same_size(p: Permutation, q: Permutation):
    if p.n != q.n:
        raise SizeMismatchError(f"size mismatch: {p.n} vs {q.n}")


def identity(n: int) -> Permutation:
    if n < 1:
        raise PermutationError(f"identity needs n >= 1, got {n}")
    return Permutation(tuple(range(1, n + 1)))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Return ``p o q``, i.e. ``i -> p(q(i))``."""
    _check_same_size(p, q)
    pm = p.mapping
    return Permutation(tuple(pm[x - 1] for x in q.mapping))


def compose_all(perms: Iterable[Permutation], n: int) -> Permutation:
    """Left-to-right product ``g1 g2 ... gk`` under the function convention."""
    result = identity(n)
    for g in perms:
        result = compose(result, g)
    return result


def inverse(p: Permutation) -> Permutation:
    inv = [0] * p.n
    for i, v in enumerate(p.mapping, 1):
        inv[v - 1] = i
    return Permutation(tuple(inv))


def transposition_permutation(t: Transposition, n: int) -> Permutation:
    if t.b > n:
        raise PermutationError(f"{t} out of range for n={n}")
    m = list(range(1, n + 1))
    m[t.a - 1], m[t.b - 1] = t.b, t.a
    return Permutation(tuple(m))


def apply_swap(p: Permutation, t: Transposition) -> Permutation:
    """Right-multiply ``p`` by ``t``: exchange the values at positions ``t.a``, ``t.b``."""
    if t.b > p.n:
        raise PermutationError(f"{t} out of range for n={p.n}")
    m = list(p.mapping)
    m[t.a - 1], m[t.b - 1] = m[t.b - 1], m[t.a - 1]
    return Permutation(tuple(m))


def disjoint_cycles(p: Permutation) -> CycleDecomposition:
    seen = [False] * (p.n + 1)
    cycles = []
    fixed = []
    for start in range(1, p.n + 1):
        if seen[start]:
            continue
        cyc = [start]
        seen[start] = True
        x = p.mapping[start - 1]
        while x != start:
            cyc.append(x)
            seen[x] = True
            x = p.mapping[x - 1]
        # scanning starts in ascending order, so each cycle already begins at its minimum
        if len(cyc) == 1:
            fixed.append(start)
        else:
            cycles.append(tuple(cyc))
    return CycleDecomposition(tuple(cycles), tuple(fixed))


def cycle_permutation(cycle: Sequence[int], n: int) -> Permutation:
    """The permutation mapping ``c1 -> c2 -> ... -> cr -> c1``."""
    m = list(range(1, n + 1))
    if len(set(cycle)) != len(cycle):
        raise PermutationError(f"cycle {list(cycle)} repeats an element")
    for idx, x in enumerate(cycle):
        if not 1 <= x <= n:
            raise PermutationError(f"cycle element {x} outside 1..{n}")
        m[x - 1] = cycle[(idx + 1) % len(cycle)]
    return Permutation(tuple(m))


def from_cycles(cycles: Iterable[Sequence[int]], n: int) -> Permutation:
    """Product of the given cycles, the rightmost acting first."""
    result = identity(n)
    for c in cycles:
        result = compose(result, cycle_permutation(c, n))
    return result


def inversion_number(p: Permutation) -> int:
    """Count pairs ``i < j`` with ``p(i) > p(j)`` (merge sort, O(n log n))."""

    def sort_count(seq):
        if len(seq) <= 1:
            return list(seq), 0
        mid = len(seq) // 2
        left, a = sort_count(seq[:mid])
        right, b = sort_count(seq[mid:])
        merged = []
        count = a + b
        i = j = 0
        while i < len(left) and j < len(right):
            if left[i] <= right[j]:
                merged.append(left[i])
                i += 1
            else:
                merged.append(right[j])
                count += len(left) - i
                j += 1
        merged.extend(left[i:])
        merged.extend(right[j:])
        return merged, count

    return sort_count(list(p.mapping))[1]
