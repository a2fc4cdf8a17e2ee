"""Brute-force ground truth over Cayley graphs of the symmetric group.

Permutations are ranked to dense indices by their Lehmer code, so a whole
Cayley graph is a handful of flat arrays: the permutations in lexicographic
order, one neighbour table per generator, and the BFS distance of every
vertex to the identity.  Because left multiplication is a graph
automorphism, ``d(x, y) == d(y^-1 x, I)`` and one BFS per generating set
answers every distance query.
"""
from __future__ import annotations

import csv
import io
import itertools
import json
import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .errors import CapExceededError, SizeMismatchError, TopologyError, UnreachableError
from .perm import Permutation, Transposition, compose, inverse
from .plan import SwapPlan

log = logging.getLogger(__name__)

DEFAULT_CAP = 7
FAMILIES = ("BS", "ST", "CT", "GST", "MBS", "HC")


def rank(p: Sequence[int]) -> int:
    """Lexicographic index of a one-line permutation of ``1..n`` (0 for the identity)."""
    n = len(p)
    r = 0
    for i in range(n):
        smaller = sum(1 for j in range(i + 1, n) if p[j] < p[i])
        r += smaller * math.factorial(n - 1 - i)
    return r


def unrank(r: int, n: int) -> tuple[int, ...]:
    if not 0 <= r < math.factorial(n):
        raise ValueError(f"rank {r} outside 0..{math.factorial(n) - 1}")
    pool = list(range(1, n + 1))
    out = []
    for i in range(n - 1, -1, -1):
        f = math.factorial(i)
        out.append(pool.pop(r // f))
        r %= f
    return tuple(out)


def _rank_rows(arr: np.ndarray) -> np.ndarray:
    n = arr.shape[1]
    ranks = np.zeros(arr.shape[0], dtype=np.int64)
    for i in range(n - 1):
        smaller = (arr[:, i + 1:] < arr[:, i:i + 1]).sum(axis=1)
        ranks += smaller * math.factorial(n - 1 - i)
    return ranks


def estimate_bytes(n: int, n_generators: int) -> int:
    """Rough footprint of a :class:`CayleyGraph` on ``n`` letters."""
    states = math.factorial(n)
    return states * (n + 4 * n_generators + 2 + 8)


def check_cap(n: int, cap: int = DEFAULT_CAP):
    if n > cap:
        raise CapExceededError(
            f"n={n} exceeds the oracle cap of {cap} ({n}! = {math.factorial(n)} states)"
        )


class CayleyGraph:
    """Cayley graph of ``S_n`` (or the subgroup the generators reach)."""

    def __init__(self, n: int, generators: Iterable[Transposition]):
        self.n = n
        self.generators = tuple(sorted(set(generators)))
        for t in self.generators:
            if t.b > n:
                raise TopologyError(f"generator {t} out of range for n={n}")
        if n >= 8:
            log.warning(
                "building Cayley graph on %d! = %d states, about %.1f MB",
                n, math.factorial(n), estimate_bytes(n, len(self.generators)) / 1e6,
            )
        perms = np.array(list(itertools.permutations(range(1, n + 1))), dtype=np.int8)
        self.perms = perms
        self.neighbors = np.empty((len(self.generators), len(perms)), dtype=np.int32)
        for gi, t in enumerate(self.generators):
            swapped = perms.copy()
            swapped[:, [t.a - 1, t.b - 1]] = swapped[:, [t.b - 1, t.a - 1]]
            self.neighbors[gi] = _rank_rows(swapped)
        self.dist = self._bfs()

    def _bfs(self) -> np.ndarray:
        dist = np.full(len(self.perms), -1, dtype=np.int16)
        dist[0] = 0
        frontier = np.array([0], dtype=np.int32)
        d = 0
        while frontier.size:
            nxt = np.unique(self.neighbors[:, frontier].ravel())
            nxt = nxt[dist[nxt] < 0]
            d += 1
            dist[nxt] = d
            frontier = nxt
        return dist

    @property
    def reachable(self) -> int:
        return int((self.dist >= 0).sum())

    @property
    def diameter(self) -> int:
        return int(self.dist.max())

    def distance_to_identity(self, p: Permutation) -> int:
        if p.n != self.n:
            raise SizeMismatchError(f"permutation has n={p.n}, graph has n={self.n}")
        d = int(self.dist[rank(p.mapping)])
        if d < 0:
            raise UnreachableError(f"{p} is not generated by {', '.join(map(str, self.generators))}")
        return d

    def descent(self, p: Permutation) -> SwapPlan:
        """Shortest walk from ``p`` to the identity.

        Each step takes the smallest generator that lowers the distance.
        """
        r = rank(p.mapping)
        d = int(self.dist[r])
        if d < 0:
            raise UnreachableError(f"{p} is not generated by {', '.join(map(str, self.generators))}")
        swaps = []
        while d > 0:
            for gi, t in enumerate(self.generators):
                nb = int(self.neighbors[gi, r])
                if self.dist[nb] == d - 1:
                    swaps.append(t)
                    r, d = nb, d - 1
                    break
        return SwapPlan(tuple(swaps))


@lru_cache(maxsize=32)
def _cached_graph(n: int, generators: tuple[Transposition, ...]) -> CayleyGraph:
    return CayleyGraph(n, generators)


def cayley_graph(n: int, generators: Iterable[Transposition], cap: int = DEFAULT_CAP) -> CayleyGraph:
    check_cap(n, cap)
    return _cached_graph(n, tuple(sorted(set(generators))))


def _relative(source: Permutation, target: Permutation) -> Permutation:
    if source.n != target.n:
        raise SizeMismatchError(f"source has n={source.n}, target has n={target.n}")
    return compose(inverse(target), source)


def bfs_distance(gens: Iterable[Transposition], source: Permutation, target: Permutation,
                 cap: int = DEFAULT_CAP) -> int:
    """Exact number of swaps from ``source`` to ``target`` using ``gens``."""
    sigma = _relative(source, target)
    return cayley_graph(sigma.n, gens, cap).distance_to_identity(sigma)


def shortest_plan(gens: Iterable[Transposition], source: Permutation, target: Permutation,
                  cap: int = DEFAULT_CAP) -> SwapPlan:
    """One shortest plan; lexicographically smallest generator at every step."""
    sigma = _relative(source, target)
    return cayley_graph(sigma.n, gens, cap).descent(sigma)


@dataclass(frozen=True)
class CayleyFamily:
    family: str
    n: int
    k: int | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise TopologyError(f"unknown Cayley family {self.family!r}; expected one of {', '.join(FAMILIES)}")
        if self.n < 2:
            raise TopologyError(f"Cayley families need n >= 2, got {self.n}")
        if self.family == "GST":
            if self.k is None or not 1 <= self.k < self.n:
                raise TopologyError(f"GST needs 1 <= k < n={self.n}, got k={self.k}")
        elif self.k is not None:
            raise TopologyError(f"k is only meaningful for GST, not {self.family}")

    def generators(self) -> tuple[Transposition, ...]:
        n, k = self.n, self.k
        if self.family == "BS":
            pairs = [(i, i + 1) for i in range(1, n)]
        elif self.family == "ST":
            pairs = [(1, i) for i in range(2, n + 1)]
        elif self.family == "CT":
            pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
        elif self.family == "GST":
            pairs = [(i, j) for i in range(1, k + 1) for j in range(k + 1, n + 1)]
        elif self.family == "MBS":
            pairs = [(i, i + 1) for i in range(1, n)] + [(1, n)]
        else:
            pairs = [(2 * i - 1, 2 * i) for i in range(1, n // 2 + 1)]
        return tuple(sorted({Transposition(a, b) for a, b in pairs}))

    def expected_diameter(self) -> int | None:
        """Closed-form diameter where one is known, ``None`` for MBS.

        For HC the value is the number of generators, which is how the
        closed form indexes that family.
        """
        n, k = self.n, self.k
        return {
            "BS": lambda: n * (n - 1) // 2,
            "ST": lambda: 3 * (n - 1) // 2,
            "CT": lambda: n - 1,
            "GST": lambda: n - 1 + max(k // 2, (n - k) // 2),
            "MBS": lambda: None,
            "HC": lambda: n // 2,
        }[self.family]()


def cayley_diameter(fam: CayleyFamily, cap: int = DEFAULT_CAP) -> int:
    return cayley_graph(fam.n, fam.generators(), cap).diameter


def diameter_record(fam: CayleyFamily, cap: int = DEFAULT_CAP) -> dict:
    g = cayley_graph(fam.n, fam.generators(), cap)
    expected = fam.expected_diameter()
    rec = {
        "family": fam.family,
        "n": fam.n,
        "k": fam.k,
        "vertices": g.reachable,
        "degree": len(g.generators),
        "diameter": g.diameter,
        "expected": "unknown" if expected is None else expected,
        "match": None if expected is None else g.diameter == expected,
    }
    if fam.family == "HC":
        m = len(g.generators)
        # the closed form counts generators; reading it with n = letters gives another value
        rec["generators"] = m
        rec["expected_vertices"] = 2 ** m
        rec["letters_convention"] = {"vertices": 2 ** fam.n, "diameter": fam.n}
    return rec


def diameter_survey(n_values: Iterable[int], families: Iterable[str] = FAMILIES,
                    cap: int = DEFAULT_CAP) -> list[dict]:
    """Diameter records for every family, size and (for GST) bipartite index."""
    records = []
    for family in families:
        for n in n_values:
            ks = range(1, n) if family == "GST" else [None]
            for k in ks:
                records.append(diameter_record(CayleyFamily(family, n, k), cap))
    return records


SURVEY_COLUMNS = ("family", "n", "k", "vertices", "degree", "diameter", "expected", "match")


def survey_to_csv(records: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=SURVEY_COLUMNS, extrasaction="ignore", lineterminator="\n")
    writer.writeheader()
    for rec in records:
        writer.writerow({c: "" if rec.get(c) is None else rec[c] for c in SURVEY_COLUMNS})
    return buf.getvalue()


def survey_to_json(records: list[dict]) -> str:
    return json.dumps(records, indent=2)
