"""Task swapping graphs for the supported network topologies.

Agents are labelled ``1..n``.  Every edge ``{a, b}`` of a graph is the
transposition ``(a b)``, so the edge set doubles as the generating set used
by the planners and by the brute-force oracle.

Labelling conventions: a line runs ``1..n`` left to right, a ring runs
``1..n`` clockwise, the star's supervisor is agent ``1``, and a complete
bipartite graph puts agents ``1..k`` in the upper layer and ``k+1..n`` in the
lower one.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .errors import NotATreeError, PermutationError, TopologyError, UnknownTopologyError
from .perm import Transposition

KINDS = ("line", "star", "complete", "complete_bipartite", "ring", "tree")


@dataclass(frozen=True)
class TopologySpec:
    kind: str
    n: int
    k: int | None = None
    edges: tuple[tuple[int, int], ...] | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise UnknownTopologyError(
                f"unknown topology kind {self.kind!r}; expected one of {', '.join(KINDS)}"
            )
        if isinstance(self.n, bool) or not isinstance(self.n, int):
            raise TopologyError(f"n must be an integer, got {self.n!r}")
        if self.kind == "complete_bipartite":
            if self.k is None:
                raise TopologyError("complete_bipartite needs a bipartite index k")
        elif self.k is not None:
            raise TopologyError(f"k is only meaningful for complete_bipartite, not {self.kind}")
        if self.kind == "tree":
            if self.edges is None:
                raise TopologyError("tree needs an explicit edge list")
            object.__setattr__(
                self, "edges", tuple(tuple(int(x) for x in e) for e in self.edges)
            )
        elif self.edges is not None:
            raise TopologyError(f"edges are only meaningful for tree, not {self.kind}")

    @classmethod
    def from_dict(cls, data: dict) -> TopologySpec:
        if not isinstance(data, dict):
            raise TopologyError("topology must be an object with at least 'kind' and 'n'")
        for field in ("kind", "n"):
            if field not in data:
                raise TopologyError(f"topology is missing field {field!r}")
        edges = data.get("edges")
        if edges is not None:
            if not all(isinstance(e, (list, tuple)) and len(e) == 2 for e in edges):
                raise TopologyError("field 'edges' must be a list of [a, b] pairs")
            edges = tuple(tuple(e) for e in edges)
        return cls(kind=data["kind"], n=data["n"], k=data.get("k"), edges=edges)

    def to_dict(self) -> dict:
        d = {"kind": self.kind, "n": self.n}
        if self.k is not None:
            d["k"] = self.k
        if self.edges is not None:
            d["edges"] = [list(e) for e in self.edges]
        return d


def _edge_pairs(spec: TopologySpec) -> list[tuple[int, int]]:
    n = spec.n
    if spec.kind == "line":
        return [(i, i + 1) for i in range(1, n)]
    if spec.kind == "ring":
        return [(i, i + 1) for i in range(1, n)] + [(1, n)]
    if spec.kind == "star":
        return [(1, i) for i in range(2, n + 1)]
    if spec.kind == "complete":
        return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    if spec.kind == "complete_bipartite":
        k = spec.k
        return [(i, j) for i in range(1, k + 1) for j in range(k + 1, n + 1)]
    return list(spec.edges)


class TaskSwapGraph:
    """Connected agent graph whose edges are the allowed adjacent swaps.

    Build instances with :func:`build_graph`.  The object is treated as
    immutable; tree distance tables are computed lazily and cached.
    """

    def __init__(self, spec: TopologySpec, edges: Iterable[Transposition]):
        self.spec = spec
        self.n = spec.n
        self.generators: tuple[Transposition, ...] = tuple(sorted(set(edges)))
        self.generating_set = frozenset(self.generators)
        adj: dict[int, set[int]] = {v: set() for v in range(1, self.n + 1)}
        for t in self.generators:
            adj[t.a].add(t.b)
            adj[t.b].add(t.a)
        self.adjacency = {v: frozenset(s) for v, s in adj.items()}
        self._toward: dict[int, dict[int, int]] = {}
        self._dist: dict[int, dict[int, int]] = {}

    @property
    def kind(self) -> str:
        return self.spec.kind

    @property
    def k(self) -> int | None:
        return self.spec.k

    @property
    def is_tree(self) -> bool:
        # connectivity is enforced at construction
        return len(self.generators) == self.n - 1

    def __repr__(self):
        return f"TaskSwapGraph({self.spec.kind}, n={self.n}, edges={len(self.generators)})"

    def is_edge(self, t: Transposition) -> bool:
        return t in self.generating_set

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def _bfs_from(self, root: int):
        dist = {root: 0}
        toward = {root: root}
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in sorted(self.adjacency[v]):
                if w not in dist:
                    dist[w] = dist[v] + 1
                    toward[w] = v
                    queue.append(w)
        self._dist[root] = dist
        self._toward[root] = toward

    def _require_tree(self):
        if not self.is_tree:
            raise NotATreeError(f"{self.kind} graph on {self.n} agents is not a tree")

    def _require_agent(self, v: int):
        if not 1 <= v <= self.n:
            raise TopologyError(f"agent {v} outside 1..{self.n}")

    def tree_distance(self, i: int, j: int) -> int:
        """Number of edges on the unique path between agents ``i`` and ``j``."""
        self._require_tree()
        self._require_agent(i)
        self._require_agent(j)
        if j not in self._dist:
            self._bfs_from(j)
        return self._dist[j][i]

    def next_hop(self, a: int, b: int) -> int:
        """Neighbour of ``a`` on the tree path from ``a`` to ``b`` (``a`` itself if equal)."""
        self._require_tree()
        self._require_agent(a)
        self._require_agent(b)
        if b not in self._toward:
            self._bfs_from(b)
        return self._toward[b][a]


def _validate(spec: TopologySpec):
    n = spec.n
    if n < 3:
        raise TopologyError(f"a task swapping graph needs at least 3 agents, got n={n}")
    if spec.kind == "complete_bipartite":
        if isinstance(spec.k, bool) or not isinstance(spec.k, int) or not 1 <= spec.k < n:
            raise TopologyError(f"bipartite index k must satisfy 1 <= k < n={n}, got {spec.k}")
    if spec.kind == "tree":
        edges = spec.edges
        if len(edges) != n - 1:
            raise TopologyError(f"a spanning tree on {n} agents has {n - 1} edges, got {len(edges)}")
        parent = list(range(n + 1))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in edges:
            if not (1 <= a <= n and 1 <= b <= n) or a == b:
                raise TopologyError(f"tree edge ({a}, {b}) is not a pair of distinct agents in 1..{n}")
            ra, rb = find(a), find(b)
            if ra == rb:
                raise TopologyError(f"tree edge ({a}, {b}) closes a cycle")
            parent[ra] = rb


def build_graph(spec: TopologySpec) -> TaskSwapGraph:
    _validate(spec)
    try:
        edges = [Transposition(a, b) for a, b in _edge_pairs(spec)]
    except PermutationError as exc:
        raise TopologyError(str(exc)) from exc
    return TaskSwapGraph(spec, edges)


def line(n: int) -> TaskSwapGraph:
    return build_graph(TopologySpec("line", n))


def star(n: int) -> TaskSwapGraph:
    return build_graph(TopologySpec("star", n))


def complete(n: int) -> TaskSwapGraph:
    return build_graph(TopologySpec("complete", n))


def complete_bipartite(n: int, k: int) -> TaskSwapGraph:
    return build_graph(TopologySpec("complete_bipartite", n, k=k))


def ring(n: int) -> TaskSwapGraph:
    return build_graph(TopologySpec("ring", n))


def tree(n: int, edges: Iterable[tuple[int, int]]) -> TaskSwapGraph:
    return build_graph(TopologySpec("tree", n, edges=tuple(tuple(e) for e in edges)))


def tree_distance(g: TaskSwapGraph, i: int, j: int) -> int:
    return g.tree_distance(i, j)


def is_edge(g: TaskSwapGraph, t: Transposition) -> bool:
    return g.is_edge(t)
