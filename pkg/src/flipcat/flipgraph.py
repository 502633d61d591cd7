"""The diagonal-flip graph of the convex ``(n+2)``-gon.

Nodes are keyed by outdegree sequences, which identify triangulations
uniquely.  Distances come from breadth-first search, either on a built
graph or, for single queries, bidirectionally with neighbors generated on
the fly.
"""
from __future__ import annotations

import hashlib
import json
from collections import deque
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .core import (
    Triangulation,
    diagonals_cross,
    enumerate_triangulations,
    enumeration_cap,
    format_degrees,
    triangulation_from_outdegrees,
    triangulation_outdegrees,
)
from .errors import IndexOutOfRange, ResourceLimit, SizeMismatch
from .flips import diagonal_flip_neighbors
from .tl import Word, generator_triangulation, shift_word, word_to_triangulation

DEFAULT_GRAPH_CAP = 12

Key = tuple[int, ...]


def node_key(t: Triangulation) -> Key:
    return triangulation_outdegrees(t)


@dataclass
class FlipGraph:
    n: int
    nodes: list[Triangulation]
    adjacency: list[list[int]]
    index: dict[Key, int] = field(repr=False)

    def __len__(self):
        return len(self.nodes)

    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def node_index(self, t: Triangulation) -> int:
        return self.index[node_key(t)]

    def neighbors(self, t: Triangulation) -> list[Triangulation]:
        return [self.nodes[j] for j in self.adjacency[self.node_index(t)]]

    def distances_from(self, source: Triangulation) -> np.ndarray:
        """BFS distances from ``source`` to every node, in node order."""
        dist = np.full(len(self.nodes), -1, dtype=np.int32)
        s = self.node_index(source)
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in self.adjacency[u]:
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    queue.append(v)
        return dist

    def shortest_path(self, a: Triangulation, b: Triangulation) -> list[Triangulation]:
        s, goal = self.node_index(a), self.node_index(b)
        prev = {s: s}
        queue = deque([s])
        while queue and goal not in prev:
            u = queue.popleft()
            for v in self.adjacency[u]:
                if v not in prev:
                    prev[v] = u
                    queue.append(v)
        path = [goal]
        while path[-1] != s:
            path.append(prev[path[-1]])
        return [self.nodes[i] for i in reversed(path)]

    def distance_table(self) -> np.ndarray:
        """All-pairs distance matrix; row ``i`` is BFS from node ``i``."""
        return np.stack([self.distances_from(t) for t in self.nodes])


def build_flip_graph(n: int, cap: int | None = None) -> FlipGraph:
    """Materialize the flip graph; nodes sorted by diagonal list."""
    limit = DEFAULT_GRAPH_CAP if cap is None else cap
    if n > limit:
        raise ResourceLimit(f"n={n} exceeds the flip graph cap {limit}")
    nodes = enumerate_triangulations(n, cap=max(n, enumeration_cap()))
    index = {node_key(t): i for i, t in enumerate(nodes)}
    adjacency = [
        sorted(index[node_key(s)] for s in diagonal_flip_neighbors(t)) for t in nodes
    ]
    return FlipGraph(n, nodes, adjacency, index)


@dataclass(frozen=True)
class DistanceResult:
    distance: int
    lower_bound: int
    witness_path: tuple[Triangulation, ...] | None = None


def crossing_lower_bound(t1: Triangulation, t2: Triangulation) -> int:
    """Number of diagonals of ``t1`` crossed by some diagonal of ``t2``."""
    if t1.n != t2.n:
        raise SizeMismatch(f"triangulations of sizes {t1.n} and {t2.n}")
    return sum(any(diagonals_cross(a, b) for b in t2.diagonals) for a in t1.diagonals)


def _bidirectional(t1: Triangulation, t2: Triangulation) -> list[Triangulation]:
    if t1 == t2:
        return [t1]
    # per side: key -> (parent key, depth)
    sides = [{node_key(t1): (None, 0)}, {node_key(t2): (None, 0)}]
    frontiers = [[t1], [t2]]
    while True:
        side = 0 if len(frontiers[0]) <= len(frontiers[1]) else 1
        seen, others = sides[side], sides[1 - side]
        nxt = []
        best = None
        for t in frontiers[side]:
            key = node_key(t)
            depth = seen[key][1] + 1
            for s in diagonal_flip_neighbors(t):
                k = node_key(s)
                if k in seen:
                    continue
                seen[k] = (key, depth)
                nxt.append(s)
                if k in others:
                    total = depth + others[k][1]
                    if best is None or total < best[0]:
                        best = (total, k)
        frontiers[side] = nxt
        if best is not None:
            meet = best[1]
            break

    def chain(seen, k):
        out = []
        while k is not None:
            out.append(k)
            k = seen[k][0]
        return out

    forward = chain(sides[0], meet)[::-1]
    backward = chain(sides[1], meet)[1:]
    return [triangulation_from_outdegrees(k) for k in forward + backward]


def flip_distance(
    t1: Triangulation,
    t2: Triangulation,
    witness: bool = False,
    graph: FlipGraph | None = None,
) -> DistanceResult:
    if t1.n != t2.n:
        raise SizeMismatch(f"triangulations of sizes {t1.n} and {t2.n}")
    if graph is not None and graph.n != t1.n:
        raise SizeMismatch(f"graph has n={graph.n}, triangulations n={t1.n}")
    bound = crossing_lower_bound(t1, t2)
    if graph is not None:
        if witness:
            path = graph.shortest_path(t1, t2)
            return DistanceResult(len(path) - 1, bound, tuple(path))
        d = int(graph.distances_from(t1)[graph.node_index(t2)])
        return DistanceResult(d, bound)
    if t1.n > enumeration_cap():
        raise ResourceLimit(f"n={t1.n} exceeds the cap {enumeration_cap()}")
    path = _bidirectional(t1, t2)
    return DistanceResult(len(path) - 1, bound, tuple(path) if witness else None)


def generator_distance_formula(n: int, i: int, j: int) -> int:
    """Closed-form flip distance between the triangulations of ``u_i`` and ``u_j``."""
    for x in (i, j):
        if not 1 <= x <= n - 1:
            raise IndexOutOfRange(f"generator index {x} outside 1..{n - 1}")
    if i == j:
        return 0
    i, j = min(i, j), max(i, j)
    k = j - i
    if k == 1:
        return 2 if i == n - 2 else 3
    return k if i == n - k - 1 else k + 1


# -- neighbor catalogs of the generators -----------------------------------------


def identity_neighbor_words(n: int) -> list[Word]:
    """``u_{n-1} u_{n-2} ... u_{n-k}`` for ``k = 1 .. n-1``."""
    if n < 2:
        raise IndexOutOfRange("the identity has flip neighbors only for n >= 2")
    return [tuple(range(n - 1, n - k - 1, -1)) for k in range(1, n)]


def remaining_generator_neighbor_word(n: int, i: int) -> Word:
    """The neighbor of ``u_i`` not obtained by shifting from ``TL_{n-1}``."""
    if not 2 <= i <= n - 1:
        raise IndexOutOfRange(f"index {i} outside 2..{n - 1}")
    if i == 2:
        return (1, 2)
    if i == n - 1:
        return tuple(range(n - 2, 0, -1))
    return tuple(range(n - 1, i, -1)) + tuple(range(i - 1, 0, -1))


def u1_neighbor_words(n: int) -> list[Word]:
    if n < 3:
        raise IndexOutOfRange("the u1 catalog formula needs n >= 3")
    words = [(2, 1), tuple(range(1, n))]
    words += [tuple(range(n - 1, k - 1, -1)) + (1,) for k in range(n - 1, 2, -1)]
    return words


def all_generator_neighbors(n: int, i: int) -> list[Word]:
    """Every flip neighbor of ``u_i`` in ``TL_n`` as a word (``i = 0``: identity).

    Built inductively: the catalog of ``u_{i-1}`` in ``TL_{n-1}`` shifted up
    by one, plus the one remaining neighbor.
    """
    if not 0 <= i <= n - 1:
        raise IndexOutOfRange(f"index {i} outside 0..{n - 1}")
    if i == 0:
        return identity_neighbor_words(n)
    if i == 1:
        return [()] if n == 2 else u1_neighbor_words(n)
    shifted = [shift_word(w) for w in all_generator_neighbors(n - 1, i - 1)]
    return shifted + [remaining_generator_neighbor_word(n, i)]


def generator_node(n: int, i: int) -> Triangulation:
    """Triangulation of ``u_i``, or of the identity for ``i = 0``."""
    return word_to_triangulation((), n)[0] if i == 0 else generator_triangulation(n, i)


# -- export and persistence -------------------------------------------------------------


def export_dot(g: FlipGraph, highlight: Iterable[Sequence[int]] | None = None) -> str:
    """Graphviz text; nodes are labeled by their outdegree sequence."""
    marked = {tuple(h) for h in highlight or ()}
    lines = [f"graph flip_graph_{g.n} {{", "  node [shape=box];"]
    for idx, t in enumerate(g.nodes):
        key = node_key(t)
        attrs = f'label="{format_degrees(key)}"'
        if key in marked:
            attrs += ", style=filled, fillcolor=lightblue"
        lines.append(f"  n{idx} [{attrs}];")
    for u, adj in enumerate(g.adjacency):
        for v in adj:
            if u < v:
                lines.append(f"  n{u} -- n{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _table_digest(n: int, keys: list[Key], table: np.ndarray) -> str:
    h = hashlib.sha256()
    h.update(json.dumps({"n": n, "keys": keys}).encode())
    h.update(np.ascontiguousarray(table, dtype=np.int32).tobytes())
    return h.hexdigest()


def save_distance_table(g: FlipGraph, path: str | Path, table: np.ndarray | None = None) -> Path:
    """Write the all-pairs table with node keys and a checksum (``.npz``)."""
    if table is None:
        table = g.distance_table()
    keys = [list(node_key(t)) for t in g.nodes]
    path = Path(path)
    with path.open("wb") as fh:
        np.savez_compressed(
            fh,
            n=np.int32(g.n),
            keys=np.array(keys, dtype=np.int32).reshape(len(keys), g.n),
            table=table.astype(np.int32),
            digest=np.array(_table_digest(g.n, keys, table)),
        )
    return path


def load_distance_table(path: str | Path) -> tuple[int, list[Key], np.ndarray]:
    """Read a table written by :func:`save_distance_table`, verifying the checksum."""
    with np.load(path) as data:
        n = int(data["n"])
        keys = [list(map(int, row)) for row in data["keys"]]
        table = data["table"]
        digest = str(data["digest"])
    if _table_digest(n, keys, table) != digest:
        raise ValueError(f"checksum mismatch in distance table {path}")
    return n, [tuple(k) for k in keys], table
