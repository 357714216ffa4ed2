"""Multigraphs with loops and parallel edges, and their adjacency matrices.

Undirected edges are oriented in input order.  The symmetrized edge space
holds the ``2|E|`` oriented edges: index ``i < |E|`` is edge ``i`` as given,
index ``i + |E|`` is its reverse.  A loop's reverse is a second oriented loop
at the same vertex.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from typing import Iterable, Sequence

from .algebra import IntMatrix
from .errors import GraphFormatError, PreconditionError

DEFAULT_SUBSET_LIMIT = 20

# A set of undirected edge labels, bit i set <=> edge i is selected.
EdgeSubset = int


@dataclass(frozen=True)
class MultiGraph:
    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    directed: bool = False

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise PreconditionError("vertex_count must be nonnegative")
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        for u, v in edges:
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise PreconditionError(
                    f"edge ({u}, {v}) has an endpoint outside 0..{self.vertex_count - 1}"
                )
        object.__setattr__(self, "edges", edges)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degrees(self) -> list[int]:
        """Undirected degrees; a loop adds 2 to its vertex."""
        deg = [0] * self.vertex_count
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def flipped(self, mask: EdgeSubset) -> "MultiGraph":
        """Reverse the stored orientation of every edge selected by ``mask``."""
        edges = tuple(
            (v, u) if mask >> i & 1 else (u, v) for i, (u, v) in enumerate(self.edges)
        )
        return MultiGraph(self.vertex_count, edges, self.directed)

    def relabeled(self, order: Sequence[int]) -> "MultiGraph":
        """Same graph with the edge list permuted: new edge ``k`` is old edge ``order[k]``."""
        return MultiGraph(self.vertex_count, tuple(self.edges[i] for i in order), self.directed)

    def digest(self) -> str:
        return hashlib.sha256(format_graph(self).encode()).hexdigest()


@dataclass(frozen=True)
class DirectedEdgeSpace:
    """The oriented edges of a symmetrized undirected graph."""

    origins: tuple[int, ...]
    ends: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.origins)

    @property
    def edge_count(self) -> int:
        return len(self.origins) // 2

    def inverse(self, i: int) -> int:
        return (i + self.edge_count) % self.size

    def origin(self, i: int) -> int:
        return self.origins[i]

    def end(self, i: int) -> int:
        return self.ends[i]

    def undirected_label(self, i: int) -> int:
        return i % self.edge_count


def symmetrize(g: MultiGraph) -> DirectedEdgeSpace:
    if g.directed:
        raise PreconditionError("symmetrize expects an undirected graph")
    origins = [u for u, _ in g.edges] + [v for _, v in g.edges]
    ends = [v for _, v in g.edges] + [u for u, _ in g.edges]
    return DirectedEdgeSpace(tuple(origins), tuple(ends))


def edge_adjacency_matrix(space: DirectedEdgeSpace) -> IntMatrix:
    """Non-backtracking edge matrix: ``T[i][j] = 1`` iff j continues i and j is not i reversed."""
    n = space.size
    leaving: dict[int, list[int]] = {}
    for j in range(n):
        leaving.setdefault(space.origins[j], []).append(j)
    rows = []
    for i in range(n):
        row = [0] * n
        back = space.inverse(i)
        for j in leaving.get(space.ends[i], ()):
            if j != back:
                row[j] = 1
        rows.append(row)
    return IntMatrix(rows)


def _require_directed(g: MultiGraph, what: str) -> None:
    if not g.directed:
        raise PreconditionError(f"{what} expects a directed graph")


def directed_edge_matrix(g: MultiGraph) -> IntMatrix:
    _require_directed(g, "directed_edge_matrix")
    return IntMatrix(
        [[int(v == x) for x, _ in g.edges] for _, v in g.edges]
    )


def directed_vertex_matrix(g: MultiGraph) -> IntMatrix:
    _require_directed(g, "directed_vertex_matrix")
    rows = [[0] * g.vertex_count for _ in range(g.vertex_count)]
    for u, v in g.edges:
        rows[u][v] += 1
    return IntMatrix(rows)


def delete_edges(g: MultiGraph, s: EdgeSubset) -> MultiGraph:
    """Drop the edges selected by ``s``.  Vertices stay; surviving edges keep their order."""
    if s < 0 or s >> g.edge_count:
        raise PreconditionError(f"edge subset {s:#x} out of range for {g.edge_count} edges")
    kept = tuple(e for i, e in enumerate(g.edges) if not s >> i & 1)
    return MultiGraph(g.vertex_count, kept, g.directed)


def induced_subgraph(g: MultiGraph, removed_vertices: EdgeSubset) -> MultiGraph:
    """Delete the vertices in the bitmask together with their edges, then renumber."""
    keep = [v for v in range(g.vertex_count) if not removed_vertices >> v & 1]
    index = {v: k for k, v in enumerate(keep)}
    edges = tuple((index[u], index[v]) for u, v in g.edges if u in index and v in index)
    return MultiGraph(len(keep), edges, g.directed)


def leaf_edges(g: MultiGraph) -> EdgeSubset:
    """Bitmask of edges removed by iterated leaf pruning."""
    if g.directed:
        raise PreconditionError("leaf pruning is defined for undirected graphs")
    deg = g.degrees()
    incident: list[list[int]] = [[] for _ in range(g.vertex_count)]
    for i, (u, v) in enumerate(g.edges):
        incident[u].append(i)
        if v != u:
            incident[v].append(i)
    removed = 0
    stack = [v for v in range(g.vertex_count) if deg[v] == 1]
    while stack:
        v = stack.pop()
        if deg[v] != 1:
            continue
        # degree 1 means exactly one live non-loop edge
        i = next(i for i in incident[v] if not removed >> i & 1)
        removed |= 1 << i
        u, w = g.edges[i]
        other = w if u == v else u
        deg[v] -= 1
        deg[other] -= 1
        if deg[other] == 1:
            stack.append(other)
    return removed


def prune_leaves(g: MultiGraph) -> MultiGraph:
    """Iteratively remove edges at degree-1 vertices.

    No closed non-backtracking walk can use such an edge, so every trace of
    the edge matrix is unchanged.
    """
    return delete_edges(g, leaf_edges(g))


def _components(vertex_count: int, edges: Iterable[tuple[int, int]]) -> list[int]:
    parent = list(range(vertex_count))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    return [find(v) for v in range(vertex_count)]


def is_connected(g: MultiGraph, ignore_isolated: bool = False) -> bool:
    """Weak connectivity.  With ``ignore_isolated`` only vertices carrying edges must connect."""
    roots = _components(g.vertex_count, g.edges)
    if ignore_isolated:
        touched = {u for e in g.edges for u in e}
        return len({roots[v] for v in touched}) <= 1
    return len(set(roots)) <= 1


def is_bipartite(g: MultiGraph) -> bool:
    color = [-1] * g.vertex_count
    adj: list[list[int]] = [[] for _ in range(g.vertex_count)]
    for u, v in g.edges:
        if u == v:
            return False
        adj[u].append(v)
        adj[v].append(u)
    for s in range(g.vertex_count):
        if color[s] >= 0:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    stack.append(w)
                elif color[w] == color[u]:
                    return False
    return True


def parse_graph(text: str) -> MultiGraph:
    """Read the line-oriented graph format (``directed``, ``vertices``, then ``edge u v`` lines)."""
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((lineno, line.split()))
    if len(lines) < 2:
        raise GraphFormatError("expected 'directed' and 'vertices' header lines")

    def header(entry: tuple[int, list[str]], key: str) -> int:
        lineno, toks = entry
        if len(toks) != 2 or toks[0] != key:
            raise GraphFormatError(f"line {lineno}: expected '{key} <int>'")
        try:
            return int(toks[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: '{toks[1]}' is not an integer") from None

    directed = header(lines[0], "directed")
    if directed not in (0, 1):
        raise GraphFormatError(f"line {lines[0][0]}: directed flag must be 0 or 1")
    n = header(lines[1], "vertices")
    if n < 0:
        raise GraphFormatError(f"line {lines[1][0]}: negative vertex count")
    edges = []
    for lineno, toks in lines[2:]:
        if len(toks) != 3 or toks[0] != "edge":
            raise GraphFormatError(f"line {lineno}: expected 'edge <u> <v>'")
        try:
            u, v = int(toks[1]), int(toks[2])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: vertex indices must be integers") from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"line {lineno}: vertex index out of range 0..{n - 1}")
        edges.append((u, v))
    return MultiGraph(n, tuple(edges), bool(directed))


def format_graph(g: MultiGraph) -> str:
    out = [f"directed {int(g.directed)}", f"vertices {g.vertex_count}"]
    out += [f"edge {u} {v}" for u, v in g.edges]
    return "\n".join(out) + "\n"
