"""Brute-force ground truth by depth-first enumeration of closed walks.

Nothing here touches an adjacency matrix: successors are derived directly from
the edge endpoints, so these counts are an independent check on the
trace-based census.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterator

from .errors import ConsistencyError, PreconditionError
from .graph import MultiGraph, symmetrize

DEFAULT_ORACLE_CAP = 10**7

Walk = tuple[int, ...]


class OracleCapExceeded(PreconditionError):
    pass


class _Walker:
    """Oriented edges of a graph together with their allowed successors."""

    def __init__(self, g: MultiGraph):
        self.graph = g
        if g.directed:
            self.origins = [u for u, _ in g.edges]
            self.ends = [v for _, v in g.edges]
            self.inverse = None
        else:
            space = symmetrize(g)
            self.origins = list(space.origins)
            self.ends = list(space.ends)
            self.inverse = [space.inverse(i) for i in range(space.size)]
        n = len(self.origins)
        self.labels = [i % g.edge_count for i in range(n)] if n else []
        self.succ: list[list[int]] = []
        for i in range(n):
            back = self.inverse[i] if self.inverse else None
            self.succ.append(
                [j for j in range(n) if self.origins[j] == self.ends[i] and j != back]
            )

    def partial_walks(self, N: int) -> int:
        """Exact number of DFS nodes visited when enumerating length-N walks."""
        counts = [1] * len(self.succ)
        total = sum(counts)
        for _ in range(N - 1):
            nxt = [0] * len(self.succ)
            for i, c in enumerate(counts):
                for j in self.succ[i]:
                    nxt[j] += c
            counts = nxt
            total += sum(counts)
        return total

    def closed_walks(self, N: int, cap: int) -> Iterator[Walk]:
        if N < 1:
            raise PreconditionError("walk length must be >= 1")
        cost = self.partial_walks(N)
        if cost > cap:
            raise OracleCapExceeded(
                f"enumerating length-{N} walks needs {cost} steps, above the cap {cap}"
            )
        succ = self.succ
        for start in range(len(succ)):
            closing = set(j for j in range(len(succ)) if start in succ[j])
            walk = [start]
            # iterative DFS over successor indices
            stack = [iter(succ[start])]
            if N == 1:
                if start in closing:
                    yield (start,)
                continue
            while stack:
                nxt = next(stack[-1], None)
                if nxt is None:
                    stack.pop()
                    walk.pop()
                    continue
                walk.append(nxt)
                if len(walk) == N:
                    if nxt in closing:
                        yield tuple(walk)
                    walk.pop()
                else:
                    stack.append(iter(succ[nxt]))

    def covers(self, walk: Walk) -> bool:
        return len({self.labels[e] for e in walk}) == self.graph.edge_count

    def reverse(self, walk: Walk) -> Walk:
        if self.inverse is None:
            raise PreconditionError("directed walks have no inverse")
        return tuple(self.inverse[e] for e in reversed(walk))


def canonical_rotation(walk: Walk) -> Walk:
    return min(walk[k:] + walk[:k] for k in range(len(walk)))


def primitive_period(walk: Walk) -> int:
    """Smallest shift ``p >= 1`` with ``rotate(walk, p) == walk``; ``p < len`` means periodic."""
    n = len(walk)
    for p in range(1, n + 1):
        if n % p == 0 and walk[p:] + walk[:p] == walk:
            return p
    return n


def count_closed_walks(g: MultiGraph, N: int, cap: int = DEFAULT_ORACLE_CAP) -> int:
    return sum(1 for _ in _Walker(g).closed_walks(N, cap))


def count_covering_walks(g: MultiGraph, N: int, cap: int = DEFAULT_ORACLE_CAP) -> int:
    w = _Walker(g)
    return sum(1 for walk in w.closed_walks(N, cap) if w.covers(walk))


def covering_classes(g: MultiGraph, N: int, cap: int = DEFAULT_ORACLE_CAP) -> Counter[Walk]:
    """Covering walks grouped by rotation: canonical representative -> class size."""
    w = _Walker(g)
    return Counter(canonical_rotation(walk) for walk in w.closed_walks(N, cap) if w.covers(walk))


def count_nonperiodic_classes(g: MultiGraph, N: int, cap: int = DEFAULT_ORACLE_CAP) -> int:
    return sum(1 for rep in covering_classes(g, N, cap) if primitive_period(rep) == N)


def self_inverse_classes(g: MultiGraph, N: int, cap: int = DEFAULT_ORACLE_CAP) -> list[Walk]:
    """Covering classes that contain their own reversal."""
    if g.directed:
        raise PreconditionError("only undirected walks have inverses")
    w = _Walker(g)
    classes = covering_classes(g, N, cap)
    return [rep for rep in classes if canonical_rotation(w.reverse(rep)) == rep]


def count_euler_classes(g: MultiGraph, cap: int = DEFAULT_ORACLE_CAP) -> int:
    """Nonperiodic covering classes of length |E|, reversal pairs merged."""
    if g.directed:
        raise PreconditionError("count_euler_classes expects an undirected graph")
    E = g.edge_count
    if E == 0:
        raise PreconditionError("graph has no edges")
    w = _Walker(g)
    reps = [r for r in covering_classes(g, E, cap) if primitive_period(r) == E]
    for rep in reps:
        if canonical_rotation(w.reverse(rep)) == rep:
            raise ConsistencyError(f"Euler class {rep} equals its own reversal")
    if len(reps) % 2:
        raise ConsistencyError(f"odd number of Euler classes ({len(reps)})")
    return len(reps) // 2


def count_hamiltonian_classes(g: MultiGraph, cap: int = DEFAULT_ORACLE_CAP) -> int:
    """Directed cycles through every vertex exactly once, up to rotation."""
    if not g.directed:
        raise PreconditionError("count_hamiltonian_classes expects a directed graph")
    V = g.vertex_count
    if V == 0:
        raise PreconditionError("graph has no vertices")
    w = _Walker(g)
    reps = set()
    for walk in w.closed_walks(V, cap):
        if len({w.origins[e] for e in walk}) == V:
            reps.add(canonical_rotation(walk))
    return len(reps)
