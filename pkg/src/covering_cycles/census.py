"""Counting covering cycles by inclusion-exclusion over edge-deleted subgraphs.

``omega(N)`` counts closed non-backtracking tail-less walks of length N with a
marked starting edge that use every edge at least once.  It is the
alternating sum, over every subset of deleted edges, of ``Tr T^N`` for the
remaining subgraph.  ``theta(N)`` counts rotation classes of the nonperiodic
ones and is recovered from ``omega`` by Moebius inversion.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from .algebra import IntMatrix, trace_powers
from .errors import ConsistencyError, PreconditionError
from .graph import (
    DEFAULT_SUBSET_LIMIT,
    MultiGraph,
    delete_edges,
    directed_edge_matrix,
    directed_vertex_matrix,
    edge_adjacency_matrix,
    induced_subgraph,
    is_connected,
    prune_leaves,
    symmetrize,
)

log = logging.getLogger(__name__)


def mobius(n: int) -> int:
    if n < 1:
        raise PreconditionError("mobius is defined for n >= 1")
    result, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    return -result if n > 1 else result


def divisors(n: int) -> list[int]:
    small = [d for d in range(1, int(n**0.5) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def _check_length(N: int) -> None:
    if N < 1:
        raise PreconditionError(f"cycle length must be >= 1, got {N}")


def _check_graph(g: MultiGraph, directed: bool, subset_limit: int) -> None:
    if g.directed != directed:
        kind = "directed" if directed else "undirected"
        raise PreconditionError(f"expected a {kind} graph")
    if g.edge_count > subset_limit:
        raise PreconditionError(
            f"graph has {g.edge_count} edges, above the subset limit {subset_limit} "
            f"(inclusion-exclusion visits 2^|E| subgraphs)"
        )
    if not is_connected(g, ignore_isolated=True):
        raise PreconditionError("graph is not connected")


def _undirected_matrix(sub: MultiGraph, prune: bool) -> IntMatrix:
    if prune:
        sub = prune_leaves(sub)
    return edge_adjacency_matrix(symmetrize(sub))


def _alternating_trace_sums(
    g: MultiGraph, up_to: int, matrix: Callable[[MultiGraph], IntMatrix]
) -> list[int]:
    totals = [0] * up_to
    for mask in range(1 << g.edge_count):
        sub = delete_edges(g, mask)
        if not sub.edges:
            continue  # the empty graph contributes trace 0
        m = matrix(sub)
        if m.n == 0:
            continue
        sign = -1 if bin(mask).count("1") % 2 else 1
        for k, t in enumerate(trace_powers(m, up_to)):
            totals[k] += sign * t
    return totals


def omega_sequence(
    g: MultiGraph, up_to: int, *, prune: bool = True, subset_limit: int = DEFAULT_SUBSET_LIMIT
) -> list[int]:
    """``[omega(1), ..., omega(up_to)]`` for an undirected graph.

    ``prune`` leaf-prunes each subgraph before its edge matrix is built; it
    only saves work, the traces are identical.
    """
    _check_graph(g, False, subset_limit)
    return _alternating_trace_sums(g, up_to, lambda sub: _undirected_matrix(sub, prune))


def omega(g: MultiGraph, N: int, **kw) -> int:
    _check_length(N)
    return omega_sequence(g, N, **kw)[-1]


def omega_directed_sequence(
    g: MultiGraph, up_to: int, *, subset_limit: int = DEFAULT_SUBSET_LIMIT
) -> list[int]:
    _check_graph(g, True, subset_limit)
    return _alternating_trace_sums(g, up_to, directed_edge_matrix)


def omega_directed(g: MultiGraph, N: int, **kw) -> int:
    _check_length(N)
    return omega_directed_sequence(g, N, **kw)[-1]


def theta_from_omega(omegas: dict[int, int] | list[int], N: int) -> int:
    """Moebius inversion ``theta(N) = (1/N) sum_{d|N} mu(d) omega(N/d)``.

    ``omegas`` is a dict keyed by length or a list holding omega(1) first.
    """
    _check_length(N)
    get = omegas.__getitem__ if isinstance(omegas, dict) else (lambda k: omegas[k - 1])
    total = sum(mobius(d) * get(N // d) for d in divisors(N))
    if total % N:
        raise ConsistencyError(f"Moebius sum {total} at N={N} is not divisible by N")
    return total // N


def theta(g: MultiGraph, N: int, **kw) -> int:
    _check_length(N)
    return theta_from_omega(omega_sequence(g, N, **kw), N)


def theta_directed(g: MultiGraph, N: int, **kw) -> int:
    _check_length(N)
    return theta_from_omega(omega_directed_sequence(g, N, **kw), N)


def euler_count(g: MultiGraph, **kw) -> int:
    """Euler cycles up to rotation and reversal: ``omega(|E|) / (2|E|)``."""
    if g.directed:
        raise PreconditionError("euler_count expects an undirected graph")
    E = g.edge_count
    if E == 0:
        raise PreconditionError("graph has no edges")
    if any(d % 2 for d in g.degrees()):
        _check_graph(g, False, kw.get("subset_limit", DEFAULT_SUBSET_LIMIT))
        return 0
    w = omega(g, E, **kw)
    if w % (2 * E):
        raise ConsistencyError(f"omega(|E|) = {w} is not divisible by 2|E| = {2 * E}")
    return w // (2 * E)


@dataclass(frozen=True)
class HamiltonianReport:
    """Directed Hamiltonian cycles counted two ways.

    ``classes`` is the number of rotation classes of Hamiltonian cycles (the
    true count).  ``halved`` is that value divided by two, as a fraction; it
    coincides with ``classes`` only when both are zero, so ``discrepancy``
    flags every nonempty case.
    """

    marked_walks: int
    classes: int
    halved: Fraction

    @property
    def discrepancy(self) -> bool:
        return self.halved != self.classes


def hamiltonian_count(g: MultiGraph, *, subset_limit: int = DEFAULT_SUBSET_LIMIT) -> HamiltonianReport:
    """Inclusion-exclusion over deleted vertices with the vertex matrix.

    Closed walks of length |V| that touch every vertex visit each exactly once.
    """
    if not g.directed:
        raise PreconditionError("hamiltonian_count expects a directed graph")
    V = g.vertex_count
    if V == 0:
        raise PreconditionError("graph has no vertices")
    if V > subset_limit:
        raise PreconditionError(f"{V} vertices exceed the subset limit {subset_limit}")
    if not is_connected(g):
        raise PreconditionError("graph is not connected")
    walks = 0
    for mask in range(1 << V):
        sub = induced_subgraph(g, mask)
        if sub.vertex_count == 0:
            continue
        sign = -1 if bin(mask).count("1") % 2 else 1
        walks += sign * trace_powers(directed_vertex_matrix(sub), V)[-1]
    if walks % V:
        raise ConsistencyError(f"{walks} Hamiltonian walks not divisible by |V| = {V}")
    classes = walks // V
    return HamiltonianReport(walks, classes, Fraction(classes, 2))


@dataclass
class CensusTable:
    """omega and theta for lengths ``1..max_length`` of one graph."""

    graph_digest: str
    edge_count: int
    directed: bool
    omega: dict[int, int] = field(default_factory=dict)
    theta: dict[int, int] = field(default_factory=dict)

    @property
    def max_length(self) -> int:
        return max(self.omega, default=0)

    def power_sum_holds(self, N: int) -> bool:
        """``omega(N) = sum_{d|N} d * theta(d)``."""
        return self.omega[N] == sum(d * self.theta[d] for d in divisors(N))


def census_table(
    g: MultiGraph,
    up_to: int,
    *,
    prune: bool = True,
    subset_limit: int = DEFAULT_SUBSET_LIMIT,
) -> CensusTable:
    if up_to < 1:
        raise PreconditionError("census needs at least length 1")
    if g.directed:
        seq = omega_directed_sequence(g, up_to, subset_limit=subset_limit)
    else:
        seq = omega_sequence(g, up_to, prune=prune, subset_limit=subset_limit)
    table = CensusTable(g.digest(), g.edge_count, g.directed)
    for N, w in enumerate(seq, 1):
        table.omega[N] = w
    for N in table.omega:
        table.theta[N] = theta_from_omega(seq, N)
    return table


def prepare(g: MultiGraph) -> tuple[MultiGraph, bool]:
    """Leaf-prune an undirected input once, returning the graph and whether it changed.

    Counting on the unpruned graph is still valid but gives omega = 0
    everywhere, since a covering walk would have to enter and leave a leaf.
    """
    if g.directed:
        return g, False
    pruned = prune_leaves(g)
    changed = pruned.edge_count != g.edge_count
    if changed:
        log.warning(
            "removed %d edge(s) at degree-1 vertices; counting on the remaining %d",
            g.edge_count - pruned.edge_count,
            pruned.edge_count,
        )
    return pruned, changed


def iter_lengths(spec: str) -> Iterable[int]:
    """Parse ``"5"`` or ``"2..10"``."""
    lo, sep, hi = spec.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise PreconditionError(f"bad length range '{spec}'") from None
    if a < 1 or b < a:
        raise PreconditionError(f"length range '{spec}' must satisfy 1 <= lo <= hi")
    return range(a, b + 1)
