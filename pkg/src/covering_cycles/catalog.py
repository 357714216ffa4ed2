"""Named example graphs and a seeded random multigraph generator."""

from __future__ import annotations

import random

from .errors import PreconditionError
from .graph import MultiGraph, is_connected


def rose(R: int) -> MultiGraph:
    """R loops at a single vertex."""
    return MultiGraph(1, ((0, 0),) * R)


def theta() -> MultiGraph:
    """Two vertices joined by three parallel edges, all oriented 0 -> 1."""
    return MultiGraph(2, ((0, 1),) * 3)


def bond(k: int) -> MultiGraph:
    """Two vertices joined by k parallel edges."""
    return MultiGraph(2, ((0, 1),) * k)


def cycle(n: int) -> MultiGraph:
    return MultiGraph(n, tuple((i, (i + 1) % n) for i in range(n)))


def directed_cycle(n: int) -> MultiGraph:
    return MultiGraph(n, tuple((i, (i + 1) % n) for i in range(n)), directed=True)


def complete_digraph(n: int) -> MultiGraph:
    return MultiGraph(n, tuple((i, j) for i in range(n) for j in range(n) if i != j), directed=True)


def path(n: int) -> MultiGraph:
    return MultiGraph(n, tuple((i, i + 1) for i in range(n - 1)))


def builtin(spec: str) -> MultiGraph:
    """``rose:R``, ``theta``, ``cycle:n``, ``dircycle:n``."""
    name, _, arg = spec.partition(":")
    makers = {"rose": rose, "cycle": cycle, "dircycle": directed_cycle}
    if name == "theta" and not arg:
        return theta()
    if name in makers and arg:
        try:
            n = int(arg)
        except ValueError:
            raise PreconditionError(f"builtin '{spec}': '{arg}' is not an integer") from None
        if n < 1:
            raise PreconditionError(f"builtin '{spec}' needs a positive size")
        return makers[name](n)
    raise PreconditionError(
        f"unknown builtin '{spec}' (expected rose:R, theta, cycle:n or dircycle:n)"
    )


def small_undirected() -> dict[str, MultiGraph]:
    """Connected multigraphs with at most five edges and small branching.

    Small enough that walk enumeration up to length 8 stays cheap.  Includes
    graphs with leaves, for which no covering cycle exists.
    """
    return {
        "rose1": rose(1),
        "rose2": rose(2),
        "rose3": rose(3),
        "digon": bond(2),
        "theta": theta(),
        "bond4": bond(4),
        "bond5": bond(5),
        "C3": cycle(3),
        "C4": cycle(4),
        "C5": cycle(5),
        "dumbbell": MultiGraph(2, ((0, 0), (0, 1), (1, 1))),
        "lollipop": MultiGraph(2, ((0, 0), (0, 1))),
        "C3_loop": MultiGraph(3, ((0, 1), (1, 2), (2, 0), (0, 0))),
        "digon_loop": MultiGraph(2, ((0, 1), (1, 0), (1, 1))),
        "diamond": MultiGraph(4, ((0, 1), (1, 2), (2, 3), (3, 0), (0, 2))),
        "fat_triangle": MultiGraph(3, ((0, 1), (0, 1), (1, 2), (2, 0))),
        "subdivided_theta": MultiGraph(3, ((0, 1), (0, 1), (0, 2), (2, 1))),
        "handcuff": MultiGraph(3, ((0, 0), (0, 1), (1, 2), (2, 1))),
        "rose2_tail_loop": MultiGraph(2, ((0, 0), (0, 0), (0, 1), (1, 1))),
        "C4_pendant": MultiGraph(5, ((0, 1), (1, 2), (2, 3), (3, 0), (0, 4))),
        "P3": path(3),
        "single_edge": path(2),
        "K4_minus_edge_loop": MultiGraph(3, ((0, 1), (1, 2), (2, 0), (1, 1), (2, 2))),
    }


def small_directed() -> dict[str, MultiGraph]:
    return {
        "dircycle2": directed_cycle(2),
        "dircycle3": directed_cycle(3),
        "dircycle4": directed_cycle(4),
        "two_loops": MultiGraph(1, ((0, 0), (0, 0)), directed=True),
        "K3_directed": complete_digraph(3),
        "double_digon": MultiGraph(2, ((0, 1), (0, 1), (1, 0), (1, 0)), directed=True),
        "cycle_with_loop": MultiGraph(3, ((0, 1), (1, 2), (2, 0), (1, 1)), directed=True),
        "two_triangles": MultiGraph(
            5, ((0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)), directed=True
        ),
    }


def random_multigraph(
    rng: random.Random,
    max_edges: int,
    max_vertices: int = 4,
    *,
    min_edges: int = 1,
    loop_prob: float = 0.2,
    min_degree: int = 2,
    max_degree: int | None = None,
) -> MultiGraph:
    """A connected undirected multigraph with every degree at least ``min_degree``.

    Rejection sampling; loops and parallel edges occur naturally.
    """
    if not 1 <= min_edges <= max_edges:
        raise PreconditionError("need 1 <= min_edges <= max_edges")
    while True:
        n = rng.randint(1, max_vertices)
        E = rng.randint(min_edges, max_edges)
        edges = []
        for _ in range(E):
            u = rng.randrange(n)
            v = u if n == 1 or rng.random() < loop_prob else rng.randrange(n)
            edges.append((u, v))
        g = MultiGraph(n, tuple(edges))
        deg = g.degrees()
        if not is_connected(g) or min(deg) < min_degree:
            continue
        if max_degree is not None and max(deg) > max_degree:
            continue
        return g
