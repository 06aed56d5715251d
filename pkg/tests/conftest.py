"""Shared builders: the worked examples and random-instance helpers."""

from __future__ import annotations

import random

from limsolve import CoDecomposition, FinFn, FinSetObj, SimpleGraph, SubMask
from limsolve.generate import random_diagram, random_graph, random_tree


def path_example() -> CoDecomposition:
    """Path-shaped diagram {a,b,c} -> {x,y} <- {α,β} -> {u,v} <- {r,s}.

    Exactly two matching families, (c, β, r) and (c, β, s); the image
    subdiagram is {c}, {y}, {β}, {v}, {r,s}.
    """
    return CoDecomposition(
        SimpleGraph(3, [(0, 1), (1, 2)]),
        [FinSetObj(3, ("a", "b", "c")),
         FinSetObj(2, ("α", "β")),
         FinSetObj(2, ("r", "s"))],
        [FinSetObj(2, ("x", "y")), FinSetObj(2, ("u", "v"))],
        [
            (FinFn(3, 2, (0, 0, 1)), FinFn(2, 2, (0, 1))),
            (FinFn(2, 2, (0, 1)), FinFn(2, 2, (1, 1))),
        ],
    )


def c4_example() -> CoDecomposition:
    """Four-cycle diagram with an empty limit: both vertical edges are
    equalities, the top edge pairs a-c and b-d, the bottom pairs a-d and
    b-c, so no global choice exists.

    Vertices 0..3 are the cycle 0-1-2-3-0; sets are {a,b} at 0 and 3,
    {c,d} at 1 and 2.  Edge 0 is the twisted one.
    """
    ab = FinSetObj(2, ("a", "b"))
    cd = FinSetObj(2, ("c", "d"))
    return CoDecomposition(
        SimpleGraph(4, [(0, 1), (1, 2), (2, 3), (0, 3)]),
        [ab, cd, cd, ab],
        [FinSetObj(2, ("3", "4")), cd, FinSetObj(2, ("1", "2")), ab],
        [
            (FinFn(2, 2, (0, 1)), FinFn(2, 2, (1, 0))),
            (FinFn.identity(2), FinFn.identity(2)),
            (FinFn(2, 2, (0, 1)), FinFn(2, 2, (0, 1))),
            (FinFn.identity(2), FinFn.identity(2)),
        ],
    )


def c4_untwisted_example() -> CoDecomposition:
    """The same shape with the bottom leg at vertex 1 straightened
    (c -> 3, d -> 4): matching families exist."""
    d = c4_example()
    legs = list(d.legs)
    legs[0] = (legs[0][0], FinFn(2, 2, (0, 1)))
    return CoDecomposition(d.shape, d.vertex_obj, d.edge_obj, legs)


def cospan_example() -> CoDecomposition:
    """1 -> {a,b} <- 1 hitting distinct elements: empty limit."""
    return CoDecomposition(
        SimpleGraph(2, [(0, 1)]),
        [FinSetObj(1), FinSetObj(1)],
        [FinSetObj(2, ("a", "b"))],
        [(FinFn(1, 2, (0,)), FinFn(1, 2, (1,)))],
    )


def edgeless_diagram(sizes) -> CoDecomposition:
    return CoDecomposition(
        SimpleGraph(len(sizes), []),
        [FinSetObj(s) for s in sizes],
        [],
        [],
    )


def random_tree_diagram(seed: int, n_max: int = 10, w: int = 4) -> CoDecomposition:
    rng = random.Random(seed)
    n = rng.randint(1, n_max)
    return random_diagram(rng, random_tree(rng, n), w)


def random_graph_diagram(seed: int, n_max: int = 8, w: int = 3,
                         p: float = 0.3) -> CoDecomposition:
    rng = random.Random(seed)
    n = rng.randint(1, n_max)
    return random_diagram(rng, random_graph(rng, n, p), w)


def random_closed_mask(rng: random.Random, d: CoDecomposition) -> SubMask:
    """Random leg-closed submask: vertex masks narrowed at random, edge
    masks left full."""
    m = d.full_mask()
    for x, obj in enumerate(d.vertex_obj):
        m.vertex[x] = rng.getrandbits(obj.size) if obj.size else 0
    return m


def diagrams_equal(d1: CoDecomposition, d2: CoDecomposition) -> bool:
    """Structural equality: same shape, set sizes, and leg tables."""
    if d1.shape != d2.shape:
        return False
    if [o.size for o in d1.vertex_obj] != [o.size for o in d2.vertex_obj]:
        return False
    if [o.size for o in d1.edge_obj] != [o.size for o in d2.edge_obj]:
        return False
    return all(
        a.table == b.table and c.table == e.table
        for (a, c), (b, e) in zip(d1.legs, d2.legs)
    )
