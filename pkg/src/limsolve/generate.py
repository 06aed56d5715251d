"""Seeded random shapes, diagrams, C-set diagrams, and bag decompositions.

Everything is driven by an explicit random.Random so that a seed pins the
instance byte for byte.
"""

from __future__ import annotations

import random

from .cset import CSet, CSetCoDecomposition, FinCat
from .diagram import CoDecomposition
from .finset import FinFn, FinSetObj
from .graphs import SimpleGraph
from .hom import BagDecomposition


def path_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> SimpleGraph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return SimpleGraph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def petersen_graph() -> SimpleGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return SimpleGraph(10, outer + spokes + inner)


def random_tree(rng: random.Random, n: int) -> SimpleGraph:
    return SimpleGraph(n, [(rng.randrange(i), i) for i in range(1, n)])


def random_graph(rng: random.Random, n: int, p: float) -> SimpleGraph:
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)
             if rng.random() < p]
    return SimpleGraph(n, edges)


def random_diagram(
    rng: random.Random,
    shape: SimpleGraph,
    w: int,
    fixed_size: bool = False,
) -> CoDecomposition:
    """Random diagram over the shape: set sizes uniform in 1..w (or exactly
    w when fixed_size), leg tables uniform over their targets."""
    if w < 1:
        raise ValueError("w must be >= 1")
    size = (lambda: w) if fixed_size else (lambda: rng.randint(1, w))
    vertex_obj = [FinSetObj(size()) for _ in range(shape.n)]
    edge_obj = [FinSetObj(size()) for _ in range(shape.m)]
    legs = []
    for e, (u, v) in enumerate(shape.edges):
        te = edge_obj[e].size
        legs.append((
            FinFn(vertex_obj[u].size, te,
                  tuple(rng.randrange(te) for _ in range(vertex_obj[u].size))),
            FinFn(vertex_obj[v].size, te,
                  tuple(rng.randrange(te) for _ in range(vertex_obj[v].size))),
        ))
    return CoDecomposition(shape, vertex_obj, edge_obj, legs)


def generate_instance(kind: str, n: int, w: int, seed: int,
                      p: float = 0.3, fixed_size: bool = False) -> CoDecomposition:
    rng = random.Random(seed)
    if kind == "path":
        shape = path_graph(n)
    elif kind == "cycle":
        shape = cycle_graph(n)
    elif kind == "tree":
        shape = random_tree(rng, n)
    elif kind == "random":
        shape = random_graph(rng, n, p)
    else:
        raise ValueError(f"unknown instance kind '{kind}'")
    return random_diagram(rng, shape, w, fixed_size=fixed_size)


def random_walking_arrow_diagram(
    rng: random.Random, shape: SimpleGraph, w: int
) -> CSetCoDecomposition:
    """Random diagram of C-sets over the walking arrow (objects 0 -> 1).

    The vertex C-sets get injective arrow actions so that natural legs can
    always be completed: the leg component at object 1 is forced on the
    action's image and free elsewhere.
    """
    cat = FinCat.walking_arrow()

    def random_vertex_cset() -> CSet:
        s0 = rng.randint(1, w)
        s1 = rng.randint(s0, w)
        obj0, obj1 = FinSetObj(s0), FinSetObj(s1)
        targets = rng.sample(range(s1), s0)
        arrow = FinFn(s0, s1, tuple(targets))
        return CSet((obj0, obj1),
                    (FinFn.identity(s0), FinFn.identity(s1), arrow))

    def random_edge_cset() -> CSet:
        s0 = rng.randint(1, w)
        s1 = rng.randint(1, w)
        obj0, obj1 = FinSetObj(s0), FinSetObj(s1)
        arrow = FinFn(s0, s1, tuple(rng.randrange(s1) for _ in range(s0)))
        return CSet((obj0, obj1),
                    (FinFn.identity(s0), FinFn.identity(s1), arrow))

    vertex_cs = [random_vertex_cset() for _ in range(shape.n)]
    edge_cs = [random_edge_cset() for _ in range(shape.m)]

    def random_leg(xs: CSet, es: CSet) -> tuple[FinFn, FinFn]:
        x0, x1 = xs.objects[0].size, xs.objects[1].size
        e0, e1 = es.objects[0].size, es.objects[1].size
        leg0 = FinFn(x0, e0, tuple(rng.randrange(e0) for _ in range(x0)))
        # naturality forces the object-1 component on the arrow's image
        forced: dict[int, int] = {}
        for a in range(x0):
            forced[xs.actions[2].table[a]] = es.actions[2].table[leg0.table[a]]
        table = tuple(
            forced.get(b, rng.randrange(e1)) for b in range(x1))
        return leg0, FinFn(x1, e1, table)

    legs = []
    for e, (u, v) in enumerate(shape.edges):
        legs.append((random_leg(vertex_cs[u], edge_cs[e]),
                     random_leg(vertex_cs[v], edge_cs[e])))
    return CSetCoDecomposition(cat, shape, vertex_cs, edge_cs, legs)


def lift_to_terminal_cset(d: CoDecomposition) -> CSetCoDecomposition:
    """Wrap a plain diagram as a diagram of C-sets over the one-object,
    one-morphism category."""
    cat = FinCat.terminal()

    def wrap(obj: FinSetObj) -> CSet:
        return CSet((obj,), (FinFn.identity(obj.size),))

    return CSetCoDecomposition(
        cat,
        d.shape,
        [wrap(o) for o in d.vertex_obj],
        [wrap(o) for o in d.edge_obj],
        [((fu,), (fv,)) for fu, fv in d.legs],
    )


def elimination_decomposition(rng: random.Random, x: SimpleGraph) -> BagDecomposition:
    """Tree (forest) decomposition of x from a min-degree elimination order
    with seeded tie-breaking; bags are {v} union its not-yet-eliminated
    neighbors in the fill graph."""
    adj = [set() for _ in range(x.n)]
    for u, v in x.edges:
        adj[u].add(v)
        adj[v].add(u)
    alive = set(range(x.n))
    order: list[int] = []
    elim_index: dict[int, int] = {}
    bags: list[tuple[int, ...]] = []
    while alive:
        dmin = min(len(adj[v] & alive) for v in alive)
        candidates = sorted(v for v in alive
                            if len(adj[v] & alive) == dmin)
        v = candidates[rng.randrange(len(candidates))]
        rest = sorted(adj[v] & alive)
        bags.append(tuple([v] + rest))
        for a in rest:
            for b in rest:
                if a < b:
                    adj[a].add(b)
                    adj[b].add(a)
        elim_index[v] = len(order)
        order.append(v)
        alive.remove(v)
    edges = []
    for i, bag in enumerate(bags):
        rest = [u for u in bag if u != order[i]]
        if rest:
            parent = min(elim_index[u] for u in rest)
            edges.append((i, parent))
    shape = SimpleGraph(len(bags), edges)
    return BagDecomposition(x, shape, tuple(bags))
