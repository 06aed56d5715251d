"""Brute-force reference implementations used to certify the solver.

These stay deliberately independent of the mask/filter machinery: they
enumerate matching families straight from the leg tables.
"""

from __future__ import annotations

from .diagram import CoDecomposition, SubMask
from .graphs import components, is_forest
from .solver import Witness

CAP_DEFAULT = 10_000_000


class CapExceeded(RuntimeError):
    """The instance is too large for brute-force enumeration."""


def _product_guard(d: CoDecomposition, cap: int) -> None:
    prod = 1
    for obj in d.vertex_obj:
        prod *= obj.size
        if prod > cap:
            raise CapExceeded(
                f"vertex tuple space exceeds cap {cap}")


def enumerate_limit(d: CoDecomposition, cap: int = CAP_DEFAULT) -> list[Witness]:
    """All global matching families, lexicographic by vertex tuple.

    Guarded: refuses when the full vertex tuple space exceeds cap.
    """
    _product_guard(d, cap)
    n = d.shape.n
    if n == 0:
        # empty product: the single empty family
        return [Witness((), ())]
    sizes = [o.size for o in d.vertex_obj]
    # per vertex, constraints against already-assigned lower-index vertices
    constraints: list[list[tuple[int, tuple[int, ...], tuple[int, ...]]]] = [
        [] for _ in range(n)
    ]
    for e, (u, v) in enumerate(d.shape.edges):
        hi, lo = (u, v) if u > v else (v, u)
        constraints[hi].append(
            (lo, d.leg(e, hi).table, d.leg(e, lo).table))
    out = []
    assign = [-1] * n
    level = 0
    while level >= 0:
        assign[level] += 1
        if assign[level] >= sizes[level]:
            assign[level] = -1
            level -= 1
            continue
        a = assign[level]
        ok = True
        for lo, table_hi, table_lo in constraints[level]:
            if table_hi[a] != table_lo[assign[lo]]:
                ok = False
                break
        if not ok:
            continue
        if level == n - 1:
            edges = tuple(
                d.legs[e][0](assign[u])
                for e, (u, _) in enumerate(d.shape.edges)
            )
            out.append(Witness(tuple(assign), edges))
        else:
            level += 1
    return out


def brute_image(d: CoDecomposition, cap: int = CAP_DEFAULT) -> SubMask:
    """Projection of every global matching family onto each vertex and
    edge set, as membership masks."""
    families = enumerate_limit(d, cap)
    vertex = [0] * d.shape.n
    edge = [0] * d.shape.m
    for w in families:
        for x, a in enumerate(w.vertex_elements):
            vertex[x] |= 1 << a
        for e, a in enumerate(w.edge_elements):
            edge[e] |= 1 << a
    return SubMask(vertex, edge)


def pullback_limit(d: CoDecomposition, cap: int = CAP_DEFAULT) -> int:
    """Cardinality of the limit of a tree-shaped diagram, computed by
    folding one pullback per edge along a traversal from vertex 0."""
    if not is_forest(d.shape):
        raise ValueError("shape is not a tree")
    comps = components(d.shape)
    if len(comps) != 1:
        raise ValueError("shape is not a tree (not connected)")
    inc = d.shape.incidence
    # BFS orientation from vertex 0; position of each vertex in the tuples
    position = {0: 0}
    steps: list[tuple[int, int, int]] = []  # (parent, child, edge id)
    queue = [0]
    head = 0
    while head < len(queue):
        v = queue[head]
        head += 1
        for e, w in inc[v]:
            if w not in position:
                position[w] = len(position)
                steps.append((v, w, e))
                queue.append(w)
    tuples: list[tuple[int, ...]] = [(a,) for a in range(d.vertex_obj[0].size)]
    for parent, child, e in steps:
        f_parent = d.leg(e, parent)
        f_child = d.leg(e, child)
        child_size = d.vertex_obj[child].size
        if len(tuples) * max(child_size, 1) > cap:
            raise CapExceeded(f"intermediate pullback exceeds cap {cap}")
        pos = position[parent]
        new = []
        for tup in tuples:
            want = f_parent(tup[pos])
            for b in range(child_size):
                if f_child(b) == want:
                    new.append(tup + (b,))
        tuples = new
    return len(tuples)
