"""JSON input/output for every instance format the CLI accepts.

Graph: {"n": 3, "edges": [[0, 1], [1, 2]]}
Set: {"size": 2} or {"elements": ["a", "b"]}
Function: {"map": [0, 1]} or {"map": {"a": "x"}} (label form)
Diagram: {"shape": g, "vertex_sets": [...], "edge_sets": [...],
          "legs": [{"edge": 0, "endpoint": 0, "map": ...}, ...]}
Category: {"objects": 2, "morphisms": [{"id": 0, "src": 0, "tgt": 0}, ...],
           "identities": [0, 1], "comp": [[0, -1, ...], ...]}
C-set diagram: the diagram format with per-C-object sets nested per
vertex/edge, plus action tables.
Decomposition: {"X": g, "shape": g, "bags": [[...], ...],
                "adhesions": [[...], ...]} (adhesions optional)
"""

from __future__ import annotations

import json

from .cset import CSet, CSetCoDecomposition, FinCat, validate_fincat
from .diagram import CoDecomposition, validate
from .finset import FinFn, FinSetObj
from .graphs import SimpleGraph
from .hom import BagDecomposition


class ParseError(ValueError):
    pass


def _require(obj, key, where):
    if not isinstance(obj, dict) or key not in obj:
        raise ParseError(f"{where}: missing key '{key}'")
    return obj[key]


def parse_graph(obj, where: str = "graph") -> SimpleGraph:
    n = _require(obj, "n", where)
    edges = _require(obj, "edges", where)
    try:
        return SimpleGraph(n, [(e[0], e[1]) for e in edges])
    except (ValueError, TypeError, IndexError) as exc:
        raise ParseError(f"{where}: {exc}") from exc


def graph_to_json(g: SimpleGraph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges]}


def parse_finset(obj, where: str = "set") -> FinSetObj:
    if isinstance(obj, dict) and "elements" in obj:
        labels = obj["elements"]
        try:
            return FinSetObj(len(labels), tuple(str(s) for s in labels))
        except ValueError as exc:
            raise ParseError(f"{where}: {exc}") from exc
    if isinstance(obj, dict) and "size" in obj:
        try:
            return FinSetObj(int(obj["size"]))
        except ValueError as exc:
            raise ParseError(f"{where}: {exc}") from exc
    raise ParseError(f"{where}: expected 'size' or 'elements'")


def finset_to_json(o: FinSetObj) -> dict:
    if o.labels is not None:
        return {"elements": list(o.labels)}
    return {"size": o.size}


def parse_fn(obj, source: FinSetObj, target: FinSetObj, where: str = "map") -> FinFn:
    table = _require(obj, "map", where)
    if isinstance(table, dict):
        if source.labels is None or target.labels is None:
            raise ParseError(
                f"{where}: label-form map needs labeled source and target sets")
        tix = {lab: i for i, lab in enumerate(target.labels)}
        entries = []
        for lab in source.labels:
            if lab not in table:
                raise ParseError(f"{where}: no image for element '{lab}'")
            val = table[lab]
            if val not in tix:
                raise ParseError(f"{where}: unknown target element '{val}'")
            entries.append(tix[val])
        table = entries
    try:
        return FinFn(source.size, target.size, tuple(int(t) for t in table))
    except (ValueError, TypeError) as exc:
        raise ParseError(f"{where}: {exc}") from exc


def fn_to_json(f: FinFn, source: FinSetObj, target: FinSetObj) -> dict:
    if source.labels is not None and target.labels is not None:
        return {"map": {source.labels[i]: target.labels[t]
                        for i, t in enumerate(f.table)}}
    return {"map": list(f.table)}


def parse_diagram(obj) -> CoDecomposition:
    shape = parse_graph(_require(obj, "shape", "diagram"), "diagram shape")
    vsets = [parse_finset(o, f"vertex set {i}")
             for i, o in enumerate(_require(obj, "vertex_sets", "diagram"))]
    esets = [parse_finset(o, f"edge set {i}")
             for i, o in enumerate(_require(obj, "edge_sets", "diagram"))]
    if len(vsets) != shape.n:
        raise ParseError("diagram: one vertex set per shape vertex required")
    if len(esets) != shape.m:
        raise ParseError("diagram: one edge set per shape edge required")
    legs: list[dict[int, FinFn]] = [{} for _ in range(shape.m)]
    for i, leg in enumerate(_require(obj, "legs", "diagram")):
        e = _require(leg, "edge", f"leg {i}")
        x = _require(leg, "endpoint", f"leg {i}")
        if not 0 <= e < shape.m:
            raise ParseError(f"leg {i}: no edge with id {e}")
        u, v = shape.edges[e]
        if x not in (u, v):
            raise ParseError(f"leg {i}: vertex {x} is not an endpoint of edge {e}")
        if x in legs[e]:
            raise ParseError(f"leg {i}: duplicate leg for edge {e} at vertex {x}")
        legs[e][x] = parse_fn(leg, vsets[x], esets[e], f"leg {i}")
    pairs = []
    for e, (u, v) in enumerate(shape.edges):
        if u not in legs[e] or v not in legs[e]:
            raise ParseError(f"edge {e}: exactly two legs required")
        pairs.append((legs[e][u], legs[e][v]))
    d = CoDecomposition(shape, vsets, esets, pairs)
    problems = validate(d)
    if problems:
        raise ParseError("invalid diagram: " + "; ".join(problems))
    return d


def diagram_to_json(d: CoDecomposition, meta: dict | None = None) -> dict:
    legs = []
    for e, (u, v) in enumerate(d.shape.edges):
        for x, fn in ((u, d.legs[e][0]), (v, d.legs[e][1])):
            entry = {"edge": e, "endpoint": x}
            entry.update(fn_to_json(fn, d.vertex_obj[x], d.edge_obj[e]))
            legs.append(entry)
    out = {
        "shape": graph_to_json(d.shape),
        "vertex_sets": [finset_to_json(o) for o in d.vertex_obj],
        "edge_sets": [finset_to_json(o) for o in d.edge_obj],
        "legs": legs,
    }
    if meta:
        out["meta"] = meta
    return out


def parse_fincat(obj) -> FinCat:
    n = _require(obj, "objects", "category")
    morphisms = _require(obj, "morphisms", "category")
    src = [0] * len(morphisms)
    tgt = [0] * len(morphisms)
    seen = set()
    for m in morphisms:
        i = _require(m, "id", "morphism")
        if not 0 <= i < len(morphisms) or i in seen:
            raise ParseError(f"category: bad or duplicate morphism id {i}")
        seen.add(i)
        src[i] = _require(m, "src", "morphism")
        tgt[i] = _require(m, "tgt", "morphism")
    identities = _require(obj, "identities", "category")
    comp = _require(obj, "comp", "category")
    cat = FinCat(int(n), tuple(src), tuple(tgt), tuple(identities),
                 tuple(tuple(row) for row in comp))
    problems = validate_fincat(cat)
    if problems:
        raise ParseError("invalid category: " + "; ".join(problems))
    return cat


def fincat_to_json(c: FinCat) -> dict:
    return {
        "objects": c.object_count,
        "morphisms": [{"id": i, "src": c.src[i], "tgt": c.tgt[i]}
                      for i in range(c.morphism_count)],
        "identities": list(c.identity),
        "comp": [list(row) for row in c.comp],
    }


def _parse_cset(obj, cat: FinCat, where: str) -> CSet:
    sets = [parse_finset(o, f"{where} object {c}")
            for c, o in enumerate(_require(obj, "objects", where))]
    if len(sets) != cat.object_count:
        raise ParseError(f"{where}: one set per C-object required")
    actions = []
    raw = _require(obj, "actions", where)
    if len(raw) != cat.morphism_count:
        raise ParseError(f"{where}: one action per C-morphism required")
    for f, a in enumerate(raw):
        actions.append(parse_fn(a, sets[cat.src[f]], sets[cat.tgt[f]],
                                f"{where} action {f}"))
    return CSet(tuple(sets), tuple(actions))


def _cset_to_json(x: CSet, cat: FinCat) -> dict:
    return {
        "objects": [finset_to_json(o) for o in x.objects],
        "actions": [fn_to_json(x.actions[f], x.objects[cat.src[f]],
                               x.objects[cat.tgt[f]])
                    for f in range(cat.morphism_count)],
    }


def parse_cset_diagram(obj, cat: FinCat) -> CSetCoDecomposition:
    shape = parse_graph(_require(obj, "shape", "cset diagram"), "shape")
    vcs = [_parse_cset(o, cat, f"vertex C-set {i}")
           for i, o in enumerate(_require(obj, "vertex_csets", "cset diagram"))]
    ecs = [_parse_cset(o, cat, f"edge C-set {i}")
           for i, o in enumerate(_require(obj, "edge_csets", "cset diagram"))]
    legs: list[dict[int, tuple[FinFn, ...]]] = [{} for _ in range(shape.m)]
    for i, leg in enumerate(_require(obj, "legs", "cset diagram")):
        e = _require(leg, "edge", f"leg {i}")
        x = _require(leg, "endpoint", f"leg {i}")
        if not 0 <= e < shape.m:
            raise ParseError(f"leg {i}: no edge with id {e}")
        u, v = shape.edges[e]
        if x not in (u, v):
            raise ParseError(f"leg {i}: vertex {x} is not an endpoint of edge {e}")
        maps = _require(leg, "maps", f"leg {i}")
        if len(maps) != cat.object_count:
            raise ParseError(f"leg {i}: one map per C-object required")
        legs[e][x] = tuple(
            parse_fn(m, vcs[x].objects[c], ecs[e].objects[c],
                     f"leg {i} component {c}")
            for c, m in enumerate(maps))
    pairs = []
    for e, (u, v) in enumerate(shape.edges):
        if u not in legs[e] or v not in legs[e]:
            raise ParseError(f"edge {e}: exactly two legs required")
        pairs.append((legs[e][u], legs[e][v]))
    return CSetCoDecomposition(cat, shape, vcs, ecs, pairs)


def cset_diagram_to_json(d: CSetCoDecomposition) -> dict:
    legs = []
    for e, (u, v) in enumerate(d.shape.edges):
        for x, leg in ((u, d.legs[e][0]), (v, d.legs[e][1])):
            legs.append({
                "edge": e,
                "endpoint": x,
                "maps": [
                    fn_to_json(leg[c], d.vertex_cs[x].objects[c],
                               d.edge_cs[e].objects[c])
                    for c in range(d.cat.object_count)
                ],
            })
    return {
        "shape": graph_to_json(d.shape),
        "vertex_csets": [_cset_to_json(x, d.cat) for x in d.vertex_cs],
        "edge_csets": [_cset_to_json(x, d.cat) for x in d.edge_cs],
        "legs": legs,
    }


def parse_decomposition(obj) -> BagDecomposition:
    x = parse_graph(_require(obj, "X", "decomposition"), "decomposition X")
    shape = parse_graph(_require(obj, "shape", "decomposition"),
                        "decomposition shape")
    bags = tuple(tuple(bag) for bag in _require(obj, "bags", "decomposition"))
    adhesions = tuple(tuple(a) for a in obj.get("adhesions", ()))
    try:
        return BagDecomposition(x, shape, bags, adhesions)
    except (ValueError, TypeError) as exc:
        raise ParseError(f"decomposition: {exc}") from exc


def decomposition_to_json(b: BagDecomposition) -> dict:
    return {
        "X": graph_to_json(b.x),
        "shape": graph_to_json(b.shape),
        "bags": [list(bag) for bag in b.bags],
        "adhesions": [list(a) for a in b.adhesions],
    }


def dumps(obj: dict) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"),
                      ensure_ascii=False)
