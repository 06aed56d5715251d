"""Command-line interface.

Reports are machine-parseable: key=value lines, then the verdict as the
last line.  Exit codes for solve/oracle/cset-solve: 0 = EMPTY,
1 = NONEMPTY, 2 = error; hom mirrors this with NO-HOM = 0, HOM = 1.
"""

from __future__ import annotations

import argparse
import json
import statistics
import sys
import time

from . import generate, jsonio, oracle
from .diagram import CoDecomposition, as_subdiagram
from .graphs import VertexSet, fvs_exact
from .hom import hom_exists
from .cset import cset_inlim
from .solver import Witness, image_tree, inlim


def _load(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise jsonio.ParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise jsonio.ParseError(f"{path}: invalid JSON: {exc}") from exc


def _parse_fvs(arg: str | None, n: int) -> VertexSet | None:
    if arg is None:
        return None
    ids = [int(tok) for tok in arg.split(",") if tok.strip() != ""]
    return VertexSet.of(n, ids)


def _witness_lines(d: CoDecomposition, w: Witness) -> list[str]:
    verts = ",".join(d.vertex_obj[x].label(a)
                     for x, a in enumerate(w.vertex_elements))
    edges = ",".join(d.edge_obj[e].label(a)
                     for e, a in enumerate(w.edge_elements))
    return [f"witness_vertices={verts}", f"witness_edges={edges}"]


def cmd_solve(args) -> int:
    d = jsonio.parse_diagram(_load(args.diagram))
    fvs = _parse_fvs(args.fvs, d.shape.n)
    jobs = 1 if args.deterministic else args.jobs
    t0 = time.perf_counter()
    result = inlim(d, fvs=fvs, k_max=args.fvs_max,
                   want_witness=args.witness, jobs=jobs)
    elapsed = (time.perf_counter() - t0) * 1000.0
    print(f"n={d.shape.n}")
    print(f"w={d.width()}")
    print(f"k={len(result.fvs)}")
    print(f"fvs={','.join(map(str, result.fvs))}")
    print(f"section_tests={result.section_test_count}")
    if not args.deterministic:
        print(f"time_ms={elapsed:.3f}")
    if args.witness and result.witness is not None:
        for line in _witness_lines(d, result.witness):
            print(line)
    if result.verdict.empty_limit:
        print("EMPTY")
        return 0
    print("NONEMPTY")
    return 1


def cmd_oracle(args) -> int:
    d = jsonio.parse_diagram(_load(args.diagram))
    families = oracle.enumerate_limit(d, cap=args.cap)
    print(f"n={d.shape.n}")
    print(f"w={d.width()}")
    print(f"family_count={len(families)}")
    if not families:
        print("EMPTY")
        return 0
    print("NONEMPTY")
    return 1


def cmd_image(args) -> int:
    d = jsonio.parse_diagram(_load(args.diagram))
    mask = image_tree(d, d.full_mask())
    print(jsonio.dumps(jsonio.diagram_to_json(as_subdiagram(d, mask))))
    return 0


def cmd_hom(args) -> int:
    b = jsonio.parse_decomposition(_load(args.decomposition))
    template = args.template
    if template.startswith("file:"):
        h = jsonio.parse_graph(_load(template[5:]))
    elif template.startswith("k") and template[1:].isdigit():
        h = generate.complete_graph(int(template[1:]))
    else:
        raise jsonio.ParseError(f"unknown template '{template}'")
    fvs = _parse_fvs(args.fvs, b.shape.n)
    exists, coloring = hom_exists(b, h, fvs=fvs, k_max=args.fvs_max,
                                  want_coloring=args.witness)
    print(f"x_n={b.x.n}")
    print(f"shape_n={b.shape.n}")
    print(f"max_bag={max((len(bag) for bag in b.bags), default=0)}")
    if args.witness and coloring is not None:
        print("coloring=" + ",".join(map(str, coloring)))
    if exists:
        print("HOM")
        return 1
    print("NO-HOM")
    return 0


def cmd_cset_solve(args) -> int:
    cat = jsonio.parse_fincat(_load(args.category))
    d = jsonio.parse_cset_diagram(_load(args.diagram), cat)
    fvs = _parse_fvs(args.fvs, d.shape.n)
    verdict = cset_inlim(d, fvs=fvs, k_max=args.fvs_max)
    print(f"n={d.shape.n}")
    print(f"w_sum={d.width()}")
    print(f"w_slice={d.slice_width()}")
    if verdict.empty_limit:
        print("EMPTY")
        return 0
    print("NONEMPTY")
    return 1


def cmd_fvs(args) -> int:
    g = jsonio.parse_graph(_load(args.graph))
    budget = g.n if args.max is None else args.max
    s = fvs_exact(g, budget)
    print(f"n={g.n}")
    if s is None:
        print("NONE")
        return 1
    print(f"k={len(s)}")
    print(f"fvs={','.join(map(str, sorted(s)))}")
    return 0


def cmd_gen(args) -> int:
    d = generate.generate_instance(args.kind, args.n, args.w, args.seed,
                                   p=args.p, fixed_size=args.fixed_size)
    meta = {"kind": args.kind, "n": args.n, "w": args.w, "seed": args.seed}
    print(jsonio.dumps(jsonio.diagram_to_json(d, meta=meta)))
    return 0


def _time_solver(d: CoDecomposition, repeats: int) -> tuple[float, int, int]:
    times = []
    k = tests = 0
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = inlim(d)
        times.append((time.perf_counter() - t0) * 1000.0)
        k = len(result.fvs)
        tests = result.section_test_count
    return statistics.median(times), k, tests


def _time_oracle(d: CoDecomposition, repeats: int, cap: int) -> str:
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        try:
            oracle.enumerate_limit(d, cap=cap)
        except oracle.CapExceeded:
            return "SKIPPED"
        times.append((time.perf_counter() - t0) * 1000.0)
    return f"{statistics.median(times):.3f}"


def cmd_bench(args) -> int:
    sizes = [int(tok) for tok in args.sizes.split(",") if tok.strip()]
    print(f"# seed={args.seed}")
    print("n,w,k,section_tests,solver_ms,oracle_ms")
    for i, n in enumerate(sizes):
        d = generate.generate_instance(args.mode, n, args.w,
                                       args.seed + i, fixed_size=True)
        solver_ms, k, tests = _time_solver(d, args.repeats)
        oracle_ms = _time_oracle(d, args.repeats, args.cap)
        print(f"{n},{args.w},{k},{tests},{solver_ms:.3f},{oracle_ms}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="limsolve",
        description="Decide emptiness of limits of graph-shaped diagrams "
                    "of finite sets.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="decide emptiness of a diagram's limit")
    p.add_argument("diagram")
    p.add_argument("--fvs", help="comma-separated feedback vertex set")
    p.add_argument("--fvs-max", type=int, default=None,
                   help="budget for the feedback vertex set search")
    p.add_argument("--witness", action="store_true",
                   help="print a matching family when NONEMPTY")
    p.add_argument("--deterministic", action="store_true",
                   help="byte-identical output: no timing line, sequential tests")
    p.add_argument("--jobs", type=int, default=1,
                   help="worker threads for section tests")
    p.set_defaults(fn=cmd_solve)

    p = sub.add_parser("oracle", help="decide by brute-force enumeration")
    p.add_argument("diagram")
    p.add_argument("--cap", type=int, default=oracle.CAP_DEFAULT)
    p.set_defaults(fn=cmd_oracle)

    p = sub.add_parser("image", help="print the image subdiagram (forest shapes)")
    p.add_argument("diagram")
    p.set_defaults(fn=cmd_image)

    p = sub.add_parser("hom", help="graph homomorphism existence via a "
                                   "bag decomposition")
    p.add_argument("decomposition")
    p.add_argument("--template", default="k3",
                   help="k<n> for a complete graph or file:<graph.json>")
    p.add_argument("--witness", action="store_true",
                   help="print a verified vertex map when HOM")
    p.add_argument("--fvs", help="comma-separated feedback vertex set of the shape")
    p.add_argument("--fvs-max", type=int, default=None)
    p.set_defaults(fn=cmd_hom)

    p = sub.add_parser("cset-solve", help="decide emptiness for a diagram "
                                          "of C-sets")
    p.add_argument("category")
    p.add_argument("diagram")
    p.add_argument("--fvs")
    p.add_argument("--fvs-max", type=int, default=None)
    p.set_defaults(fn=cmd_cset_solve)

    p = sub.add_parser("fvs", help="exact bounded feedback vertex set")
    p.add_argument("graph")
    p.add_argument("--max", type=int, default=None)
    p.set_defaults(fn=cmd_fvs)

    p = sub.add_parser("gen", help="generate a random instance")
    p.add_argument("kind", choices=["tree", "path", "cycle", "random"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--w", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--p", type=float, default=0.3,
                   help="edge probability for kind=random")
    p.add_argument("--fixed-size", action="store_true",
                   help="all sets exactly size w instead of 1..w")
    p.set_defaults(fn=cmd_gen)

    p = sub.add_parser("bench", help="time solver vs brute force, CSV output")
    p.add_argument("--mode", choices=["path", "tree", "cycle"], default="path")
    p.add_argument("--sizes", required=True,
                   help="comma-separated shape sizes")
    p.add_argument("--w", type=int, default=5)
    p.add_argument("--repeats", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cap", type=int, default=oracle.CAP_DEFAULT)
    p.set_defaults(fn=cmd_bench)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (jsonio.ParseError, oracle.CapExceeded, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
