import random

import pytest

from conftest import (
    c4_example,
    c4_untwisted_example,
    cospan_example,
    edgeless_diagram,
    path_example,
    random_graph_diagram,
    random_tree_diagram,
)
from limsolve import (
    CoDecomposition,
    FinFn,
    FinSetObj,
    SectionAssignment,
    SimpleGraph,
    VertexSet,
    brute_image,
    discrete_inlim,
    enumerate_limit,
    extract_witness,
    forest_initial,
    image_tree,
    inlim,
    section_tests,
    witness_violations,
)


def test_discrete_inlim_examples():
    assert not discrete_inlim(edgeless_diagram([2, 3, 1])).empty_limit
    assert discrete_inlim(edgeless_diagram([2, 0, 5])).empty_limit


def test_discrete_inlim_rejects_edges():
    with pytest.raises(ValueError):
        discrete_inlim(cospan_example())


def test_discrete_inlim_matches_oracle():
    for seed in range(50):
        rng = random.Random(seed)
        sizes = [rng.randint(0, 4) for _ in range(rng.randint(0, 6))]
        d = edgeless_diagram(sizes)
        assert discrete_inlim(d).empty_limit == (not enumerate_limit(d))


def test_image_tree_path_example():
    d = path_example()
    m = image_tree(d, d.full_mask())
    assert m.vertex == [0b100, 0b10, 0b11]
    assert m.edge == [0b10, 0b10]


def test_image_tree_edgeless_unchanged():
    d = edgeless_diagram([2, 3])
    m = image_tree(d, d.full_mask())
    assert m == d.full_mask()


def test_image_tree_rejects_cycles():
    d = c4_example()
    with pytest.raises(ValueError):
        image_tree(d, d.full_mask())


def test_image_tree_zeroes_everything_when_one_component_dies():
    # healthy component + empty-set component: no global families at all
    d = CoDecomposition(
        SimpleGraph(3, [(0, 1)]),
        [FinSetObj(2), FinSetObj(2), FinSetObj(0)],
        [FinSetObj(2)],
        [(FinFn.identity(2), FinFn.identity(2))],
    )
    m = image_tree(d, d.full_mask())
    assert m.vertex == [0, 0, 0] and m.edge == [0]
    assert m == brute_image(d)


def test_image_tree_matches_brute_image():
    for seed in range(80):
        d = random_tree_diagram(seed)
        assert image_tree(d, d.full_mask()) == brute_image(d)


def test_image_tree_monotone():
    for seed in range(30):
        d = random_tree_diagram(seed)
        full = d.full_mask()
        out = image_tree(d, full)
        for x in range(d.shape.n):
            assert out.vertex[x] & ~full.vertex[x] == 0


def test_forest_initial_examples():
    d = path_example()
    assert not forest_initial(d, d.full_mask()).empty_limit
    c = cospan_example()
    assert forest_initial(c, c.full_mask()).empty_limit


def test_forest_initial_on_c4_section_tests():
    d = c4_example()
    for test in section_tests(d, VertexSet.of(4, [0])):
        assert not test.immediately_empty
        assert forest_initial(test.tau, test.tau_mask).empty_limit


def test_forest_initial_matches_oracle_on_forests():
    for seed in range(60):
        d = random_tree_diagram(seed)
        assert forest_initial(d, d.full_mask()).empty_limit == \
            (not enumerate_limit(d))


def test_section_tests_c4_matches_worked_example():
    d = c4_example()
    tests = list(section_tests(d, VertexSet.of(4, [0])))
    assert len(tests) == 2
    assert tests[0].assignment.choices == ((0, 0),)
    assert tests[1].assignment.choices == ((0, 1),)
    # tau vertices are old 1, 2, 3 in order
    assert tests[0].tau_mask.vertex == [0b10, 0b11, 0b01]  # {d}, {c,d}, {a}
    assert tests[1].tau_mask.vertex == [0b01, 0b11, 0b10]  # {c}, {c,d}, {b}
    for t in tests:
        assert t.tau.shape == SimpleGraph(3, [(0, 1), (1, 2)])
        assert t.tau_mask.edge == [0b11, 0b11]
        assert t.vertex_map == [None, 0, 1, 2]
        assert t.edge_map == [None, 0, 1, None]


def test_section_tests_empty_fvs_yields_diagram_itself():
    d = path_example()
    tests = list(section_tests(d, VertexSet(3, 0)))
    assert len(tests) == 1
    assert tests[0].assignment.choices == ()
    assert tests[0].tau is d
    assert tests[0].tau_mask == d.full_mask()


def test_section_tests_empty_pinned_set_yields_nothing():
    # some d(s) empty: zero tests, and the limit is empty overall
    d = CoDecomposition(
        SimpleGraph(3, [(0, 1), (1, 2), (0, 2)]),
        [FinSetObj(0), FinSetObj(2), FinSetObj(2)],
        [FinSetObj(1), FinSetObj(1), FinSetObj(1)],
        [
            (FinFn(0, 1, ()), FinFn.constant(2, 1, 0)),
            (FinFn.constant(2, 1, 0), FinFn.constant(2, 1, 0)),
            (FinFn(0, 1, ()), FinFn.constant(2, 1, 0)),
        ],
    )
    assert list(section_tests(d, VertexSet.of(3, [0]))) == []
    result = inlim(d, fvs=VertexSet.of(3, [0]))
    assert result.verdict.empty_limit
    assert result.section_test_count == 0


def test_section_tests_rejects_non_fvs():
    d = c4_example()
    with pytest.raises(ValueError):
        list(section_tests(d, VertexSet(4, 0)))


def test_inlim_c4_empty():
    result = inlim(c4_example())
    assert result.verdict.empty_limit
    assert result.fvs and len(result.fvs) == 1
    assert result.section_test_count == 2


def test_inlim_untwisted_c4_nonempty():
    d = c4_untwisted_example()
    assert enumerate_limit(d)  # oracle confirms a family exists
    result = inlim(d, want_witness=True)
    assert not result.verdict.empty_limit
    assert witness_violations(d, result.witness) == []


def test_inlim_zero_vertex_shape_nonempty():
    assert not inlim(edgeless_diagram([])).verdict.empty_limit


def test_inlim_supplied_fvs_validated():
    with pytest.raises(ValueError):
        inlim(c4_example(), fvs=VertexSet(4, 0))
    with pytest.raises(ValueError):
        inlim(c4_example(), fvs=VertexSet(3, 0))


def test_inlim_no_fvs_within_budget():
    from limsolve.generate import complete_graph
    from limsolve.generate import random_diagram

    rng = random.Random(0)
    d = random_diagram(rng, complete_graph(5), 2)
    with pytest.raises(ValueError):
        inlim(d, k_max=1)


def test_inlim_matches_oracle_small_batch():
    for seed in range(120):
        d = random_graph_diagram(seed)
        result = inlim(d)
        assert result.verdict.empty_limit == (not enumerate_limit(d)), seed


def test_inlim_witness_on_random_nonempty():
    found = 0
    for seed in range(80):
        d = random_graph_diagram(seed)
        result = inlim(d, want_witness=True)
        if not result.verdict.empty_limit:
            found += 1
            assert witness_violations(d, result.witness) == []
            # lexicographically first family under the lowest-index rule
            assert result.witness in enumerate_limit(d)
    assert found > 10


def test_inlim_deterministic_witness():
    d = c4_untwisted_example()
    w1 = inlim(d, want_witness=True).witness
    w2 = inlim(d, want_witness=True).witness
    assert w1 == w2


def test_inlim_early_exit_off_counts_all_tests():
    d = c4_untwisted_example()
    result = inlim(d, early_exit=False)
    assert not result.verdict.empty_limit
    assert result.section_test_count == 2  # |d(s)| for the single pinned vertex


def test_inlim_edge_order_independent():
    for seed in range(60):
        d = random_graph_diagram(seed)
        a = inlim(d, edge_order="asc").verdict.empty_limit
        b = inlim(d, edge_order="desc").verdict.empty_limit
        assert a == b


def test_inlim_parallel_matches_sequential():
    for seed in range(25):
        d = random_graph_diagram(seed, n_max=7)
        seq = inlim(d, early_exit=False)
        par = inlim(d, jobs=4, early_exit=False)
        assert seq.verdict == par.verdict
        assert seq.section_test_count == par.section_test_count
        par_early = inlim(d, jobs=4)
        assert seq.verdict == par_early.verdict


def test_extract_witness_path_example():
    d = path_example()
    w = extract_witness(d, image_tree(d, d.full_mask()))
    assert w.vertex_elements == (2, 1, 0)  # c, β, r
    assert w.edge_elements == (1, 1)       # y, v
    assert w in enumerate_limit(d)


def test_extract_witness_single_vertex():
    d = edgeless_diagram([3])
    w = extract_witness(d, image_tree(d, d.full_mask()))
    assert w.vertex_elements == (0,)


def test_extract_witness_random_trees():
    for seed in range(60):
        d = random_tree_diagram(seed)
        img = image_tree(d, d.full_mask())
        if any(v == 0 for v in img.vertex):
            with pytest.raises(ValueError):
                extract_witness(d, img)
            continue
        w = extract_witness(d, img)
        assert witness_violations(d, w) == []


def test_extract_witness_with_pinned_vertices():
    d = c4_untwisted_example()
    result = inlim(d, want_witness=True)
    sigma = SectionAssignment(((0, result.witness.vertex_elements[0]),))
    w = extract_witness(d, _image_on_base(d, sigma), sigma)
    assert witness_violations(d, w) == []


def _image_on_base(d, sigma):
    """Image masks over the original index space for the forest part."""
    from limsolve import filter_edge, restrict_to_subgraph

    m = d.full_mask()
    pinned = sigma.as_dict()
    for v, a in pinned.items():
        m.vertex[v] = 1 << a
    for v in pinned:
        for e, _ in d.shape.incidence[v]:
            filter_edge(d, m, e)
    keep = VertexSet.of(d.shape.n,
                        [v for v in range(d.shape.n) if v not in pinned])
    r = restrict_to_subgraph(d, m, keep)
    img = image_tree(r.diagram, r.mask)
    out = d.full_mask()
    for v, a in pinned.items():
        out.vertex[v] = 1 << a
    for old, new in enumerate(r.vertex_map):
        if new is not None:
            out.vertex[old] = img.vertex[new]
    for old, new in enumerate(r.edge_map):
        if new is not None:
            out.edge[old] = img.edge[new]
    return out
