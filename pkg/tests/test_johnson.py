"""Johnson graph structures: exactness, CC/COP expansion, alternation,
2-factor search, nest validation."""

import random
from itertools import combinations

import pytest

from conftest import nest_g35, nest_g46, two_factor_g35
from permpack.johnson import (alternate_cops, expand_cc, expand_cop, is_exact,
                              is_johnson_edge, johnson_neighbors,
                              make_subgraph, parse_cop, search_exact_2factor,
                              subgraph_from_dict, subgraph_to_dict, subset_key,
                              successor_orientations, validate_nest)


def test_johnson_neighbors_count_and_colors():
    out = johnson_neighbors(5, 3, {1, 2, 3})
    assert len(out) == 3 * 2
    assert all(len(color) == 2 and color < nbr for color, nbr in out)
    assert (frozenset({3, 4}), frozenset({2, 3, 4})) in johnson_neighbors(5, 3, {3, 4, 5})


def test_johnson_adjacency():
    assert is_johnson_edge(frozenset({3, 4, 5}), frozenset({2, 3, 4}))
    assert not is_johnson_edge(frozenset({1, 2, 3}), frozenset({1, 4, 5}))


def test_johnson_neighbors_requires_proper_r():
    with pytest.raises(ValueError):
        johnson_neighbors(5, 2, {1, 2})
    with pytest.raises(ValueError):
        johnson_neighbors(5, 4, {1, 2, 3, 4})


def test_expand_cc_psi5():
    cyc = expand_cc((1, 2, 3, 4, 5), 3)
    assert {subset_key(v) for v in cyc.vertices} == {
        (1, 2, 3), (2, 3, 4), (3, 4, 5), (1, 4, 5), (1, 2, 5)}
    assert len(cyc.edges) == 5
    assert is_exact(5, 3, cyc) == (True, None)


def test_expand_cc_psi5_prime():
    cyc = expand_cc((1, 3, 5, 2, 4), 3)
    assert {subset_key(v) for v in cyc.vertices} == {
        (1, 3, 5), (2, 3, 5), (2, 4, 5), (1, 2, 4), (1, 3, 4)}
    assert is_exact(5, 3, cyc) == (True, None)


def test_expand_cc_seven_cycle():
    cyc = expand_cc((1, 2, 3, 4, 5, 6, 7), 4)
    assert len(cyc.vertices) == 7
    assert is_exact(7, 4, cyc)[0]


def test_expand_cc_rejects_repeats():
    with pytest.raises(ValueError):
        expand_cc((1, 2, 1, 3, 4), 3)
    with pytest.raises(ValueError):
        expand_cc((1, 2, 3, 4), 3)  # too short for r+2 windows


def test_is_exact_rejects_short_union_path():
    path = make_subgraph([({1, 2, 3}, {2, 3, 4}), ({2, 3, 4}, {1, 3, 4})], kind="path")
    ok, witness = is_exact(5, 3, path)
    assert not ok and witness is not None


def test_is_exact_two_factor():
    assert is_exact(5, 3, two_factor_g35()) == (True, None)


def test_expand_cop():
    assert frozenset({1, 2, 4, 5}) in expand_cop(parse_cop("1213"), 7)
    assert expand_cop(parse_cop("1114"), 7) == expand_cc((1, 2, 3, 4, 5, 6, 7), 4).vertices
    assert expand_cop(parse_cop("1212"), 6) == {
        frozenset({1, 2, 4, 5}), frozenset({2, 3, 5, 6}), frozenset({3, 4, 6, 1})}


def test_parse_cop():
    assert parse_cop("1213") == (1, 2, 1, 3)
    assert parse_cop("2,10,1") == (2, 10, 1)


def test_alternate_cops_14_cycle():
    cyc = alternate_cops(parse_cop("1123"), parse_cop("2113"), 7)
    assert cyc is not None
    assert len(cyc.vertices) == 14
    assert is_exact(7, 4, cyc) == (True, None)
    assert cyc.vertices == expand_cop(parse_cop("1123"), 7) | expand_cop(parse_cop("2113"), 7)


def test_alternate_cops_12_cycle():
    cyc = alternate_cops(parse_cop("1113"), parse_cop("1122"), 6)
    assert cyc is not None
    assert len(cyc.vertices) == 12
    assert cyc.vertices == expand_cop(parse_cop("1113"), 6) | expand_cop(parse_cop("1122"), 6)


def test_alternate_same_cop_is_absent():
    assert alternate_cops(parse_cop("1114"), parse_cop("1114"), 7) is None


def test_search_exact_2factor_found_5_3():
    sub = search_exact_2factor(5, 3)
    assert sub is not None
    assert len(sub.vertices) == 10
    adj = sub.adjacency()
    assert all(len(nb) == 2 for nb in adj.values())
    assert is_exact(5, 3, sub) == (True, None)


def test_search_exact_2factor_deterministic():
    a = search_exact_2factor(5, 3)
    b = search_exact_2factor(5, 3)
    assert sorted(map(subset_key, a.vertices)) == sorted(map(subset_key, b.vertices))
    assert [tuple(map(subset_key, e)) for e in a.edges] == \
        [tuple(map(subset_key, e)) for e in b.edges]


def test_search_exact_2factor_absent_6_4():
    assert search_exact_2factor(6, 4) is None


def test_search_exact_2factor_size_gate():
    with pytest.raises(ValueError):
        search_exact_2factor(10, 5)


def test_validate_nest_g35():
    assert validate_nest(5, 3, nest_g35()) == (True, "nest")


def test_validate_nest_g46():
    assert validate_nest(6, 4, nest_g46()) == (True, "nest")


def test_validate_nest_rejects_nonspanning():
    ok, why = validate_nest(5, 3, expand_cc((1, 2, 3, 4, 5), 3))
    assert not ok and "spanning" in why


def test_validate_nest_rejects_high_degree():
    center = frozenset({1, 2, 3})
    extra = [frozenset(c) for c in combinations(range(1, 6), 3)]
    edges = [(center, v) for v in extra
             if v != center and is_johnson_edge(center, v)][:4]
    rest = [v for v in extra if all(v not in e for e in edges) and v != center]
    sub = make_subgraph(edges, extra_vertices=rest)
    ok, why = validate_nest(5, 3, sub)
    assert not ok


def test_successor_orientations_cover_all_vertices():
    for sub in (nest_g35(), two_factor_g35()):
        maps = list(successor_orientations(sub))
        assert maps
        for succ in maps:
            assert set(succ) == set(sub.vertices)
            for c, s in succ.items():
                assert is_johnson_edge(c, s)


def test_exactness_invariant_under_relabeling():
    rng = random.Random(7)
    base = expand_cc((1, 2, 3, 4, 5), 3)
    for _ in range(10):
        img = list(range(1, 6))
        rng.shuffle(img)
        relabeled = make_subgraph(
            [(frozenset(img[x - 1] for x in u), frozenset(img[x - 1] for x in v))
             for u, v in base.edges])
        assert is_exact(5, 3, relabeled) == (True, None)


def test_random_ccs_expand_exact():
    rng = random.Random(21)
    for _ in range(20):
        elems = list(range(1, 8))
        rng.shuffle(elems)
        try:
            sub = expand_cc(tuple(elems), 4)
        except ValueError:
            continue
        ok, _ = is_exact(7, 4, sub)
        assert ok


def test_subgraph_json_roundtrip():
    sub = nest_g46()
    again = subgraph_from_dict(subgraph_to_dict(sub))
    assert again.vertices == sub.vertices
    assert {frozenset((u, v)) for u, v in again.edges} == \
        {frozenset((u, v)) for u, v in sub.edges}
