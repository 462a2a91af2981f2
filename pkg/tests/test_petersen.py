from itertools import combinations

import pytest

from gccbicolor.petersen import (
    CycleClass,
    Parity,
    build_petersen,
    canonical_cycle,
    color_word,
    cycle_parity,
    enumerate_graph_cycles,
    induced_color_cycle,
    is_cycle_of,
    k5_cycle_classes,
    parse_o3_vertex,
    parse_word,
    permutation_parity,
    reversal_preserves_parity,
    shared_edge,
    theta_correspondence,
)
from oracles import brute_reversal_preserves_parity, cycle_count_parity


def test_canonical_cycle_is_dihedral_minimum():
    c = canonical_cycle("13524")
    assert c == canonical_cycle("35241") == canonical_cycle("42531")
    assert c.canonical == (1, 3, 5, 2, 4) and c.key == "13524" and str(c) == "(13524)"
    assert c.edges()[-1] == (4, 1)


def test_canonical_cycle_rejects_bad_words():
    with pytest.raises(ValueError):
        canonical_cycle("12")
    with pytest.raises(ValueError):
        canonical_cycle("1231")
    with pytest.raises(ValueError):
        parse_word("1a3")


def test_k5_class_counts():
    assert len(k5_cycle_classes(5)) == 12
    assert len(k5_cycle_classes(3)) == 10
    assert len(k5_cycle_classes(4)) == 15


def test_permutation_parity_matches_cycle_decomposition():
    for c in k5_cycle_classes(5):
        assert permutation_parity(c.canonical).value == cycle_count_parity(c.canonical)
    with pytest.raises(ValueError):
        permutation_parity("1134")


def test_cycle_parity_is_a_class_invariant_for_five_cycles():
    for c in k5_cycle_classes(5):
        w = c.canonical
        for k in range(5):
            rot = w[k:] + w[:k]
            assert permutation_parity(rot) is cycle_parity(c)
            assert permutation_parity(rot[::-1]) is cycle_parity(c)
    odd = [c for c in k5_cycle_classes(5) if cycle_parity(c) is Parity.ODD]
    assert len(odd) == 6
    with pytest.raises(ValueError):
        cycle_parity(canonical_cycle("123"))


@pytest.mark.parametrize("n", [3, 5, 7, 9, 11, 13])
def test_reversal_parity_against_brute_force(n):
    assert reversal_preserves_parity(n) == brute_reversal_preserves_parity(n)


def test_reversal_parity_rejects_even_lengths():
    with pytest.raises(ValueError):
        reversal_preserves_parity(4)


def test_petersen_shape():
    g = build_petersen()
    assert len(g.vertices) == 10 and len(g.edges) == 15
    assert all(len(ns) == 3 for ns in g.adjacency.values())
    for v in g.vertices:
        assert {g.color(v, u) for u in g.adjacency[v]} == set(v)
    with pytest.raises(ValueError):
        g.color((1, 2, 3), (1, 2, 4))


def test_cycle_enumeration_counts():
    g = build_petersen()
    counts = {k: len(enumerate_graph_cycles(g, k)) for k in range(3, 11)}
    # girth 5; the Petersen graph has 12, 10, 0, 15, 20, 0 cycles of length 5..10
    assert counts == {3: 0, 4: 0, 5: 12, 6: 10, 7: 0, 8: 15, 9: 20, 10: 0}
    with pytest.raises(ValueError):
        enumerate_graph_cycles(g, 2)


def test_enumerated_cycles_are_cycles():
    g = build_petersen()
    for k in (5, 6, 8):
        for c in enumerate_graph_cycles(g, k):
            assert is_cycle_of(g, c.canonical)


def test_six_cycle_colour_words_have_period_three():
    g = build_petersen()
    for c in enumerate_graph_cycles(g, 6):
        w = color_word(g, c)
        assert w[:3] == w[3:] and len(set(w[:3])) == 3


def test_theta_maps_are_inverse_bijections():
    g = build_petersen()
    theta = theta_correspondence()
    assert set(theta.theta5) == set(k5_cycle_classes(5))
    assert set(theta.theta3) == set(k5_cycle_classes(3))
    assert len(set(theta.theta5.values())) == 12 and len(set(theta.theta3.values())) == 10
    for cls, cyc in theta.theta5.items():
        assert induced_color_cycle(g, cyc) == cls
    assert theta.six_cycle({1, 2, 3}) == theta.theta3[canonical_cycle("123")]


def test_five_and_six_cycles_meet_in_one_or_three_edges():
    theta = theta_correspondence()
    single = multiple = 0
    for y in theta.theta5:
        for x in combinations(range(1, 6), 3):
            try:
                edge = shared_edge(y, x)
            except ValueError:
                multiple += 1
            else:
                assert edge is not None
                single += 1
    assert (single, multiple) == (60, 60)


def test_parse_o3_vertex():
    assert parse_o3_vertex("512") == (1, 2, 5)
    with pytest.raises(ValueError):
        parse_o3_vertex("516")
    assert isinstance(canonical_cycle([(1, 2, 3), (1, 4, 5), (2, 3, 4)]), CycleClass)
