import pytest
from hypothesis import given

from kncross.canonical import canonical_matrix
from kncross.core import DomainError, ValidationError, spine_edges, z_value
from kncross.cross_index import crossing_report, edge_crossing_count
from kncross.rerouted import (
    ExtendedDiagram,
    Reroute,
    build_dprime,
    check_lemma_3_2,
    extended_crossing_report,
    linear_tree,
    reroute_chord,
    tree_is_crossing_free,
)

from conftest import page_matrices
from oracles import geometric_extended_total, pattern_count


def oracle_for(d):
    rs = [(r.chord, r.gap, r.north_endpoint, r.rank) for r in d.reroutes]
    return geometric_extended_total(d.n, lambda c: d.base.entry(*c), rs)


@pytest.mark.parametrize("n, chord", [(9, (5, 9)), (11, (6, 11)), (7, (4, 7))])
def test_build_dprime_reroutes(n, chord):
    d = build_dprime(n)
    assert d.reroutes == (Reroute(chord, (1, 2), chord[0], 0),)
    assert d.removed == {chord}
    assert d.base == canonical_matrix(n)


def test_build_dprime_rejects_even():
    with pytest.raises(DomainError):
        build_dprime(10)


def test_reroute_chord_equals_dprime():
    assert reroute_chord(canonical_matrix(9), (5, 9), (1, 2), 5) == build_dprime(9)


def test_reroute_chord_errors():
    d = build_dprime(9)
    with pytest.raises(ValidationError):
        reroute_chord(d, (5, 9), (3, 4), 5)
    # half-arc from v_2 to a point on spine edge (1,2) has nothing between its ends
    with pytest.raises(ValidationError, match="degenerate"):
        reroute_chord(canonical_matrix(9), (2, 5), (1, 2), 5)
    with pytest.raises(DomainError):
        reroute_chord(canonical_matrix(9), (2, 5), (2, 4), 5)


def test_reroute_n7_example():
    d = reroute_chord(canonical_matrix(7), (3, 6), (4, 5), 3)
    rep = extended_crossing_report(d)
    assert rep.total == 14 == oracle_for(d)[0]


def test_dprime_9_total():
    rep = extended_crossing_report(build_dprime(9))
    assert rep.total == 36 == z_value(9) == oracle_for(build_dprime(9))[0]


@pytest.mark.parametrize("n", range(7, 26, 2))
def test_dprime_conservation(n):
    d = build_dprime(n)
    rep = extended_crossing_report(d)
    m = (n + 1) // 2
    assert rep.total == z_value(n)
    assert rep.per_edge[(m, n)] == edge_crossing_count(d.base, (m, n))
    assert sum(rep.per_edge.values()) == 2 * rep.total


@pytest.mark.parametrize("n", range(7, 26, 2))
def test_dprime_matches_geometric_oracle(n):
    d = build_dprime(n)
    total, per_edge = oracle_for(d)
    rep = extended_crossing_report(d)
    assert rep.total == total
    assert {e: c for e, c in rep.per_edge.items() if c} == per_edge


@pytest.mark.parametrize("n", range(7, 26, 2))
def test_half_arc_attribution(n):
    d = build_dprime(n)
    m = (n + 1) // 2
    rep = extended_crossing_report(d)
    base = crossing_report(d.base)
    assert rep.half_arcs[((m, n), m)] == base.crossing_set((1, m))
    assert rep.half_arcs[((m, n), n)] == base.crossing_set((2, n))


@pytest.mark.parametrize("n", range(7, 26, 2))
def test_only_pierced_spine_edge_is_crossed(n):
    rep = extended_crossing_report(build_dprime(n))
    crossed = {e: rep.per_edge[e] for e in spine_edges(n) if rep.per_edge[e]}
    assert crossed == {(1, 2): 1}


@given(page_matrices())
def test_reroute_free_reduces_to_matrix(m):
    a, b = extended_crossing_report(ExtendedDiagram(m)), crossing_report(m)
    assert a.total == b.total
    assert a.per_edge == b.per_edge
    assert sorted(a.pairs) == sorted(b.pairs)


@pytest.mark.parametrize("n", [5, 9, 41] + list(range(7, 42, 2)))
def test_reroute_identity(n):
    assert check_lemma_3_2(n)


def test_reroute_identity_n9_terms():
    m9 = canonical_matrix(9)
    page = lambda c: m9.entry(*c)
    c59 = pattern_count(9, page, (5, 9), "sigma") + pattern_count(9, page, (5, 9), "tilde")
    c15 = pattern_count(9, page, (1, 5), "sigma") + pattern_count(9, page, (1, 5), "tilde")
    c29 = pattern_count(9, page, (2, 9), "sigma") + pattern_count(9, page, (2, 9), "tilde")
    assert (c59, c15, c29) == (6, 3, 2)


def test_tree_freeness():
    d = build_dprime(9)
    assert tree_is_crossing_free(d, linear_tree(9))
    assert tree_is_crossing_free(canonical_matrix(9), linear_tree(9))
    with pytest.raises(DomainError):
        tree_is_crossing_free(d, spine_edges(9))  # the full cycle is not a tree


def test_tree_freeness_pierced_edge():
    d = build_dprime(9)
    tree = [(1, 2)] + [(i, i + 1) for i in range(2, 9)]
    assert not tree_is_crossing_free(d, tree)


def test_multiple_reroutes_same_gap():
    m = canonical_matrix(11)
    d = reroute_chord(m, (6, 11), (1, 2), 6, rank=0)
    d = reroute_chord(d, (4, 9), (1, 2), 4, rank=1)
    total, per_edge = oracle_for(d)
    rep = extended_crossing_report(d)
    assert rep.total == total
    assert {e: c for e, c in rep.per_edge.items() if c} == per_edge
    with pytest.raises(ValidationError):
        reroute_chord(d, (5, 10), (1, 2), 5, rank=1)
