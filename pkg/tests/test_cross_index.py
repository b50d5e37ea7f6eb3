import pytest
from hypothesis import given

from kncross.canonical import canonical_matrix
from kncross.core import PageMatrix, chords, uniform_matrix, z_value
from kncross.cross_index import crossing_report, edge_crossing_count, epsilon, sigma, sigma_tilde
from kncross.core import chords_interleave

from conftest import page_matrices
from oracles import geometric_epsilon, pattern_count


def brute_epsilon(m: PageMatrix) -> int:
    cs = chords(m.n)
    return sum(
        1
        for x, a in enumerate(cs)
        for b in cs[x + 1:]
        if m.entry(*a) == m.entry(*b) and chords_interleave(m.n, a, b)
    )


def test_epsilon_examples():
    assert epsilon(canonical_matrix(7)) == 9
    assert epsilon(PageMatrix(4, (1, 1))) == 1
    assert epsilon(PageMatrix(4, (1, -1))) == 0
    assert epsilon(uniform_matrix(5)) == 5
    assert geometric_epsilon(5, lambda c: 1) == 5


def test_sigma_worked_examples():
    m14 = canonical_matrix(14)
    assert sigma(m14, (1, 7)) == 15
    assert sigma(m14, (2, 10)) == 4


def test_sigma_worked_example_partners():
    # the partner lists printed with the worked examples
    m14 = canonical_matrix(14)
    expect_17 = {(2, 8), (2, 9), (2, 10), (2, 11), (2, 12), (3, 8), (3, 9), (3, 10), (3, 11),
                 (4, 8), (4, 9), (4, 10), (5, 8), (5, 9), (6, 8)}
    got = {c for c in chords(14) if 1 < c.i < 7 < c.j and m14.entry(*c) == m14.entry(1, 7)}
    assert got == expect_17
    got = {c for c in chords(14) if 2 < c.i < 10 < c.j and m14.entry(*c) == m14.entry(2, 10)}
    assert got == {(3, 11), (8, 14), (9, 13), (9, 14)}


def test_sigma_tilde_examples():
    m9 = canonical_matrix(9)
    page = lambda c: m9.entry(*c)
    assert sigma_tilde(m9, (2, 9)) == 2 == pattern_count(9, page, (2, 9), "tilde")
    assert sigma_tilde(m9, (5, 9)) == 6 == pattern_count(9, page, (5, 9), "tilde")
    for c in chords(9):
        if c.i == 1:
            assert sigma_tilde(m9, c) == 0


def test_sigma_zero_without_later_chords():
    m = canonical_matrix(8)
    assert sigma(m, (6, 8)) == 0


def test_edge_crossing_count_examples():
    m9 = canonical_matrix(9)
    assert edge_crossing_count(m9, (1, 5)) == 3
    assert edge_crossing_count(m9, (5, 9)) == 6
    lonely = PageMatrix(5, (1, -1, -1, -1, -1))
    assert edge_crossing_count(lonely, (1, 3)) == 0


def test_crossing_report_examples():
    r = crossing_report(canonical_matrix(7))
    assert r.total == 9 and sum(r.per_edge.values()) == 18
    r = crossing_report(PageMatrix(4, (1, -1)))
    assert r.total == 0 and r.pairs == []
    assert crossing_report(canonical_matrix(13)).total == 225


@given(page_matrices())
def test_epsilon_matches_pair_oracle(m):
    assert epsilon(m) == brute_epsilon(m)


@given(page_matrices(max_n=9))
def test_epsilon_matches_geometry(m):
    assert epsilon(m) == geometric_epsilon(m.n, lambda c: m.entry(*c))


@given(page_matrices())
def test_sigma_matches_pattern_oracle(m):
    page = lambda c: m.entry(*c)
    for c in m.chords:
        assert sigma(m, c) == pattern_count(m.n, page, c, "sigma")
        assert sigma_tilde(m, c) == pattern_count(m.n, page, c, "tilde")


@given(page_matrices())
def test_report_invariants(m):
    r = crossing_report(m)
    assert r.total == len(r.pairs) == epsilon(m)
    assert sum(r.per_edge.values()) == 2 * r.total
    for a, b in r.pairs:
        assert chords_interleave(m.n, a, b) and m.entry(*a) == m.entry(*b)
    for c in m.chords:
        assert r.per_edge[tuple(c)] == edge_crossing_count(m, c)


@given(page_matrices())
def test_page_flip_symmetry(m):
    r, s = crossing_report(m), crossing_report(m.negated())
    assert r.total == s.total
    assert r.per_edge == s.per_edge
    assert set(r.pairs) == set(s.pairs)


@given(page_matrices())
def test_epsilon_is_sum_of_sigma(m):
    assert epsilon(m) == sum(sigma(m, c) for c in m.chords)


@given(page_matrices(max_n=16))
def test_epsilon_at_least_z(m):
    assert epsilon(m) >= z_value(m.n)


@pytest.mark.parametrize("n", [20, 33, 60])
def test_epsilon_large_canonical_agrees_with_sigma_sum(n):
    m = canonical_matrix(n)
    assert epsilon(m) == sum(sigma(m, c) for c in m.chords) == z_value(n)
