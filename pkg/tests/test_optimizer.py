import numpy as np
import pytest
from hypothesis import given

from kncross.canonical import canonical_matrix
from kncross.core import DomainError, PageMatrix, chords, z_value
from kncross.cross_index import epsilon
from kncross.freeness import find_free_hamiltonian_cycle
from kncross.optimizer import (
    AnnealConfig,
    bits_from_matrix,
    delta_epsilon,
    exhaustive_min,
    exhaustive_minimizers,
    matrix_from_bits,
    reroute_space_size,
    reroute_witness_search,
    stochastic_min,
)
from kncross.rerouted import Reroute, extended_crossing_report, tree_is_crossing_free

from conftest import page_matrices
from oracles import geometric_epsilon, geometric_extended_total


@pytest.mark.parametrize("n, expected", [(4, 0), (5, 1), (6, 3), (7, 9), (8, 18)])
def test_exhaustive_min(n, expected):
    res = exhaustive_min(n)
    assert res.best_value == expected == z_value(n)
    assert epsilon(res.witness) == expected
    assert res.reached_z
    assert res.stats["space"] == 2 ** (n * (n - 3) // 2)


def test_exhaustive_min_n5_brute_force():
    # every assignment, scored by the geometric oracle
    values = [geometric_epsilon(5, dict(zip(chords(5), matrix_from_bits(5, x).pages)).get)
              for x in range(32)]
    assert min(values) == 1
    assert exhaustive_min(5).witness == matrix_from_bits(5, values.index(1))


def test_exhaustive_cap():
    with pytest.raises(DomainError, match="2\\^27"):
        exhaustive_min(9)
    with pytest.raises(DomainError):
        exhaustive_minimizers(9)


def test_exhaustive_workers_agree():
    assert exhaustive_min(8, workers=2).witness == exhaustive_min(8).witness


@pytest.mark.parametrize("n", [5, 6, 7])
def test_minimizers_closed_under_flip(n):
    ms = exhaustive_minimizers(n)
    assert set(ms) == {m.negated() for m in ms}
    assert all(epsilon(m) == z_value(n) for m in ms)
    assert ms == sorted(ms, key=bits_from_matrix)
    assert exhaustive_min(n).witness == ms[0]


@given(page_matrices())
def test_bits_round_trip(m):
    assert matrix_from_bits(m.n, bits_from_matrix(m)) == m


def test_delta_epsilon_random_flips(rng):
    checked = 0
    while checked < 500:
        n = int(rng.integers(4, 13))
        m = PageMatrix(n, tuple(int(v) for v in rng.choice([1, -1], n * (n - 3) // 2)))
        c = chords(n)[int(rng.integers(len(chords(n))))]
        flipped = m.flip(c)
        assert epsilon(flipped) - epsilon(m) == delta_epsilon(m, c)
        assert delta_epsilon(flipped, c) == -delta_epsilon(m, c)
        checked += 1


def test_delta_epsilon_n4():
    assert delta_epsilon(PageMatrix(4, (1, 1)), (1, 3)) == -1
    assert delta_epsilon(PageMatrix(4, (1, -1)), (1, 3)) == 1


def test_stochastic_reaches_z_n13():
    res = stochastic_min(13, seed=1, config=AnnealConfig(restarts=4, steps=20_000))
    assert res.best_value == 225
    assert epsilon(res.witness) == 225
    assert res.flags == []


def test_stochastic_zero_steps_from_canonical():
    res = stochastic_min(9, seed=0, config=AnnealConfig(restarts=1, steps=0), start=canonical_matrix(9))
    assert res.best_value == 36
    assert res.witness == canonical_matrix(9)


@pytest.mark.parametrize("seed", range(8))
def test_stochastic_never_below_z(seed):
    n = 6 + seed % 5
    res = stochastic_min(n, seed=seed, config=AnnealConfig(restarts=2, steps=2000))
    assert res.best_value >= z_value(n)
    assert epsilon(res.witness) == res.best_value


def test_stochastic_reproducible():
    cfg = AnnealConfig(restarts=3, steps=3000)
    a = stochastic_min(11, seed=7, config=cfg)
    b = stochastic_min(11, seed=7, config=cfg)
    c = stochastic_min(11, seed=7, config=cfg, workers=2)
    assert a.witness == b.witness == c.witness
    assert a.best_value == b.best_value == c.best_value


def test_witness_search_n7():
    res = reroute_witness_search(7)
    assert res is not None
    d = res.witness
    assert len(d.reroutes) == 1
    assert extended_crossing_report(d).total == 9 == res.best_value
    rs = [(r.chord, r.gap, r.north_endpoint, r.rank) for r in d.reroutes]
    assert geometric_extended_total(7, lambda c: d.base.entry(*c), rs)[0] == 9
    assert find_free_hamiltonian_cycle(d) is None
    tree = res.stats["linear_tree"]
    assert tree_is_crossing_free(d, tree)
    assert epsilon(d.base) == 9
    assert d.reroutes[0] == Reroute((1, 4), (5, 6), 1, 0)


def test_witness_search_n5_exhausts():
    assert reroute_witness_search(5) is None
    assert reroute_space_size(5) > 0


def test_witness_search_n9_on_canonical():
    res = reroute_witness_search(9, matrices=[canonical_matrix(9)])
    assert res is not None
    assert extended_crossing_report(res.witness).total == 36
    assert find_free_hamiltonian_cycle(res.witness) is None
    assert res.witness.reroutes[0] == Reroute((1, 4), (2, 3), 4, 0)
