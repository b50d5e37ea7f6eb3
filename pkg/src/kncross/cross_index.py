"""Cross-index of a 2-page drawing and per-chord crossing counts."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .core import Chord, Edge, PageMatrix, check_chord, spine_edges


@dataclass(frozen=True)
class CrossingReport:
    """Crossings of a drawing.

    ``per_edge`` holds c_D(e) for every edge (spine edges included);
    ``pairs`` lists each crossing once as an ordered-by-edge pair.
    ``half_arcs`` is only populated for rerouted diagrams: it maps
    (chord, endpoint) to the set of edges crossing that half-arc.
    """

    total: int
    per_edge: dict[Edge, int]
    pairs: list[tuple[Edge, Edge]]
    half_arcs: dict[tuple[Edge, int], frozenset[Edge]] = field(default_factory=dict)

    def crossing_set(self, e: Edge) -> set[Edge]:
        out = set()
        for a, b in self.pairs:
            if a == e:
                out.add(b)
            elif b == e:
                out.add(a)
        return out

    def to_json(self) -> dict:
        return {
            "total": self.total,
            "per_edge": [{"edge": list(e), "count": c} for e, c in sorted(self.per_edge.items())],
            "pairs": [[list(a), list(b)] for a, b in self.pairs],
        }


def epsilon(m: PageMatrix) -> int:
    """Sum over chord pairs with i<k<j<l of floor((a_ij * a_kl + 1) / 2)."""
    ii, jj, pp = m._arrays
    total = 0
    for a in range(len(pp)):
        # chords are sorted by i, so partners with k > i sit after a
        k, l, q = ii[a + 1:], jj[a + 1:], pp[a + 1:]
        mask = (k > ii[a]) & (k < jj[a]) & (l > jj[a])
        total += int(np.sum((pp[a] * q[mask] + 1) // 2))
    return total


def sigma(m: PageMatrix, c: tuple[int, int]) -> int:
    """Same-page chords (k,l) with i < k < j < l."""
    i, j = check_chord(m.n, c)
    ii, jj, pp = m._arrays
    p = m.entry(i, j)
    return int(np.count_nonzero((ii > i) & (ii < j) & (jj > j) & (pp == p)))


def sigma_tilde(m: PageMatrix, c: tuple[int, int]) -> int:
    """Same-page chords (k,l) with k < i < l < j."""
    i, j = check_chord(m.n, c)
    ii, jj, pp = m._arrays
    p = m.entry(i, j)
    return int(np.count_nonzero((ii < i) & (jj > i) & (jj < j) & (pp == p)))


def edge_crossing_count(m: PageMatrix, c: tuple[int, int]) -> int:
    return sigma(m, c) + sigma_tilde(m, c)


def sigma_all(m: PageMatrix) -> dict[Chord, int]:
    return {c: sigma(m, c) for c in m.chords}


def crossing_report(m: PageMatrix) -> CrossingReport:
    ii, jj, pp = m._arrays
    cs = m.chords
    per_edge: dict[Edge, int] = {e: 0 for e in spine_edges(m.n)}
    per_edge.update({tuple(c): 0 for c in cs})
    pairs = []
    for a in range(len(cs)):
        mask = (ii > ii[a]) & (ii < jj[a]) & (jj > jj[a]) & (pp == pp[a])
        for b in np.flatnonzero(mask):
            e, f = tuple(cs[a]), tuple(cs[b])
            pairs.append((e, f))
            per_edge[e] += 1
            per_edge[f] += 1
    return CrossingReport(total=len(pairs), per_edge=per_edge, pairs=pairs)
