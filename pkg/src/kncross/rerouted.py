"""2-page drawings with chords rerouted through a point on a spine edge.

A rerouted chord (a, b) leaves v_a on one page, crosses the spine at an
interior point w of a spine edge (the gap), and reaches v_b on the other
page. Crossings are read off the extended cyclic order in which each w is
inserted into its gap.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

from .core import (
    Chord,
    DomainError,
    Edge,
    Page,
    PageMatrix,
    ValidationError,
    check_chord,
    interleave,
    is_spine_edge,
    spine_edges,
    z_value,
)
from .cross_index import CrossingReport, edge_crossing_count
from .canonical import canonical_matrix


def normalize_gap(n: int, gap: tuple[int, int]) -> Edge:
    a, b = sorted(gap)
    if not (1 <= a and b <= n and is_spine_edge(n, a, b)):
        raise DomainError(f"{gap} is not a spine edge for n={n}")
    return (a, b)


@dataclass(frozen=True)
class Reroute:
    chord: Chord
    gap: Edge
    north_endpoint: int
    rank: int = 0

    @property
    def south_endpoint(self) -> int:
        i, j = self.chord
        return j if self.north_endpoint == i else i


@dataclass(frozen=True)
class Arc:
    """A chord or half-arc drawn on one page between two extended positions."""

    edge: Edge
    endpoint: int | None  # vertex end of a half-arc; None for whole chords
    page: int
    span: tuple[int, int]


@dataclass(frozen=True)
class ExtendedDiagram:
    base: PageMatrix
    reroutes: tuple[Reroute, ...] = ()

    def __post_init__(self) -> None:
        n = self.base.n
        seen: set[Chord] = set()
        slots: set[tuple[Edge, int]] = set()
        for r in self.reroutes:
            check_chord(n, r.chord)
            if r.chord in seen:
                raise ValidationError(f"chord {r.chord} is rerouted twice")
            seen.add(r.chord)
            if normalize_gap(n, r.gap) != r.gap:
                raise ValidationError(f"gap {r.gap} must be written as {normalize_gap(n, r.gap)}")
            if r.north_endpoint not in r.chord:
                raise ValidationError(f"north endpoint {r.north_endpoint} not on chord {r.chord}")
            if r.rank < 0 or (r.gap, r.rank) in slots:
                raise ValidationError(f"rank {r.rank} in gap {r.gap} is negative or taken")
            slots.add((r.gap, r.rank))
        pos = self.positions()
        size = len(pos)
        for r in self.reroutes:
            w = pos[("w", r.chord)]
            for v in r.chord:
                if (pos[v] - w) % size in (1, size - 1):
                    raise ValidationError(
                        f"half-arc of {r.chord} from v_{v} to its point in gap {r.gap} is degenerate"
                    )

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def removed(self) -> frozenset[Chord]:
        return frozenset(r.chord for r in self.reroutes)

    def positions(self) -> dict:
        """Position of every vertex and every ("w", chord) point on the extended cycle."""
        n = self.base.n
        by_gap: dict[Edge, list[Reroute]] = {}
        for r in self.reroutes:
            by_gap.setdefault(r.gap, []).append(r)
        order: list = []
        for v in range(1, n + 1):
            order.append(v)
            gap = (v, v + 1) if v < n else (1, n)
            # rank 0 sits next to v_g when walking v_g -> v_{g+1} (v_n -> v_1 for the closing edge)
            for r in sorted(by_gap.get(gap, []), key=lambda r: r.rank):
                order.append(("w", r.chord))
        return {label: k for k, label in enumerate(order)}

    def arcs(self) -> list[Arc]:
        pos = self.positions()
        removed = self.removed
        out = [
            Arc(tuple(c), None, int(p), (pos[c.i], pos[c.j]))
            for c, p in self.base.items()
            if c not in removed
        ]
        for r in self.reroutes:
            w = pos[("w", r.chord)]
            out.append(Arc(tuple(r.chord), r.north_endpoint, Page.NORTH, (pos[r.north_endpoint], w)))
            out.append(Arc(tuple(r.chord), r.south_endpoint, Page.SOUTH, (pos[r.south_endpoint], w)))
        return out

    def with_reroute(self, r: Reroute) -> "ExtendedDiagram":
        return ExtendedDiagram(self.base, self.reroutes + (r,))


Diagram = Union[PageMatrix, ExtendedDiagram]


def as_extended(d: Diagram) -> ExtendedDiagram:
    return d if isinstance(d, ExtendedDiagram) else ExtendedDiagram(d)


def reroute_chord(d: Diagram, chord: tuple[int, int], gap: tuple[int, int],
                  north_endpoint: int, rank: int = 0) -> ExtendedDiagram:
    """Reroute ``chord`` through ``gap``; the half at ``north_endpoint`` goes North."""
    d = as_extended(d)
    c = check_chord(d.n, chord)
    if c in d.removed:
        raise ValidationError(f"chord {c} has already been rerouted")
    return d.with_reroute(Reroute(c, normalize_gap(d.n, gap), north_endpoint, rank))


def build_dprime(n: int) -> ExtendedDiagram:
    """M_n with chord (m, n), m=(n+1)/2, rerouted through spine edge (1,2)."""
    if n < 5 or n % 2 == 0:
        raise DomainError(f"build_dprime needs odd n >= 5, got {n}")
    m = (n + 1) // 2
    return reroute_chord(canonical_matrix(n), (m, n), (1, 2), north_endpoint=m)


def extended_crossing_report(d: Diagram) -> CrossingReport:
    d = as_extended(d)
    arcs = d.arcs()
    per_edge: dict[Edge, int] = {e: 0 for e in spine_edges(d.n)}
    per_edge.update({a.edge: 0 for a in arcs})
    half: dict[tuple[Edge, int], set[Edge]] = {
        (a.edge, a.endpoint): set() for a in arcs if a.endpoint is not None
    }
    pairs: list[tuple[Edge, Edge]] = []

    def record(e: Edge, f: Edge) -> None:
        pairs.append((e, f) if e <= f else (f, e))
        per_edge[e] += 1
        per_edge[f] += 1

    for x, a in enumerate(arcs):
        for b in arcs[x + 1:]:
            if a.page != b.page or a.edge == b.edge or not interleave(a.span, b.span):
                continue
            record(a.edge, b.edge)
            if a.endpoint is not None:
                half[(a.edge, a.endpoint)].add(b.edge)
            if b.endpoint is not None:
                half[(b.edge, b.endpoint)].add(a.edge)
    for r in d.reroutes:
        record(tuple(r.chord), r.gap)
    return CrossingReport(
        total=len(pairs),
        per_edge=per_edge,
        pairs=pairs,
        half_arcs={k: frozenset(v) for k, v in half.items()},
    )


def check_lemma_3_2(n: int) -> bool:
    """c(m,n) = c(1,m) + c(2,n) + 1 on M_n with m = (n+1)/2."""
    if n < 5 or n % 2 == 0:
        raise DomainError(f"needs odd n >= 5, got {n}")
    m_n = canonical_matrix(n)
    m = (n + 1) // 2
    lhs = edge_crossing_count(m_n, (m, n))
    return lhs == edge_crossing_count(m_n, (1, m)) + edge_crossing_count(m_n, (2, n)) + 1


def check_spanning_tree(n: int, edges: Iterable[tuple[int, int]]) -> list[Edge]:
    edges = [tuple(sorted(e)) for e in edges]
    parent = list(range(n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    if len(edges) != n - 1:
        raise DomainError(f"a spanning tree on {n} vertices has {n - 1} edges, got {len(edges)}")
    for a, b in edges:
        if not (1 <= a < b <= n):
            raise DomainError(f"invalid tree edge ({a},{b})")
        ra, rb = find(a), find(b)
        if ra == rb:
            raise DomainError(f"tree edges contain a cycle through ({a},{b})")
        parent[ra] = rb
    return edges


def linear_tree(n: int) -> list[Edge]:
    """The path v_2 v_3 ... v_n v_1."""
    return [(i, i + 1) for i in range(2, n)] + [(1, n)]


def tree_is_crossing_free(d: Diagram, tree_edges: Iterable[tuple[int, int]]) -> bool:
    d = as_extended(d)
    edges = check_spanning_tree(d.n, tree_edges)
    per_edge = extended_crossing_report(d).per_edge
    return all(per_edge[e] == 0 for e in edges)


def dprime_summary(n: int) -> dict:
    d = build_dprime(n)
    rep = extended_crossing_report(d)
    m = (n + 1) // 2
    return {
        "n": n,
        "rerouted": [m, n],
        "total": rep.total,
        "z": z_value(n),
        "rerouted_count": rep.per_edge[(m, n)],
        "base_count": edge_crossing_count(d.base, (m, n)),
    }
