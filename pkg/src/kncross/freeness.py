"""Crossing-free edges and free Hamiltonian cycles of a drawing."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .core import DomainError, Edge, PageMatrix, z_value
from .cross_index import CrossingReport, crossing_report
from .rerouted import (
    Diagram,
    build_dprime,
    extended_crossing_report,
    linear_tree,
    tree_is_crossing_free,
)
from .verification import Verification

NODE_BUDGET = 10**8


class SearchBudgetExceeded(RuntimeError):
    """Backtracking visited more nodes than allowed; the answer is unknown."""


def diagram_report(d: Diagram) -> CrossingReport:
    if isinstance(d, PageMatrix):
        return crossing_report(d)
    return extended_crossing_report(d)


@dataclass(frozen=True)
class FreeSubgraph:
    n: int
    edges: frozenset[Edge]

    def adjacency(self) -> dict[int, list[int]]:
        adj: dict[int, list[int]] = {v: [] for v in range(1, self.n + 1)}
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        for v in adj:
            adj[v].sort()
        return adj


def free_subgraph(d: Diagram) -> FreeSubgraph:
    per_edge = diagram_report(d).per_edge
    return FreeSubgraph(d.n, frozenset(e for e, c in per_edge.items() if c == 0))


def hamiltonian_cycle(n: int, edges: Iterable[Edge], budget: int = NODE_BUDGET) -> Optional[tuple[int, ...]]:
    """Lexicographically least Hamiltonian cycle (v_1 first) of the graph, or None."""
    adj = FreeSubgraph(n, frozenset(tuple(sorted(e)) for e in edges)).adjacency()
    if any(len(nbrs) < 2 for nbrs in adj.values()):
        return None
    path = [1]
    visited = [False] * (n + 1)
    visited[1] = True
    nodes = 0

    def extend() -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise SearchBudgetExceeded(f"more than {budget} search nodes")
        v = path[-1]
        if len(path) == n:
            return 1 in adj[v]
        for u in adj[v]:
            if visited[u]:
                continue
            visited[u] = True
            path.append(u)
            if extend():
                return True
            path.pop()
            visited[u] = False
        return False

    return tuple(path) if extend() else None


def hamiltonian_path(n: int, edges: Iterable[Edge], budget: int = NODE_BUDGET) -> Optional[tuple[int, ...]]:
    """Some Hamiltonian path of the graph (least start vertex first), or None."""
    adj = FreeSubgraph(n, frozenset(tuple(sorted(e)) for e in edges)).adjacency()
    if any(not nbrs for nbrs in adj.values()) or sum(len(x) == 1 for x in adj.values()) > 2:
        return None
    nodes = 0

    def extend(path: list[int], visited: set[int]) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise SearchBudgetExceeded(f"more than {budget} search nodes")
        if len(path) == n:
            return True
        for u in adj[path[-1]]:
            if u not in visited:
                visited.add(u)
                path.append(u)
                if extend(path, visited):
                    return True
                path.pop()
                visited.discard(u)
        return False

    for s in range(1, n + 1):
        path = [s]
        if extend(path, {s}):
            return tuple(path)
    return None


def find_free_hamiltonian_cycle(d: Diagram, budget: int = NODE_BUDGET) -> Optional[tuple[int, ...]]:
    free = free_subgraph(d)
    return hamiltonian_cycle(free.n, free.edges, budget)


def check_no_free_edges(m: PageMatrix) -> bool:
    """True iff every chord of the 2-page drawing is crossed at least once."""
    per_edge = crossing_report(m).per_edge
    return all(per_edge[tuple(c)] > 0 for c in m.chords)


def check_dprime(n: int) -> Verification:
    """Crossing total, T^L freeness and free-cycle absence for the rerouted M_n (odd n >= 5)."""
    d = build_dprime(n)
    report = Verification(f"rerouted M_{n}")
    total = extended_crossing_report(d).total
    report.add("total crossings = Z(n)", total == z_value(n), f"{total} vs {z_value(n)}")
    report.add("T^L = v_2 ... v_n v_1 crossing-free", tree_is_crossing_free(d, linear_tree(n)))
    cycle = find_free_hamiltonian_cycle(d)
    report.add("no free Hamiltonian cycle", cycle is None, "" if cycle is None else f"found {cycle}")
    return report


def verify_theorem_1(n: int) -> Verification:
    if n < 9 or n % 2 == 0:
        raise DomainError(f"verify_theorem_1 needs odd n >= 9, got {n} (n=7 goes through the witness search)")
    return check_dprime(n)
