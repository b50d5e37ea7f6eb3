"""Minimum cross-index search over page assignments, and reroute witness search.

Assignments are bit vectors over the lexicographically ordered chords with
North = 0 and South = 1; chord 0 is the most significant bit, so integer
order is lexicographic order of assignments.
"""
from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional, Union

import numpy as np

from .core import (
    DomainError,
    Page,
    PageMatrix,
    ValidationError,
    check_chord,
    chord_index,
    chords,
    interleave,
    spine_edges,
    z_value,
)
from .cross_index import epsilon
from .freeness import find_free_hamiltonian_cycle, free_subgraph, hamiltonian_path
from .rerouted import ExtendedDiagram, extended_crossing_report, reroute_chord, tree_is_crossing_free

DEFAULT_CAP = 8
CHUNK_BITS = 22


@dataclass
class SearchResult:
    n: int
    best_value: int
    witness: Union[PageMatrix, ExtendedDiagram]
    mode: str  # "exhaustive" | "stochastic" | "reroute"
    stats: dict = field(default_factory=dict)
    flags: list[str] = field(default_factory=list)

    @property
    def reached_z(self) -> bool:
        return self.best_value == z_value(self.n)


@dataclass(frozen=True)
class AnnealConfig:
    restarts: int = 20
    steps: int = 50_000
    t0: float = 2.0
    cooling: float = 0.999


@lru_cache(maxsize=None)
def interleaving_pairs(n: int) -> tuple[tuple[int, int], ...]:
    """Index pairs (a, b), a < b, of chords whose endpoints interleave."""
    cs = chords(n)
    return tuple(
        (a, b) for a in range(len(cs)) for b in range(a + 1, len(cs)) if interleave(cs[a], cs[b])
    )


@lru_cache(maxsize=None)
def partner_lists(n: int) -> tuple[tuple[int, ...], ...]:
    out: list[list[int]] = [[] for _ in chords(n)]
    for a, b in interleaving_pairs(n):
        out[a].append(b)
        out[b].append(a)
    return tuple(tuple(p) for p in out)


def matrix_from_bits(n: int, x: int) -> PageMatrix:
    C = n * (n - 3) // 2
    return PageMatrix(n, tuple(Page.SOUTH if (x >> (C - 1 - k)) & 1 else Page.NORTH for k in range(C)))


def bits_from_matrix(m: PageMatrix) -> int:
    x = 0
    for p in m.pages:
        x = (x << 1) | (p == Page.SOUTH)
    return x


def _chunk_values(n: int, start: int, stop: int) -> np.ndarray:
    C = n * (n - 3) // 2
    x = np.arange(start, stop, dtype=np.uint64)
    bits = [((x >> np.uint64(C - 1 - k)) & np.uint64(1)).astype(np.uint8) for k in range(C)]
    eps = np.zeros(stop - start, dtype=np.int32)
    for a, b in interleaving_pairs(n):
        eps += bits[a] == bits[b]
    return eps


def _chunk_min(args: tuple[int, int, int]) -> tuple[int, int]:
    n, start, stop = args
    eps = _chunk_values(n, start, stop)
    k = int(np.argmin(eps))  # first occurrence -> least bit vector
    return int(eps[k]), start + k


def _chunks(limit: int) -> list[tuple[int, int]]:
    size = 1 << CHUNK_BITS
    return [(s, min(s + size, limit)) for s in range(0, limit, size)]


def exhaustive_min(n: int, cap: int = DEFAULT_CAP, workers: int = 1) -> SearchResult:
    """Exact minimum of epsilon over all page assignments.

    Only assignments with chord 0 on North are scanned: the global flip maps
    minimisers to minimisers and the least one always starts with North.
    """
    if n < 4:
        raise DomainError(f"exhaustive search needs n >= 4, got {n}")
    C = n * (n - 3) // 2
    if n > cap:
        raise DomainError(
            f"n={n} exceeds the exhaustive cap {cap}: 2^{C} = {2 ** C:,} assignments "
            f"(~{2 ** C * len(interleaving_pairs(n)):.2e} pair checks)"
        )
    t = time.perf_counter()
    limit = 1 << (C - 1)
    jobs = [(n, s, e) for s, e in _chunks(limit)]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_chunk_min, jobs))
    else:
        parts = [_chunk_min(j) for j in jobs]
    best, x = min(parts)
    return SearchResult(
        n, best, matrix_from_bits(n, x), "exhaustive",
        {"examined": limit, "space": 1 << C, "seconds": time.perf_counter() - t, "seed": None},
    )


def exhaustive_minimizers(n: int, cap: int = DEFAULT_CAP) -> list[PageMatrix]:
    """Every minimising assignment, in lexicographic order."""
    if n > cap:
        raise DomainError(f"n={n} exceeds the exhaustive cap {cap}")
    C = n * (n - 3) // 2
    values = np.concatenate([_chunk_values(n, s, e) for s, e in _chunks(1 << C)])
    xs = np.flatnonzero(values == values.min())
    return [matrix_from_bits(n, int(x)) for x in xs]


def delta_epsilon(m: PageMatrix, c: tuple[int, int]) -> int:
    """Change in epsilon from flipping chord c: opposite-page minus same-page partners."""
    k = chord_index(m.n)[check_chord(m.n, c)]
    same = sum(1 for q in partner_lists(m.n)[k] if m.pages[q] == m.pages[k])
    return len(partner_lists(m.n)[k]) - 2 * same


def _anneal_run(n: int, start: Optional[list[int]], cfg: AnnealConfig,
                seed_seq: np.random.SeedSequence) -> tuple[int, list[int]]:
    rng = np.random.default_rng(seed_seq)
    partners = partner_lists(n)
    C = len(partners)
    p = list(start) if start is not None else [1 - 2 * int(b) for b in rng.integers(0, 2, C)]
    # field[k] = sum of partner pages; flipping k changes epsilon by -p[k] * field[k]
    fld = [sum(p[q] for q in partners[k]) for k in range(C)]
    cur = sum(1 for a, b in interleaving_pairs(n) if p[a] == p[b])
    best, best_p = cur, p[:]
    picks = rng.integers(0, C, size=cfg.steps)
    coins = rng.random(cfg.steps)
    temp = cfg.t0
    for step in range(cfg.steps):
        k = int(picks[step])
        d = -p[k] * fld[k]
        if d <= 0 or coins[step] < math.exp(-d / temp):
            p[k] = -p[k]
            cur += d
            twice = 2 * p[k]
            for q in partners[k]:
                fld[q] += twice
            if cur < best:
                best, best_p = cur, p[:]
        temp = max(temp * cfg.cooling, 1e-9)
    return best, best_p


def stochastic_min(n: int, seed: int = 0, config: AnnealConfig = AnnealConfig(),
                   start: Optional[PageMatrix] = None, workers: int = 1) -> SearchResult:
    """Simulated annealing over single-chord flips, with restarts."""
    if n < 4:
        raise DomainError(f"search needs n >= 4, got {n}")
    t = time.perf_counter()
    children = np.random.SeedSequence(seed).spawn(max(config.restarts, 1))
    init = list(start.pages) if start is not None else None
    jobs = [(n, init, config, child) for child in children]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            runs = list(pool.map(_anneal_star, jobs))
    else:
        runs = [_anneal_star(j) for j in jobs]
    best, pages = min(runs, key=lambda r: (r[0], [p == -1 for p in r[1]]))
    witness = PageMatrix(n, tuple(pages))
    result = SearchResult(
        n, best, witness, "stochastic",
        {"examined": config.steps * len(jobs), "seconds": time.perf_counter() - t, "seed": seed,
         "restarts": len(jobs), "steps": config.steps},
    )
    assert epsilon(witness) == best
    if best < z_value(n):
        result.flags.append("INCONSISTENT")
    return result


def _anneal_star(job):
    return _anneal_run(*job)


def _linear_free_tree(d: ExtendedDiagram) -> Optional[list[tuple[int, int]]]:
    """A crossing-free spanning path: spine rotations first, then any path in the free subgraph."""
    n = d.n
    spine = spine_edges(n)
    for k in range(n):
        tree = spine[:k] + spine[k + 1:]
        if tree_is_crossing_free(d, tree):
            return tree
    free = free_subgraph(d)
    path = hamiltonian_path(n, free.edges)
    if path is None:
        return None
    return [tuple(sorted(e)) for e in zip(path, path[1:])]


def reroute_candidates(m: PageMatrix):
    """Single reroutes of m in enumeration order: chord, gap, then North endpoint."""
    for c in m.chords:
        for gap in spine_edges(m.n):
            for north in c:
                try:
                    yield reroute_chord(m, c, gap, north)
                except ValidationError:
                    continue


def reroute_witness_search(n: int = 7, cap: int = DEFAULT_CAP,
                           matrices: Optional[list[PageMatrix]] = None) -> Optional[SearchResult]:
    """First single-reroute diagram of an optimal matrix with Z(n) crossings,
    no free Hamiltonian cycle and a crossing-free linear spanning tree.

    ``matrices`` replaces the exhaustive list of optimal matrices, which is
    out of reach beyond the cap.
    """
    t = time.perf_counter()
    target = z_value(n)
    examined = 0
    optimal = exhaustive_minimizers(n, cap) if matrices is None else list(matrices)
    for m in optimal:
        for d in reroute_candidates(m):
            examined += 1
            if extended_crossing_report(d).total != target:
                continue
            if find_free_hamiltonian_cycle(d) is not None:
                continue
            tree = _linear_free_tree(d)
            if tree is None:
                continue
            return SearchResult(
                n, target, d, "reroute",
                {"examined": examined, "optimal_matrices": len(optimal), "linear_tree": tree,
                 "seconds": time.perf_counter() - t, "seed": None},
            )
    return None


def reroute_space_size(n: int, cap: int = DEFAULT_CAP) -> int:
    return sum(1 for m in exhaustive_minimizers(n, cap) for _ in reroute_candidates(m))
