"""Vertices on a spine cycle, chords, page assignments and Z(n).

Vertices are labelled 1..n in clockwise order along the spine cycle
v_1 v_2 ... v_n v_1. A chord is any edge of K_n that is not a spine edge;
each chord is drawn on one of two pages (North = +1, South = -1).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Mapping, NamedTuple

import numpy as np


class DomainError(ValueError):
    """Argument outside the domain of an operation."""


class ValidationError(ValueError):
    """A page assignment or diagram violates its invariants."""


class Page(enum.IntEnum):
    NORTH = 1
    SOUTH = -1

    @property
    def flipped(self) -> "Page":
        return Page(-self.value)


class Chord(NamedTuple):
    i: int
    j: int

    def __str__(self) -> str:
        return f"({self.i},{self.j})"


Edge = tuple[int, int]


def z_value(n: int) -> int:
    """Guy-Hill value (1/4)*floor(n/2)*floor((n-1)/2)*floor((n-2)/2)*floor((n-3)/2)."""
    if n < 1:
        raise DomainError(f"z_value needs n >= 1, got {n}")
    prod = (n // 2) * ((n - 1) // 2) * ((n - 2) // 2) * ((n - 3) // 2)
    assert prod % 4 == 0
    return prod // 4


def is_spine_edge(n: int, i: int, j: int) -> bool:
    i, j = min(i, j), max(i, j)
    return j == i + 1 or (i, j) == (1, n)


def spine_edges(n: int) -> list[Edge]:
    """Spine edges in the order (1,2), (2,3), ..., (n-1,n), (1,n)."""
    return [(i, i + 1) for i in range(1, n)] + [(1, n)]


def is_chord(n: int, i: int, j: int) -> bool:
    return 1 <= i < j <= n and j >= i + 2 and (i, j) != (1, n)


def check_chord(n: int, c: tuple[int, int]) -> Chord:
    i, j = c
    if not is_chord(n, i, j):
        raise DomainError(f"({i},{j}) is not a chord of the {n}-vertex spine")
    return Chord(i, j)


@lru_cache(maxsize=None)
def _chords(n: int) -> tuple[Chord, ...]:
    return tuple(
        Chord(i, j) for i in range(1, n + 1) for j in range(i + 2, n + 1) if (i, j) != (1, n)
    )


def chords(n: int) -> list[Chord]:
    """All n(n-3)/2 chords in lexicographic order."""
    if n < 4:
        raise DomainError(f"chords need n >= 4, got {n}")
    return list(_chords(n))


@lru_cache(maxsize=None)
def chord_index(n: int) -> dict[Chord, int]:
    return {c: k for k, c in enumerate(_chords(n))}


def interleave(a: tuple[int, int], b: tuple[int, int]) -> bool:
    """Strict interleaving of two endpoint pairs of distinct points on a circle.

    Works for any totally ordered labels; pairs sharing an endpoint never interleave.
    """
    i, j = sorted(a)
    k, l = sorted(b)
    if i > k:
        i, j, k, l = k, l, i, j
    return i < k < j < l


def chords_interleave(n: int, c1: tuple[int, int], c2: tuple[int, int]) -> bool:
    c1, c2 = check_chord(n, c1), check_chord(n, c2)
    if c1 == c2:
        raise DomainError(f"chords must be distinct, got {c1} twice")
    return interleave(c1, c2)


@dataclass(frozen=True)
class PageMatrix:
    """Page assignment M(D;H); ``pages[k]`` is the page of ``chords(n)[k]``."""

    n: int
    pages: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 4:
            raise ValidationError(f"page matrix needs n >= 4, got {self.n}")
        expected = self.n * (self.n - 3) // 2
        if len(self.pages) != expected:
            raise ValidationError(f"expected {expected} chord pages, got {len(self.pages)}")
        bad = [k for k, p in enumerate(self.pages) if p not in (1, -1)]
        if bad:
            c = _chords(self.n)[bad[0]]
            raise ValidationError(f"chord {c} has page {self.pages[bad[0]]!r}, not +1/-1")
        # normalise IntEnum members to plain ints so equality and hashing are by value
        object.__setattr__(self, "pages", tuple(int(p) for p in self.pages))

    @property
    def chords(self) -> list[Chord]:
        return list(_chords(self.n))

    def page(self, c: tuple[int, int]) -> Page:
        return Page(self.pages[chord_index(self.n)[check_chord(self.n, c)]])

    def entry(self, i: int, j: int) -> int:
        """a_(i,j): +1/-1 on chords, 0 elsewhere (for i < j)."""
        if i > j:
            i, j = j, i
        if not is_chord(self.n, i, j):
            return 0
        return self.pages[chord_index(self.n)[Chord(i, j)]]

    def items(self) -> Iterable[tuple[Chord, Page]]:
        return ((c, Page(p)) for c, p in zip(_chords(self.n), self.pages))

    def flip(self, c: tuple[int, int]) -> "PageMatrix":
        k = chord_index(self.n)[check_chord(self.n, c)]
        pages = list(self.pages)
        pages[k] = -pages[k]
        return PageMatrix(self.n, tuple(pages))

    def negated(self) -> "PageMatrix":
        return PageMatrix(self.n, tuple(-p for p in self.pages))

    def as_array(self) -> np.ndarray:
        """Dense (n+1)x(n+1) integer matrix, 1-indexed, upper triangle only."""
        a = np.zeros((self.n + 1, self.n + 1), dtype=np.int8)
        for (i, j), p in zip(_chords(self.n), self.pages):
            a[i, j] = p
        return a

    @cached_property
    def _arrays(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        cs = _chords(self.n)
        ii = np.fromiter((c.i for c in cs), dtype=np.int64, count=len(cs))
        jj = np.fromiter((c.j for c in cs), dtype=np.int64, count=len(cs))
        pp = np.asarray(self.pages, dtype=np.int64)
        return ii, jj, pp


def make_page_matrix(n: int, entries: Mapping[tuple[int, int], int]) -> PageMatrix:
    """Validate a chord -> page map and build the matrix."""
    if n < 4:
        raise ValidationError(f"page matrix needs n >= 4, got {n}")
    for key in entries:
        i, j = key
        if not is_chord(n, i, j):
            raise ValidationError(f"entry ({i},{j}) is not a chord for n={n}")
    pages = []
    for c in _chords(n):
        if c not in entries:
            raise ValidationError(f"missing page for chord {c}")
        pages.append(int(entries[c]))
    return PageMatrix(n, tuple(pages))


def uniform_matrix(n: int, page: int = Page.NORTH) -> PageMatrix:
    return PageMatrix(n, (int(page),) * (n * (n - 3) // 2))
