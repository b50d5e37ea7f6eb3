"""The canonical optimal page matrix M_n and its block-decomposition check.

The optimality argument for M_n splits the North chords into blocks N_t and
the South chords into blocks S_t, one case per residue of n mod 4, and gives
a closed-form polynomial for the sum of sigma over each block. Here every
block is materialised as an explicit index set so the argument can be
checked by enumeration.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .core import Chord, DomainError, Page, PageMatrix, chords, is_chord, z_value
from .cross_index import epsilon, sigma_all
from .verification import Verification


def is_canonical_north(n: int, i: int, j: int) -> bool:
    s = i + j
    if n % 2 == 0:
        return n + 2 <= 2 * s <= 2 * n or 2 * s >= 3 * n + 2
    return n + 3 <= 2 * s <= 2 * n or 2 * s >= 3 * n + 1


def canonical_matrix(n: int) -> PageMatrix:
    if n < 4:
        raise DomainError(f"canonical matrix needs n >= 4, got {n}")
    return PageMatrix(
        n, tuple(Page.NORTH if is_canonical_north(n, i, j) else Page.SOUTH for i, j in chords(n))
    )


def _q(*factors: int) -> Fraction:
    out = Fraction(1)
    for f in factors:
        out *= f
    return out


@dataclass(frozen=True)
class Block:
    name: str
    contains: Callable[[int, int, int], bool]  # (i, j, n) -> membership
    closed_form: Callable[[int], Fraction]


F = Fraction

# Index sets are written with the same inequalities as the proof; F keeps
# half-integer bounds such as (n+3)/2 exact.
_BLOCKS: dict[int, list[Block]] = {
    0: [
        Block("N1", lambda i, j, n: F(n + 2, 2) - j <= i <= j - 2 and F(n + 8, 4) <= j <= F(n, 2),
              lambda n: _q(n, n, n - 2, n - 4) / 384),
        Block("N2", lambda i, j, n: 1 <= i <= n - j and F(n + 2, 2) <= j <= F(3 * n, 4),
              lambda n: _q(n, 5 * n - 4, n - 4, n - 4) / 1536),
        Block("N3", lambda i, j, n: 1 <= i <= n - j and F(3 * n + 4, 4) <= j <= n - 1,
              lambda n: _q(n, n - 4, n * n - 4 * n + 16) / 768),
        Block("N4", lambda i, j, n: F(3 * n + 2, 2) - j <= i <= j - 2 and F(3 * n + 8, 4) <= j <= n,
              lambda n: _q(n, n, n - 4, n - 8) / 1536),
        Block("S1", lambda i, j, n: 1 <= i <= j - 2 and 3 <= j <= F(n, 4),
              lambda n: _q(n, n - 4, n - 8, 5 * n - 12) / 6144),
        Block("S2", lambda i, j, n: 1 <= i <= F(n, 2) - j and F(n + 4, 4) <= j <= F(n - 2, 2),
              lambda n: _q(n, n - 4, 11 * n * n - 44 * n + 32) / 6144),
        Block("S3", lambda i, j, n: n - j + 1 <= i <= F(n, 2) and F(n + 4, 2) <= j <= F(3 * n, 4),
              lambda n: _q(n, n + 4, n - 4, 3 * n - 8) / 1536),
        Block("S4", lambda i, j, n: F(n + 2, 2) <= i <= j - 2 and F(n + 6, 2) <= j <= F(3 * n, 4),
              lambda n: _q(n, n - 4, n - 8, 3 * n - 20) / 6144),
        Block("S5", lambda i, j, n: n - j + 1 <= i <= F(n, 2) and F(3 * n + 4, 4) <= j <= n - 1,
              lambda n: _q(n, n + 1, n - 4, n - 4) / 384),
        Block("S6", lambda i, j, n: 2 <= i <= F(n, 2) and j == n, lambda n: F(0)),
        Block("S7", lambda i, j, n: F(n + 2, 2) <= i <= F(3 * n, 2) - j and F(3 * n + 4, 4) <= j <= n - 1,
              lambda n: _q(n, n - 4, n - 8, n - 12) / 6144),
    ],
    1: [
        Block("N1", lambda i, j, n: F(n + 3, 2) - j <= i <= j - 2 and F(n + 7, 4) <= j <= F(n - 1, 2),
              lambda n: _q(n - 1, n - 3, n - 5, n - 5) / 384),
        Block("N2", lambda i, j, n: 1 <= i <= F(n - 3, 2) and j == F(n + 1, 2),
              lambda n: _q(n - 1, n - 3, n - 5) / 48),
        # lower bound on j is (n+3)/2, as in the block's sum; (n+5)/2 drops the column j=(n+3)/2
        Block("N3", lambda i, j, n: 1 <= i <= n - j and F(n + 3, 2) <= j <= F(3 * n + 1, 4),
              lambda n: _q(n - 1, 5 * n**3 - 43 * n * n + 231 * n - 321) / 1536),
        Block("N4", lambda i, j, n: 1 <= i <= n - j and F(3 * n + 5, 4) <= j <= n - 1,
              lambda n: _q(n - 1, n - 5, n * n - 2 * n + 9) / 768),
        Block("N5", lambda i, j, n: F(3 * n + 1, 2) - j <= i <= j - 2 and F(3 * n + 5, 4) <= j <= n,
              lambda n: _q(n + 3, n - 1, n - 5, n - 5) / 1536),
        Block("S1", lambda i, j, n: 1 <= i <= j - 2 and 3 <= j <= F(n - 1, 4),
              lambda n: _q(n - 1, n - 5, n - 9, 5 * n - 1) / 6144),
        Block("S2", lambda i, j, n: F(n + 3, 4) <= j <= F(n + 1, 2) - i and 1 <= i <= F(n - 5, 4),
              lambda n: _q(n + 3, n - 1, n - 5, 11 * n + 13) / 6144),
        Block("S3", lambda i, j, n: n - j + 1 <= i <= F(n - 1, 2) and F(n + 3, 2) <= j <= F(3 * n - 3, 4),
              lambda n: _q(n - 1, n - 1, n - 5, n - 5) / 512),
        Block("S4", lambda i, j, n: F(n + 1, 2) <= i <= j - 2 and F(n + 5, 2) <= j <= F(3 * n - 3, 4),
              lambda n: _q(n - 1, n - 5, n - 9, 3 * n - 7) / 6144),
        Block("S5", lambda i, j, n: n - j + 1 <= i <= F(n - 1, 2) and F(3 * n + 1, 4) <= j <= n - 1,
              lambda n: _q(n + 3, n - 1, n - 2, n - 5) / 384),
        Block("S6", lambda i, j, n: 2 <= i <= F(n - 1, 2) and j == n, lambda n: F(0)),
        Block("S7", lambda i, j, n: F(3 * n + 1, 4) <= j <= F(3 * n - 1, 2) - i and F(n + 1, 2) <= i <= F(3 * n - 7, 4),
              lambda n: _q(n + 3, n - 1, n - 5, n - 9) / 6144),
    ],
    2: [
        Block("N1", lambda i, j, n: F(n + 2, 2) - j <= i <= j - 2 and F(n + 6, 4) <= j <= F(n, 2),
              lambda n: _q(n + 2, n - 2, n * n - 6 * n + 12) / 384),
        Block("N2", lambda i, j, n: 1 <= i <= n - j and F(n + 2, 2) <= j <= F(3 * n + 2, 4),
              lambda n: _q(n + 2, n - 2, 5 * n * n - 36 * n + 84) / 1536),
        Block("N3", lambda i, j, n: 1 <= i <= n - j and F(3 * n + 6, 4) <= j <= n - 1,
              lambda n: _q(n - 2, n - 6, n * n - 4 * n + 12) / 768),
        Block("N4", lambda i, j, n: F(3 * n + 2, 2) - j <= i <= j - 2 and F(3 * n + 6, 4) <= j <= n,
              lambda n: _q(n - 2, n + 2, n - 6, n - 6) / 1536),
        Block("S1", lambda i, j, n: 1 <= i <= j - 2 and 3 <= j <= F(n - 2, 4),
              lambda n: _q(n - 2, n - 6, n - 10, 5 * n - 6) / 6144),
        Block("S2", lambda i, j, n: F(n + 2, 4) <= j <= F(n, 2) - i and 1 <= i <= F(n - 6, 4),
              lambda n: _q(n + 2, n - 2, n - 6, 11 * n + 2) / 6144),
        Block("S3", lambda i, j, n: n - j + 1 <= i <= F(n, 2) and F(n + 4, 2) <= j <= F(3 * n - 2, 4),
              lambda n: _q(n + 2, n - 2, n - 6, 3 * n - 2) / 1536),
        Block("S4", lambda i, j, n: F(n + 2, 2) <= i <= j - 2 and F(n + 6, 2) <= j <= F(3 * n - 2, 4),
              lambda n: _q(n - 2, n - 6, n - 10, 3 * n - 10) / 6144),
        # lower bound on j is (3n+2)/4, as in the block's sum; (3n+10)/4 leaves two columns uncovered
        Block("S5", lambda i, j, n: n - j + 1 <= i <= F(n, 2) and F(3 * n + 2, 4) <= j <= n - 1,
              lambda n: _q(n, n + 2, n - 2, n - 4) / 384),
        Block("S6", lambda i, j, n: 2 <= i <= F(n, 2) and j == n, lambda n: F(0)),
        Block("S7", lambda i, j, n: F(3 * n + 2, 4) <= j <= F(3 * n, 2) - i and F(n + 2, 2) <= i <= F(3 * n - 6, 4),
              lambda n: _q(n + 2, n - 2, n - 6, n - 10) / 6144),
    ],
    3: [
        Block("N1", lambda i, j, n: F(n + 3, 2) - j <= i <= j - 2 and F(n + 9, 4) <= j <= F(n - 1, 2),
              lambda n: _q(n - 3, n - 7, n * n - 4 * n + 7) / 384),
        Block("N2", lambda i, j, n: 1 <= i <= F(n - 3, 2) and j == F(n + 1, 2),
              lambda n: _q(n - 1, n - 3, n - 5) / 48),
        # lower bound on j is (n+3)/2, as in the block's sum
        Block("N3", lambda i, j, n: 1 <= i <= n - j and F(n + 3, 2) <= j <= F(3 * n - 1, 4),
              lambda n: _q(n - 3, 5 * n**3 - 41 * n * n + 175 * n - 163) / 1536),
        Block("N4", lambda i, j, n: 1 <= i <= n - j and F(3 * n + 3, 4) <= j <= n - 1,
              lambda n: _q(n + 1, n - 3, n * n - 2 * n + 13) / 768),
        Block("N5", lambda i, j, n: F(3 * n + 1, 2) - j <= i <= j - 2 and F(3 * n + 7, 4) <= j <= n,
              lambda n: _q(n - 3, n - 7, n + 1, n + 1) / 1536),
        Block("S1", lambda i, j, n: 1 <= i <= j - 2 and 3 <= j <= F(n + 1, 4),
              lambda n: _q(n + 1, n - 3, n - 7, 5 * n - 7) / 6144),
        Block("S2", lambda i, j, n: F(n + 5, 4) <= j <= F(n + 1, 2) - i and 1 <= i <= F(n - 3, 4),
              lambda n: _q(n - 3, n + 1, 11 * n * n - 22 * n - 1) / 6144),
        Block("S3", lambda i, j, n: n - j + 1 <= i <= F(n - 1, 2) and F(n + 3, 2) <= j <= F(3 * n - 1, 4),
              lambda n: _q(n + 1, n - 3, n - 3, n - 3) / 512),
        Block("S4", lambda i, j, n: F(n + 1, 2) <= i <= j - 2 and F(n + 5, 2) <= j <= F(3 * n - 1, 4),
              lambda n: _q(n + 1, n - 3, n - 7, 3 * n - 17) / 6144),
        Block("S5", lambda i, j, n: n - j + 1 <= i <= F(n - 1, 2) and F(3 * n + 3, 4) <= j <= n - 1,
              lambda n: _q(n + 1, n - 1, n - 3, n - 5) / 384),
        Block("S6", lambda i, j, n: 2 <= i <= F(n - 1, 2) and j == n, lambda n: F(0)),
        Block("S7", lambda i, j, n: F(3 * n + 3, 4) <= j <= F(3 * n - 1, 2) - i and F(n + 1, 2) <= i <= F(3 * n - 5, 4),
              lambda n: _q(n + 1, n - 3, n - 7, n - 11) / 6144),
    ],
}

# Boundaries changed from the printed set definitions, by residue.
CORRECTIONS: dict[int, list[str]] = {
    0: [],
    1: ["N3: set bound (n+5)/2 <= j replaced by (n+3)/2 <= j (the bound its sum uses)"],
    2: ["S5: set bound (3n+10)/4 <= j replaced by (3n+2)/4 <= j (the bound its sum uses; "
        "upper bound kept at n-1 since j=n belongs to S6)"],
    3: ["N3: set bound (n+5)/2 <= j replaced by (n+3)/2 <= j (the bound its sum uses)",
        "N5: the sum's lower limit (3m+1)/2-j reads (3n+1)/2-j, matching the set definition"],
}


@dataclass(frozen=True)
class BlockDecomposition:
    n: int
    residue: int
    north_blocks: dict[str, frozenset[Chord]]
    south_blocks: dict[str, frozenset[Chord]]
    closed_forms: dict[str, int | Fraction]
    corrections: list[str] = field(default_factory=list)

    @property
    def blocks(self) -> dict[str, frozenset[Chord]]:
        return {**self.north_blocks, **self.south_blocks}


def block_decomposition(n: int) -> BlockDecomposition:
    if n < 8:
        raise DomainError(f"block decomposition needs n >= 8, got {n}")
    r = n % 4
    north, south, forms = {}, {}, {}
    for b in _BLOCKS[r]:
        members = frozenset(
            Chord(i, j)
            for i in range(1, n + 1)
            for j in range(1, n + 1)
            if b.contains(i, j, n)
        )
        (north if b.name[0] == "N" else south)[b.name] = members
        value = b.closed_form(n)
        forms[b.name] = int(value) if value.denominator == 1 else value
    return BlockDecomposition(n, r, north, south, forms, list(CORRECTIONS[r]))


def _partition_check(report: Verification, label: str, blocks: dict[str, frozenset[Chord]],
                     target: set[Chord]) -> None:
    names = list(blocks)
    overlaps = [
        (a, b, sorted(blocks[a] & blocks[b])[:3])
        for x, a in enumerate(names) for b in names[x + 1:] if blocks[a] & blocks[b]
    ]
    union = frozenset().union(*blocks.values())
    missing, extra = sorted(target - union), sorted(union - target)
    detail = []
    if overlaps:
        detail.append("overlaps " + "; ".join(f"{a}&{b} e.g. {c}" for a, b, c in overlaps))
    if missing:
        detail.append(f"uncovered {missing[:5]}")
    if extra:
        detail.append(f"outside {label} {extra[:5]}")
    report.add(f"{label} blocks partition {label}", not detail, ", ".join(detail))


def verify_blocks(n: int) -> Verification:
    """Check partition, per-block sigma sums and the grand total for M_n."""
    dec = block_decomposition(n)
    m = canonical_matrix(n)
    report = Verification(f"blocks n={n} (n = {dec.residue} mod 4)")
    report.notes.extend(dec.corrections)
    north = {c for c, p in m.items() if p == Page.NORTH}
    south = {c for c, p in m.items() if p == Page.SOUTH}
    _partition_check(report, "N", dec.north_blocks, north)
    _partition_check(report, "S", dec.south_blocks, south)

    sig = sigma_all(m)
    for name, members in dec.blocks.items():
        form = dec.closed_forms[name]
        if isinstance(form, Fraction):
            report.add(f"{name} closed form integral", False, f"{form}")
            continue
        bad = [c for c in members if not is_chord(n, *c)]
        enumerated = sum(sig[c] for c in members if c in sig)
        detail = f"enumerated {enumerated}, closed form {form}"
        if bad:
            detail += f", non-chords {sorted(bad)[:3]}"
        report.add(f"{name} sigma sum", enumerated == form and not bad, detail)

    grand = sum(v for v in dec.closed_forms.values())
    report.add("sum of closed forms = Z(n)", grand == z_value(n), f"{grand} vs {z_value(n)}")
    eps = epsilon(m)
    report.add("epsilon(M_n) = Z(n)", eps == z_value(n), f"{eps} vs {z_value(n)}")
    return report
