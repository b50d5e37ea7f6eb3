"""Matrix text/JSON and rerouted-diagram JSON formats.

Matrix text format::

    n=5
    +-.
    --
    +

Row i (i = 1..n-2) lists columns j = i+2..n with ``+`` for North, ``-`` for
South and ``.`` at (1, n) only.
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Union

from .canonical import canonical_matrix
from .core import Chord, Page, PageMatrix, ValidationError, is_chord, make_page_matrix
from .rerouted import ExtendedDiagram, Reroute, normalize_gap

SCHEMA = 1
Diagram = Union[PageMatrix, ExtendedDiagram]


class ParseError(ValueError):
    pass


def matrix_to_text(m: PageMatrix) -> str:
    lines = [f"n={m.n}"]
    for i in range(1, m.n - 1):
        row = ""
        for j in range(i + 2, m.n + 1):
            row += "." if (i, j) == (1, m.n) else ("+" if m.entry(i, j) == Page.NORTH else "-")
        lines.append(row)
    return "\n".join(lines) + "\n"


def matrix_from_text(text: str) -> PageMatrix:
    lines = [ln.strip() for ln in text.splitlines()]
    while lines and not lines[-1]:
        lines.pop()
    if not lines or not lines[0].startswith("n="):
        raise ParseError("line 1: expected 'n=<int>'")
    try:
        n = int(lines[0][2:])
    except ValueError:
        raise ParseError(f"line 1: bad vertex count {lines[0][2:]!r}") from None
    if n < 4:
        raise ValidationError(f"line 1: n must be >= 4, got {n}")
    if len(lines) != n - 1:
        raise ParseError(f"expected {n - 2} matrix rows after the header, got {len(lines) - 1}")
    entries: dict[Chord, int] = {}
    for i, row in enumerate(lines[1:], start=1):
        width = n - i - 1
        if len(row) != width:
            raise ParseError(f"line {i + 1}: row {i} needs {width} characters, got {len(row)}")
        for j, ch in zip(range(i + 2, n + 1), row):
            if (i, j) == (1, n):
                if ch != ".":
                    raise ValidationError(f"line {i + 1}: (1,{n}) is a spine edge and must be '.'")
            elif ch in "+-":
                entries[Chord(i, j)] = Page.NORTH if ch == "+" else Page.SOUTH
            else:
                raise ParseError(f"line {i + 1}: bad character {ch!r} at column {j}")
    return make_page_matrix(n, entries)


def matrix_to_json(m: PageMatrix) -> dict:
    return {
        "schema": SCHEMA,
        "n": m.n,
        "chords": [{"i": c.i, "j": c.j, "page": int(p)} for c, p in m.items()],
    }


def matrix_from_json(obj: dict) -> PageMatrix:
    try:
        n = int(obj["n"])
        raw = obj["chords"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"matrix JSON needs integer 'n' and list 'chords' ({exc})") from None
    entries: dict[Chord, int] = {}
    for k, item in enumerate(raw):
        try:
            i, j, page = int(item["i"]), int(item["j"]), int(item["page"])
        except (KeyError, TypeError, ValueError):
            raise ParseError(f"chords[{k}]: needs integer i, j, page") from None
        if not is_chord(n, i, j):
            raise ValidationError(f"chords[{k}]: ({i},{j}) is not a chord for n={n}")
        if page not in (1, -1):
            raise ValidationError(f"chords[{k}]: page must be 1 or -1, got {page}")
        if (i, j) in entries:
            raise ValidationError(f"chords[{k}]: duplicate chord ({i},{j})")
        entries[Chord(i, j)] = page
    return make_page_matrix(n, entries)


def diagram_to_json(d: ExtendedDiagram) -> dict:
    base = "canonical" if d.n >= 4 and d.base == canonical_matrix(d.n) else matrix_to_json(d.base)
    return {
        "schema": SCHEMA,
        "n": d.n,
        "base": base,
        "removed": [list(r.chord) for r in d.reroutes],
        "reroutes": [
            {"chord": list(r.chord), "gap": list(r.gap), "north_endpoint": r.north_endpoint, "rank": r.rank}
            for r in d.reroutes
        ],
    }


def diagram_from_json(obj: dict) -> ExtendedDiagram:
    try:
        n = int(obj["n"])
        base_obj = obj["base"]
        raw = obj.get("reroutes", [])
        removed = {tuple(int(v) for v in pair) for pair in obj.get("removed", [])}
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"diagram JSON needs 'n', 'base', 'reroutes' ({exc})") from None
    if base_obj == "canonical":
        base = canonical_matrix(n)
    elif isinstance(base_obj, dict):
        base = matrix_from_json({"n": n, **base_obj})
    else:
        raise ParseError(f"base: expected 'canonical' or a matrix object, got {base_obj!r}")
    reroutes = []
    for k, item in enumerate(raw):
        try:
            a, b = sorted(int(v) for v in item["chord"])
            gap = tuple(int(v) for v in item["gap"])
            north = int(item["north_endpoint"])
            rank = int(item.get("rank", 0))
        except (KeyError, TypeError, ValueError):
            raise ParseError(f"reroutes[{k}]: needs chord, gap, north_endpoint") from None
        if not is_chord(n, a, b):
            raise ValidationError(f"reroutes[{k}]: ({a},{b}) is not a chord for n={n}")
        reroutes.append(Reroute(Chord(a, b), normalize_gap(n, gap), north, rank))
    if removed != {tuple(r.chord) for r in reroutes}:
        raise ValidationError("removed chords and rerouted chords differ")
    return ExtendedDiagram(base, tuple(reroutes))


def dumps(d: Diagram, fmt: str = "json") -> str:
    if isinstance(d, ExtendedDiagram):
        if fmt != "json":
            raise ValueError("rerouted diagrams are stored as JSON only")
        return json.dumps(diagram_to_json(d)) + "\n"
    if fmt == "text":
        return matrix_to_text(d)
    return json.dumps(matrix_to_json(d)) + "\n"


def loads(text: str) -> Diagram:
    if text.lstrip().startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"line {exc.lineno}: {exc.msg}") from None
        if not isinstance(obj, dict):
            raise ParseError("top-level JSON value must be an object")
        return diagram_from_json(obj) if "base" in obj else matrix_from_json(obj)
    return matrix_from_text(text)


def save_diagram(d: Diagram, path: Union[str, Path], fmt: str | None = None) -> None:
    path = Path(path)
    if fmt is None:
        fmt = "text" if path.suffix in (".txt", ".mat") and isinstance(d, PageMatrix) else "json"
    path.write_text(dumps(d, fmt))


def load_diagram(path: Union[str, Path]) -> Diagram:
    return loads(Path(path).read_text())
