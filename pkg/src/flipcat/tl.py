"""Temperley-Lieb diagrams at loop value 1, with a loop counter.

A diagram of ``TL_n`` pairs the endpoints ``1..n`` (top row, left to right)
and ``n+1..2n`` (bottom row, right to left).  The bottom endpoint in column
``x`` therefore carries the label ``2n + 1 - x``.  In a product ``a * b``
the diagram ``a`` sits on top of ``b``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import Matching, Triangulation, matching_to_triangulation
from .errors import IndexOutOfRange, SizeMismatch

Word = tuple[int, ...]


@dataclass(frozen=True)
class TLDiagram:
    n: int
    pairing: Matching
    loops: int = 0

    def __mul__(self, other: TLDiagram) -> TLDiagram:
        return multiply(self, other)

    def to_json(self) -> dict:
        out = self.pairing.to_json()
        out["loops"] = self.loops
        return out


def identity_diagram(n: int) -> TLDiagram:
    if n < 1:
        raise IndexOutOfRange(f"n must be positive, got {n}")
    arcs = tuple((k, 2 * n + 1 - k) for k in range(1, n + 1))
    return TLDiagram(n, Matching(n, arcs))


def generator_diagram(n: int, i: int) -> TLDiagram:
    """The generator ``u_i``: cups at ``(i, i+1)`` and ``(2n-i, 2n-i+1)``."""
    if not 1 <= i <= n - 1:
        raise IndexOutOfRange(f"generator index {i} outside 1..{n - 1}")
    arcs = [(i, i + 1), (2 * n - i, 2 * n - i + 1)]
    arcs += [(k, 2 * n + 1 - k) for k in range(1, n + 1) if k not in (i, i + 1)]
    return TLDiagram(n, Matching(n, tuple(sorted(arcs))))


def _find(parent: list[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def multiply(a: TLDiagram, b: TLDiagram) -> TLDiagram:
    """Stack ``a`` over ``b``, trace the strands and count closed loops.

    Endpoints of ``a`` are nodes ``0..2n-1`` and those of ``b`` are
    ``2n..4n-1``; a union-find joins every strand and the glued middle row.
    Components without an outer endpoint are loops.
    """
    if a.n != b.n:
        raise SizeMismatch(f"cannot multiply TL_{a.n} by TL_{b.n}")
    n = a.n
    size = 2 * n
    parent = list(range(2 * size))

    def union(x, y):
        rx, ry = _find(parent, x), _find(parent, y)
        if rx != ry:
            parent[rx] = ry

    for x, y in a.pairing.arcs:
        union(x - 1, y - 1)
    for x, y in b.pairing.arcs:
        union(size + x - 1, size + y - 1)
    for col in range(1, n + 1):
        # bottom of a in column col meets top of b in column col
        union(size - col, size + col - 1)

    # outer endpoints: top of a keeps labels 1..n, bottom of b keeps n+1..2n
    outer = {node: node + 1 for node in range(n)}
    outer.update({size + node: node + 1 for node in range(n, size)})
    ends: dict[int, list[int]] = {}
    for node, label in outer.items():
        ends.setdefault(_find(parent, node), []).append(label)
    arcs = tuple(sorted(tuple(sorted(v)) for v in ends.values()))
    roots = {_find(parent, x) for x in range(2 * size)}
    loops = len(roots) - len(ends)
    return TLDiagram(n, Matching(n, arcs), a.loops + b.loops + loops)


def evaluate_word(word: Sequence[int], n: int) -> TLDiagram:
    """Left-to-right product of generators; the empty word is the identity."""
    check_word(word, n)
    result = identity_diagram(n)
    for i in word:
        result = multiply(result, generator_diagram(n, i))
    return result


def check_word(word: Sequence[int], n: int) -> Word:
    word = tuple(int(i) for i in word)
    for i in word:
        if not 1 <= i <= n - 1:
            raise IndexOutOfRange(f"letter u{i} outside u1..u{n - 1} of TL_{n}")
    return word


def word_to_triangulation(word: Sequence[int], n: int) -> tuple[Triangulation, bool]:
    """Triangulation of the diagram of ``word`` and whether it is loop-free.

    A word whose product picked up loops still yields the triangulation of
    its pairing; the flag is False in that case.
    """
    d = evaluate_word(word, n)
    return matching_to_triangulation(d.pairing), d.loops == 0


def generator_triangulation(n: int, i: int) -> Triangulation:
    """Triangulation of ``u_i`` built directly from its diagonal families.

    ``e_i = (n-i+1, n-i+3)``, ``f_i = (2, n-i+3)``, the fan ``(1, j)`` for
    ``n-i+3 <= j <= n+1`` and the fan ``(2, j)`` for ``4 <= j <= n-i+1``.
    For ``i = n-1`` the diagonals ``e`` and ``f`` coincide.
    """
    if not 1 <= i <= n - 1:
        raise IndexOutOfRange(f"generator index {i} outside 1..{n - 1}")
    diags = {(n - i + 1, n - i + 3), (2, n - i + 3)}
    diags.update((1, j) for j in range(n - i + 3, n + 2))
    diags.update((2, j) for j in range(4, n - i + 2))
    return Triangulation(n, tuple(sorted(diags)))


def shift_word(word: Sequence[int]) -> Word:
    """Raise every letter by one, moving a word of ``TL_n`` into ``TL_{n+1}``."""
    return tuple(i + 1 for i in word)


def unshift_word(word: Sequence[int]) -> Word:
    return tuple(i - 1 for i in word)


def reachable_diagrams(n: int) -> set[Matching]:
    """Loop-free pairings reachable from the identity by generator products."""
    gens = [generator_diagram(n, i) for i in range(1, n)]
    start = identity_diagram(n)
    seen = {start.pairing}
    frontier = [start]
    while frontier:
        nxt = []
        for d in frontier:
            for g in gens:
                p = multiply(d, g)
                if p.pairing not in seen:
                    seen.add(p.pairing)
                    nxt.append(TLDiagram(n, p.pairing))
        frontier = nxt
    return seen


# -- text formats ----------------------------------------------------------------

_LETTER = re.compile(r"u?(\d+)")


def parse_word(text: str) -> Word:
    """Parse ``"u4 u3 u2"``, ``"u4u3u2"`` or ``"4 3 2"``.

    ``""``, ``"I"`` and ``"e"`` denote the empty word.
    """
    text = text.strip()
    if text in ("", "I", "e", "ε"):
        return ()
    if "u" in text:
        tokens = _LETTER.findall(text.replace(" ", ""))
        if "".join("u" + t for t in tokens) != text.replace(" ", ""):
            raise IndexOutOfRange(f"cannot parse generator word {text!r}")
    else:
        tokens = text.replace(",", " ").split()
        if not all(t.isdigit() for t in tokens):
            raise IndexOutOfRange(f"cannot parse generator word {text!r}")
    return tuple(int(t) for t in tokens)


def format_word(word: Iterable[int]) -> str:
    word = tuple(word)
    return "".join(f"u{i}" for i in word) if word else "I"
