"""Matchings, triangulations, and the outdegree bijection between them.

All indices are 1-based.  A matching on ``2n`` vertices in convex position
is stored as its sorted tuple of arcs ``(i, j)`` with ``i < j``; a
triangulation of the convex ``(n+2)``-gon is stored as its sorted tuple of
diagonals.  The hull edge ``(1, n+2)`` is never stored, but it is counted
in the outdegree of point 1.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from math import comb
from typing import Iterable, Iterator, Sequence

from .errors import (
    Crossing,
    IndexOutOfRange,
    InvalidDegrees,
    InvalidTriangulation,
    NotPerfect,
    ResourceLimit,
    Unbalanced,
)

Pair = tuple[int, int]

DEFAULT_ENUMERATION_CAP = 14
CAP_ENV_VAR = "FLIPCAT_NMAX"


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def enumeration_cap() -> int:
    """Largest ``n`` accepted by the exhaustive enumerators.

    Overridden by the ``FLIPCAT_NMAX`` environment variable.
    """
    value = os.environ.get(CAP_ENV_VAR)
    if value:
        return int(value)
    return DEFAULT_ENUMERATION_CAP


def _check_cap(n: int, cap: int | None) -> None:
    limit = enumeration_cap() if cap is None else cap
    if n > limit:
        raise ResourceLimit(f"n={n} exceeds the enumeration cap {limit}")


def _sorted_pairs(pairs: Iterable[Sequence[int]]) -> tuple[Pair, ...]:
    return tuple(sorted((min(a, b), max(a, b)) for a, b in pairs))


def diagonals_cross(a: Pair, b: Pair) -> bool:
    """True iff the chords ``a`` and ``b`` cross strictly.

    Both pairs must be ordered (first < second).  Shared endpoints and
    nested chords do not cross.
    """
    i, j = a
    k, l = b
    return i < k < j < l or k < i < l < j


@dataclass(frozen=True)
class Matching:
    """Non-crossing perfect matching on the vertices ``1..2n``.

    Use :func:`matching_from_arcs` to build a validated instance.
    """

    n: int
    arcs: tuple[Pair, ...]

    def partner(self) -> dict[int, int]:
        out = {}
        for a, b in self.arcs:
            out[a] = b
            out[b] = a
        return out

    def to_json(self) -> dict:
        return {"n": self.n, "arcs": [list(a) for a in self.arcs]}


@dataclass(frozen=True)
class Triangulation:
    """Triangulation of the convex polygon on points ``1..n+2``.

    ``diagonals`` holds the ``n-1`` inner diagonals only.
    """

    n: int
    diagonals: tuple[Pair, ...]

    def edges(self) -> set[Pair]:
        """Diagonals plus every hull edge of the polygon."""
        m = self.n + 2
        out = set(self.diagonals)
        out.update((i, i + 1) for i in range(1, m))
        out.add((1, m))
        return out

    def to_json(self) -> dict:
        return {"n": self.n, "diagonals": [list(d) for d in self.diagonals]}


def matching_from_arcs(n: int, arcs: Iterable[Sequence[int]]) -> Matching:
    if n < 1:
        raise IndexOutOfRange(f"n must be positive, got {n}")
    pairs = _sorted_pairs(arcs)
    seen: set[int] = set()
    for a, b in pairs:
        for v in (a, b):
            if not 1 <= v <= 2 * n:
                raise IndexOutOfRange(f"vertex {v} outside 1..{2 * n}")
            if v in seen:
                raise NotPerfect(f"vertex {v} appears in more than one arc")
            seen.add(v)
    if len(seen) != 2 * n:
        missing = sorted(set(range(1, 2 * n + 1)) - seen)
        raise NotPerfect(f"vertices {missing} are unmatched")
    for x in range(len(pairs)):
        for y in range(x + 1, len(pairs)):
            if diagonals_cross(pairs[x], pairs[y]):
                raise Crossing(f"arcs {pairs[x]} and {pairs[y]} cross")
    return Matching(n, pairs)


def triangulation_from_diagonals(n: int, diagonals: Iterable[Sequence[int]]) -> Triangulation:
    if n < 1:
        raise IndexOutOfRange(f"n must be positive, got {n}")
    diags = _sorted_pairs(diagonals)
    if len(set(diags)) != len(diags):
        raise InvalidTriangulation("duplicate diagonal")
    for i, j in diags:
        if not (1 <= i and j <= n + 2):
            raise IndexOutOfRange(f"diagonal {(i, j)} outside points 1..{n + 2}")
        if j < i + 2 or (i, j) == (1, n + 2):
            raise InvalidTriangulation(f"{(i, j)} is a hull edge, not a diagonal")
    if len(diags) != n - 1:
        raise InvalidTriangulation(f"expected {n - 1} diagonals, got {len(diags)}")
    for x in range(len(diags)):
        for y in range(x + 1, len(diags)):
            if diagonals_cross(diags[x], diags[y]):
                raise Crossing(f"diagonals {diags[x]} and {diags[y]} cross")
    return Triangulation(n, diags)


# -- outdegree sequences ---------------------------------------------------


def check_bits(bits: Sequence[int]) -> tuple[int, ...]:
    """Validate a matching outdegree sequence and return it as a tuple."""
    bits = tuple(int(b) for b in bits)
    if not bits or len(bits) % 2:
        raise Unbalanced("outdegree sequence must have positive even length")
    height = 0
    for pos, b in enumerate(bits, 1):
        if b not in (0, 1):
            raise Unbalanced(f"entry {pos} is {b}, expected 0 or 1")
        height += 1 if b else -1
        if height < 0:
            raise Unbalanced(f"prefix ending at {pos} has more 0s than 1s")
    if height:
        raise Unbalanced("sequence does not have equally many 0s and 1s")
    return bits


def check_degrees(degrees: Sequence[int]) -> tuple[int, ...]:
    """Validate a triangulation outdegree sequence ``(d_1, ..., d_n)``."""
    d = tuple(int(x) for x in degrees)
    n = len(d)
    if n < 1 or any(x < 0 for x in d):
        raise InvalidDegrees("degrees must be a non-empty sequence of non-negative integers")
    if sum(d) != n:
        raise InvalidDegrees(f"degrees sum to {sum(d)}, expected {n}")
    tail = 0
    for i in range(n, 1, -1):
        tail += d[i - 1]
        if tail > n - i + 1:
            raise InvalidDegrees(f"suffix starting at d_{i} sums to {tail} > {n - i + 1}")
    return d


def matching_outdegrees(m: Matching) -> tuple[int, ...]:
    bits = [0] * (2 * m.n)
    for a, _ in m.arcs:
        bits[a - 1] = 1
    return tuple(bits)


def matching_from_outdegrees(bits: Sequence[int]) -> Matching:
    bits = check_bits(bits)
    stack: list[int] = []
    arcs = []
    for pos, b in enumerate(bits, 1):
        if b:
            stack.append(pos)
        else:
            arcs.append((stack.pop(), pos))
    return Matching(len(bits) // 2, tuple(sorted(arcs)))


def bits_from_degrees(degrees: Sequence[int]) -> tuple[int, ...]:
    d = check_degrees(degrees)
    out: list[int] = []
    for x in d:
        out.extend([1] * x)
        out.append(0)
    return tuple(out)


def degrees_from_bits(bits: Sequence[int]) -> tuple[int, ...]:
    bits = check_bits(bits)
    out = []
    run = 0
    for b in bits:
        if b:
            run += 1
        else:
            out.append(run)
            run = 0
    return tuple(out)


def triangulation_outdegrees(t: Triangulation) -> tuple[int, ...]:
    d = [0] * t.n
    d[0] = 1  # hull edge p_1 p_{n+2}
    for i, _ in t.diagonals:
        d[i - 1] += 1
    return tuple(d)


def triangulation_from_outdegrees(degrees: Sequence[int]) -> Triangulation:
    """Rebuild the triangulation with outdegree sequence ``degrees``.

    Reads the sequence point by point.  A pending edge from point ``a`` first
    closes the sub-polygon on its left, which ends at the apex ``b`` of its
    triangle, then the one on its right, which ends at its far endpoint.
    """
    d = check_degrees(degrees)
    n = len(d)
    stack: list[list[int]] = []  # [source, right_side_started]
    edges = []
    point = 1
    for x in d + (0,):
        stack.extend([point, 0] for _ in range(x))
        point += 1
        # a unit segment [point-1, point] just closed
        while stack:
            top = stack[-1]
            if not top[1]:
                top[1] = 1
                break
            stack.pop()
            edges.append((top[0], point))
    if stack or edges[-1] != (1, n + 2):
        raise InvalidDegrees(f"{d} does not describe a triangulation")
    return Triangulation(n, tuple(sorted(edges[:-1])))


def arc_diagonals(m: Matching) -> dict[Pair, Pair]:
    """Map every arc of ``m`` to its edge in the corresponding triangulation.

    The arc ``(s, e)`` becomes the edge from point ``z(s) + 1`` to point
    ``Z(f) + 1``, where ``z(s)`` counts the 0s before ``s`` in the outdegree
    sequence and ``Z(f)`` counts the 0s up to the end ``f`` of the closest
    arc enclosing ``(s, e)`` (``f = 2n + 1`` with ``Z = n + 1`` if none).
    The outermost arc at vertex 1 maps to the hull edge ``(1, n+2)``.
    """
    n = m.n
    bits = matching_outdegrees(m)
    zeros_upto = [0] * (2 * n + 1)
    for pos in range(1, 2 * n + 1):
        zeros_upto[pos] = zeros_upto[pos - 1] + (1 - bits[pos - 1])
    partner = m.partner()
    out = {}
    stack: list[int] = []
    for pos in range(1, 2 * n + 1):
        if bits[pos - 1]:
            parent_end_zeros = zeros_upto[partner[stack[-1]]] if stack else n + 1
            out[(pos, partner[pos])] = (zeros_upto[pos - 1] + 1, parent_end_zeros + 1)
            stack.append(pos)
        else:
            stack.pop()
    return out


def diagonal_arcs(t: Triangulation) -> dict[Pair, Pair]:
    """Inverse of :func:`arc_diagonals` on ``M_T``: diagonal -> arc."""
    m = triangulation_to_matching(t)
    return {d: a for a, d in arc_diagonals(m).items()}


def matching_to_triangulation(m: Matching) -> Triangulation:
    return triangulation_from_outdegrees(degrees_from_bits(matching_outdegrees(m)))


def triangulation_to_matching(t: Triangulation) -> Matching:
    return matching_from_outdegrees(bits_from_degrees(triangulation_outdegrees(t)))


# -- enumeration -------------------------------------------------------------


def _matchings_on(lo: int, hi: int) -> Iterator[tuple[Pair, ...]]:
    # lexicographic order of the sorted arc lists on vertices lo..hi
    if lo > hi:
        yield ()
        return
    for j in range(lo + 1, hi + 1, 2):
        for inside in _matchings_on(lo + 1, j - 1):
            for outside in _matchings_on(j + 1, hi):
                yield ((lo, j),) + inside + outside


def iter_matchings(n: int) -> Iterator[Matching]:
    """Lazily yield all non-crossing perfect matchings, in lexicographic order."""
    for arcs in _matchings_on(1, 2 * n):
        yield Matching(n, arcs)


def enumerate_matchings(n: int, cap: int | None = None) -> list[Matching]:
    if n < 1:
        raise IndexOutOfRange(f"n must be positive, got {n}")
    _check_cap(n, cap)
    return list(iter_matchings(n))


def enumerate_triangulations(n: int, cap: int | None = None) -> list[Triangulation]:
    """All triangulations of the ``(n+2)``-gon, sorted by diagonal list."""
    return sorted(
        (matching_to_triangulation(m) for m in enumerate_matchings(n, cap)),
        key=lambda t: t.diagonals,
    )


# -- text formats ------------------------------------------------------------


def format_bits(bits: Sequence[int]) -> str:
    return "".join(str(b) for b in bits)


def parse_bits(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text or any(c not in "01" for c in text):
        raise Unbalanced(f"not a 0/1 string: {text!r}")
    return check_bits([int(c) for c in text])


def format_degrees(degrees: Sequence[int]) -> str:
    return ",".join(str(x) for x in degrees)


def parse_degrees(text: str) -> tuple[int, ...]:
    try:
        values = [int(x) for x in text.strip().split(",")]
    except ValueError:
        raise InvalidDegrees(f"not a comma separated integer list: {text!r}") from None
    return check_degrees(values)


def matching_from_json(obj: dict) -> Matching:
    return matching_from_arcs(int(obj["n"]), obj["arcs"])


def triangulation_from_json(obj: dict) -> Triangulation:
    return triangulation_from_diagonals(int(obj["n"]), obj["diagonals"])
