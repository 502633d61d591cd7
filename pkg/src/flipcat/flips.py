"""Flips on triangulations and matchings, and how they correspond.

A diagonal-flip of a triangulation ``T`` is a merge or a split of one arc
of ``M_T`` in its single row presentation.  A matching-flip exchanges two
co-facial arcs ``(i, l), (j, k)`` for ``(i, j), (k, l)`` or back.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import (
    Matching,
    Pair,
    Triangulation,
    arc_diagonals,
    degrees_from_bits,
    diagonal_arcs,
    matching_from_outdegrees,
    matching_outdegrees,
    matching_to_triangulation,
    triangulation_to_matching,
)
from .errors import IllegalFlip, InvalidMove, NotADiagonal, NotGeneralPosition

MERGE = "merge"
SPLIT = "split"
NEST_TO_SEQ = "nest_to_seq"
SEQ_TO_NEST = "seq_to_nest"


# -- diagonal flips ------------------------------------------------------------


@dataclass(frozen=True)
class DiagonalFlip:
    quad: tuple[int, int, int, int]
    old_diagonal: Pair
    new_diagonal: Pair

    def to_json(self) -> dict:
        return {"kind": "diagonal", "old": list(self.old_diagonal)}


def find_diagonal_flip(t: Triangulation, old_diagonal: Sequence[int]) -> DiagonalFlip:
    """Locate the quadrilateral around ``old_diagonal``.

    The two apexes are the points joined to both endpoints of the diagonal,
    one on each side of it.
    """
    a, c = sorted(old_diagonal)
    if (a, c) not in set(t.diagonals):
        raise NotADiagonal(f"{(a, c)} is not a diagonal of the triangulation")
    edges = t.edges()

    def joined(x, y):
        return (min(x, y), max(x, y)) in edges

    inner = [b for b in range(a + 1, c) if joined(a, b) and joined(b, c)]
    outer = [b for b in range(1, t.n + 3) if not a <= b <= c and joined(a, b) and joined(b, c)]
    assert len(inner) == 1 and len(outer) == 1, (t, (a, c))
    b, e = inner[0], outer[0]
    quad = tuple(sorted((a, b, c, e)))
    return DiagonalFlip(quad, (a, c), (min(b, e), max(b, e)))


def diagonal_flip(t: Triangulation, old_diagonal: Sequence[int]) -> Triangulation:
    flip = find_diagonal_flip(t, old_diagonal)
    diags = set(t.diagonals)
    diags.remove(flip.old_diagonal)
    diags.add(flip.new_diagonal)
    return Triangulation(t.n, tuple(sorted(diags)))


def diagonal_flip_neighbors(t: Triangulation) -> list[Triangulation]:
    """The ``n - 1`` neighbors of ``t``, one per diagonal, in diagonal order."""
    return [diagonal_flip(t, d) for d in t.diagonals]


# -- sections, merge and split ---------------------------------------------------


@dataclass(frozen=True)
class Section:
    start: int
    end: int
    arcs: tuple[Pair, ...]


def sections_of(m: Matching) -> list[Section]:
    """One section per arc: the span of the arc with every arc inside it.

    A 1 at vertex ``s`` first balances at its own partner, so the section
    starting at ``s`` is exactly the span of the arc ``(s, e)``.
    """
    return [
        Section(s, e, tuple(a for a in m.arcs if s <= a[0] and a[1] <= e))
        for s, e in m.arcs
    ]


@dataclass(frozen=True)
class ArcMove:
    arc: Pair
    kind: str  # MERGE or SPLIT

    def to_json(self) -> dict:
        return {"kind": "arc_move", "arc": list(self.arc), "move": self.kind}


def _move_kind(bits: Sequence[int], arc: Pair) -> str:
    # b_{p-1} = 0: v_{p-1} ends a section; b_{p-1} = 1: v_{p-1} starts an arc
    return SPLIT if bits[arc[0] - 2] else MERGE


def arc_moves(m: Matching) -> list[ArcMove]:
    """The ``n - 1`` merges or splits, one per arc not starting at vertex 1."""
    bits = matching_outdegrees(m)
    return [ArcMove(a, _move_kind(bits, a)) for a in m.arcs if a[0] > 1]


def apply_arc_move(m: Matching, move: ArcMove) -> Matching:
    """Perform a merge or split.

    Merge of ``alpha = (p, q)``: the section ending at ``v_{p-1}`` shifts one
    place right and ``alpha`` then starts where that section started.
    Split of ``alpha``: the section of ``alpha`` shifts one place left and
    the enclosing arc ``beta`` starting at ``v_{p-1}`` now starts where the
    section of ``alpha`` ended.
    """
    arc = tuple(move.arc)
    if arc not in set(m.arcs) or arc[0] == 1:
        raise InvalidMove(f"{arc} is not an arc of the matching with start > 1")
    bits = list(matching_outdegrees(m))
    if _move_kind(bits, arc) != move.kind:
        raise InvalidMove(f"arc {arc} admits a {_move_kind(bits, arc)}, not a {move.kind}")
    p, q = arc
    partner = m.partner()
    if move.kind == MERGE:
        s = partner[p - 1]
        # rotate b_s..b_p one step right
        bits[s - 1:p] = [1] + bits[s - 1:p - 1]
    else:
        # rotate b_{p-1}..b_q one step left
        bits[p - 2:q] = bits[p - 1:q] + [1]
    return matching_from_outdegrees(bits)


def inverse_arc_move(m: Matching, move: ArcMove) -> ArcMove:
    """The move on ``apply_arc_move(m, move)`` which undoes ``move``."""
    p, q = move.arc
    if move.kind == MERGE:
        s = m.partner()[p - 1]
        # the shifted section's arc now starts at s + 1 under alpha = (s, q)
        return ArcMove((s + 1, p), SPLIT)
    r = m.partner()[p - 1]
    return ArcMove((q, r), MERGE)


def transport_diagonal_flip(t: Triangulation, flip: DiagonalFlip | Sequence[int]) -> ArcMove:
    """The arc move on ``M_T`` that realizes a diagonal-flip of ``t``.

    The moved arc is the one whose image under the bijection is the
    diagonal being removed.
    """
    old = flip.old_diagonal if isinstance(flip, DiagonalFlip) else tuple(sorted(flip))
    if old not in set(t.diagonals):
        raise NotADiagonal(f"{old} is not a diagonal of the triangulation")
    m = triangulation_to_matching(t)
    arc = diagonal_arcs(t)[old]
    return ArcMove(arc, _move_kind(matching_outdegrees(m), arc))


def transport_arc_move(m: Matching, move: ArcMove) -> DiagonalFlip:
    """The diagonal-flip of ``T_M`` that realizes ``move`` on ``m``."""
    arc = tuple(move.arc)
    if arc not in set(m.arcs) or arc[0] == 1:
        raise InvalidMove(f"{arc} is not an arc of the matching with start > 1")
    return find_diagonal_flip(matching_to_triangulation(m), arc_diagonals(m)[arc])


# -- matching flips ------------------------------------------------------------------


@dataclass(frozen=True)
class MatchingFlip:
    indices: tuple[int, int, int, int]
    direction: str  # NEST_TO_SEQ or SEQ_TO_NEST

    def removed_arcs(self) -> tuple[Pair, Pair]:
        i, j, k, l = self.indices
        if self.direction == NEST_TO_SEQ:
            return (i, l), (j, k)
        return (i, j), (k, l)

    def added_arcs(self) -> tuple[Pair, Pair]:
        i, j, k, l = self.indices
        if self.direction == NEST_TO_SEQ:
            return (i, j), (k, l)
        return (i, l), (j, k)

    def reverse(self) -> MatchingFlip:
        other = SEQ_TO_NEST if self.direction == NEST_TO_SEQ else NEST_TO_SEQ
        return MatchingFlip(self.indices, other)

    def to_json(self) -> dict:
        return {"kind": "matching", "indices": list(self.indices), "direction": self.direction}


def matching_faces(m: Matching) -> list[tuple[Pair, ...]]:
    """Inner faces of the disk cut by the arcs, each as its bounding arcs.

    Walks the boundary: along the circle from vertex ``x`` to ``x + 1``,
    then across the arc at ``x + 1``, and so on until the walk closes.
    """
    size = 2 * m.n
    partner = m.partner()
    seen = set()
    faces = []
    for start in range(1, size + 1):
        if start in seen:
            continue
        arcs = []
        x = start
        while x not in seen:
            seen.add(x)
            v = x % size + 1
            y = partner[v]
            arcs.append((min(v, y), max(v, y)))
            x = y
        faces.append(tuple(sorted(arcs)))
    return faces


def arcs_cofacial(m: Matching, a: Pair, b: Pair) -> bool:
    """True iff no third arc separates ``a`` from ``b``.

    An arc ``c`` separates them when exactly one of the two lies inside
    the span of ``c``.
    """

    def inside(x, c):
        return c[0] < x[0] and x[1] < c[1]

    return not any(
        inside(a, c) != inside(b, c) for c in m.arcs if c != a and c != b
    )


def _flip_for(a: Pair, b: Pair) -> MatchingFlip:
    i, j, k, l = sorted(a + b)
    direction = NEST_TO_SEQ if {a, b} == {(i, l), (j, k)} else SEQ_TO_NEST
    return MatchingFlip((i, j, k, l), direction)


def matching_flip_moves(m: Matching) -> list[MatchingFlip]:
    """Every legal matching-flip of ``m``, sorted by indices."""
    flips = set()
    for face in matching_faces(m):
        for x in range(len(face)):
            for y in range(x + 1, len(face)):
                flips.add(_flip_for(face[x], face[y]))
    return sorted(flips, key=lambda f: (f.indices, f.direction))


def apply_matching_flip(m: Matching, f: MatchingFlip) -> Matching:
    arcs = set(m.arcs)
    old = f.removed_arcs()
    if not all(a in arcs for a in old):
        raise IllegalFlip(f"arcs {old} are not both in the matching")
    if not arcs_cofacial(m, *old):
        raise IllegalFlip(f"arcs {old} do not share a face")
    arcs.difference_update(old)
    arcs.update(f.added_arcs())
    return Matching(m.n, tuple(sorted(arcs)))


def special_cases(f: MatchingFlip) -> tuple[int, ...]:
    """Which adjacency cases hold: 1 (j = i+1), 2 (k = j+1), 3 (l = k+1)."""
    i, j, k, l = f.indices
    return tuple(c for c, hit in ((1, j == i + 1), (2, k == j + 1), (3, l == k + 1)) if hit)


@dataclass(frozen=True)
class DEffect:
    p: int
    q: int
    before: tuple[int, ...]
    after: tuple[int, ...]


def matching_flip_deffect(m: Matching, f: MatchingFlip) -> DEffect:
    """Predict ``D(T_{M'})`` for a general position nest-to-seq flip.

    With ``a = D(T_M)``, ``p`` is the point whose run of 1s starts at
    ``b_j`` and ``q`` the point whose (empty) run ends at ``b_k``.  The
    prediction is ``a`` with ``d_p = 0``, ``d_{p+1} = a_p - 1``, the block
    ``a_{p+1} .. a_{q-1}`` shifted one place right, and
    ``d_{q+1} = a_{q+1} + 1``.
    """
    if f.direction != NEST_TO_SEQ:
        raise IllegalFlip("degree prediction is defined for nest-to-seq flips")
    if any(a not in set(m.arcs) for a in f.removed_arcs()):
        raise IllegalFlip(f"arcs {f.removed_arcs()} are not both in the matching")
    cases = special_cases(f)
    if cases:
        raise NotGeneralPosition(
            f"flip {f.indices} has adjacent indices, cases {cases}", cases
        )
    i, j, k, l = f.indices
    bits = matching_outdegrees(m)
    a = degrees_from_bits(bits)
    p = bits[: j - 1].count(0) + 1
    q = bits[:k].count(0)
    after = a[: p - 1] + (0, a[p - 1] - 1) + a[p : q - 1] + (a[q] + 1,) + a[q + 1 :]
    return DEffect(p, q, a, after)


@dataclass(frozen=True)
class MovedDiagonals:
    """Diagonals of ``T_M`` and ``T_{M'}`` tied to a nest-to-seq flip.

    ``g`` comes from arc ``(j, k)`` of ``M``, ``h`` from the arc of ``M``
    starting at ``i + 1`` (``None`` when ``j = i + 1``); ``g_prime`` from arc
    ``(k, l)`` of ``M'`` and ``h_prime`` from the arc of ``M'`` starting at
    ``i + 1``.
    """

    g: Pair
    h: Pair | None
    g_prime: Pair
    h_prime: Pair | None


def moved_diagonals(m: Matching, f: MatchingFlip) -> MovedDiagonals:
    if f.direction != NEST_TO_SEQ:
        raise IllegalFlip("moved diagonals are defined for nest-to-seq flips")
    i, j, k, l = f.indices
    flipped = apply_matching_flip(m, f)
    before = arc_diagonals(m)
    after = arc_diagonals(flipped)

    def starting_at(mapping, v):
        return next(d for arc, d in mapping.items() if arc[0] == v)

    h = h_prime = None
    if j != i + 1:
        h = starting_at(before, i + 1)
        h_prime = starting_at(after, i + 1)
    return MovedDiagonals(before[(j, k)], h, after[(k, l)], h_prime)
