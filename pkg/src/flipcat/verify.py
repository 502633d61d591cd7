"""Mechanical verification of the combinatorial claims, up to a size bound.

Each check returns a :class:`ClaimResult`; :func:`run_all` evaluates the
whole list for the ``verify`` subcommand.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from .core import (
    catalan,
    degrees_from_bits,
    diagonals_cross,
    enumerate_matchings,
    enumerate_triangulations,
    matching_outdegrees,
    matching_to_triangulation,
    triangulation_to_matching,
)
from .errors import NotGeneralPosition
from .flipgraph import (
    all_generator_neighbors,
    build_flip_graph,
    crossing_lower_bound,
    generator_distance_formula,
    generator_node,
)
from .flips import (
    NEST_TO_SEQ,
    apply_arc_move,
    apply_matching_flip,
    arc_moves,
    diagonal_flip,
    matching_flip_deffect,
    matching_flip_moves,
    moved_diagonals,
    special_cases,
    transport_diagonal_flip,
)
from .tl import (
    evaluate_word,
    format_word,
    generator_triangulation,
    reachable_diagrams,
    word_to_triangulation,
)

# rows of the reference TL_5 neighbor table, as words
TL5_TABLE = {
    0: [(4,), (4, 3), (4, 3, 2), (4, 3, 2, 1)],
    1: [(1, 2, 3, 4), (2, 1), (4, 3, 1), (4, 1)],
    2: [(1, 2), (3, 2), (2, 3, 4), (4, 2)],
    3: [(4, 2, 1), (3, 2), (4, 3), (3, 4)],
    4: [(3, 2, 1), (3, 2), (3, 4), ()],
}


@dataclass
class ClaimResult:
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.name}: {self.detail}"


def check_bijection(n_max: int) -> ClaimResult:
    top = min(n_max, 10)
    for n in range(1, top + 1):
        ms = enumerate_matchings(n)
        ts = {matching_to_triangulation(m) for m in ms}
        if len(ms) != catalan(n) or len(ts) != catalan(n):
            return ClaimResult("bijection", False, f"count mismatch at n={n}")
        for m in ms:
            if triangulation_to_matching(matching_to_triangulation(m)) != m:
                return ClaimResult("bijection", False, f"roundtrip fails for {m.arcs}")
    return ClaimResult("bijection", True, f"roundtrip and C_n counts for n=1..{top}")


def check_flip_merge_split(n_max: int) -> ClaimResult:
    top = min(n_max, 7)
    for n in range(1, top + 1):
        for t in enumerate_triangulations(n):
            m = triangulation_to_matching(t)
            moves = []
            for d in t.diagonals:
                move = transport_diagonal_flip(t, d)
                if matching_to_triangulation(apply_arc_move(m, move)) != diagonal_flip(t, d):
                    return ClaimResult("flip = merge/split", False, f"square fails at {t.diagonals}, {d}")
                moves.append(move)
            if sorted(moves, key=str) != sorted(arc_moves(m), key=str):
                return ClaimResult("flip = merge/split", False, f"not a bijection at {t.diagonals}")
    return ClaimResult("flip = merge/split", True, f"commuting square for n=1..{top}")


def check_degree(n_max: int) -> ClaimResult:
    top = min(n_max, 10)
    for n in range(1, top + 1):
        g = build_flip_graph(n)
        if any(len(a) != n - 1 for a in g.adjacency):
            return ClaimResult("n-1 neighbors", False, f"degree violated at n={n}")
    return ClaimResult("n-1 neighbors", True, f"every node has degree n-1, n=1..{top}")


def check_generator_distances(n_max: int) -> ClaimResult:
    top = min(n_max, 10)
    for n in range(3, top + 1):
        g = build_flip_graph(n)
        for i in range(1, n):
            dist = g.distances_from(generator_node(n, i))
            for j in range(1, n):
                got = int(dist[g.node_index(generator_node(n, j))])
                if got != generator_distance_formula(n, i, j):
                    return ClaimResult("generator distances", False, f"n={n} d(u{i},u{j})={got}")
    return ClaimResult("generator distances", True, f"closed form equals BFS, n=3..{top}")


def check_lower_bound(n_max: int, samples: int = 10_000, seed: int = 0) -> ClaimResult:
    for n in range(1, min(n_max, 6) + 1):
        g = build_flip_graph(n)
        table = g.distance_table()
        for a, ta in enumerate(g.nodes):
            for b, tb in enumerate(g.nodes):
                k = crossing_lower_bound(ta, tb)
                if k > table[a, b] or k != crossing_lower_bound(tb, ta):
                    return ClaimResult("crossing lower bound", False, f"n={n} pair {a},{b}")
    detail = f"all pairs n<={min(n_max, 6)}"
    if n_max >= 8:
        g = build_flip_graph(8)
        rng = random.Random(seed)
        pairs = [(rng.randrange(len(g)), rng.randrange(len(g))) for _ in range(samples)]
        rows = {a: g.distances_from(g.nodes[a]) for a in {p[0] for p in pairs}}
        for a, b in pairs:
            ta, tb = g.nodes[a], g.nodes[b]
            k = crossing_lower_bound(ta, tb)
            if k > rows[a][b] or k != crossing_lower_bound(tb, ta):
                return ClaimResult("crossing lower bound", False, f"n=8 pair {a},{b}")
        detail += f", {samples} random pairs at n=8"
    return ClaimResult("crossing lower bound", True, detail)


def check_tl5_table(n_max: int) -> ClaimResult:
    n = 5
    g = build_flip_graph(n)
    problems = []
    for i, row in TL5_TABLE.items():
        ours = all_generator_neighbors(n, i)
        if set(ours) != set(row):
            missing = [format_word(w) for w in row if w not in ours]
            extra = [format_word(w) for w in ours if w not in row]
            problems.append(f"row {i}: table has {missing}, catalog has {extra}")
        nbrs = set(g.neighbors(generator_node(n, i)))
        bad = [format_word(w) for w in row if word_to_triangulation(w, n)[0] not in nbrs]
        if bad:
            problems.append(f"row {i}: {bad} not flip neighbors")
    if problems:
        return ClaimResult("TL_5 neighbor table", False, "; ".join(problems))
    return ClaimResult("TL_5 neighbor table", True, "all five rows reproduced")


def check_tl_relations(n_max: int) -> ClaimResult:
    top = min(n_max, 8)
    for n in range(2, top + 1):
        for i in range(1, n):
            ui = evaluate_word((i,), n)
            sq = evaluate_word((i, i), n)
            if sq.pairing != ui.pairing or sq.loops != 1:
                return ClaimResult("TL relations", False, f"u{i}^2 at n={n}")
            for j in range(1, n):
                if abs(i - j) > 1 and evaluate_word((i, j), n) != evaluate_word((j, i), n):
                    return ClaimResult("TL relations", False, f"u{i}u{j} at n={n}")
            if i <= n - 2:
                if evaluate_word((i, i + 1, i), n) != ui:
                    return ClaimResult("TL relations", False, f"u{i}u{i + 1}u{i} at n={n}")
                if evaluate_word((i + 1, i, i + 1), n) != evaluate_word((i + 1,), n):
                    return ClaimResult("TL relations", False, f"u{i + 1}u{i}u{i + 1} at n={n}")
    return ClaimResult("TL relations", True, f"relations hold diagrammatically, n=2..{top}")


def check_dimension(n_max: int) -> ClaimResult:
    top = min(n_max, 8)
    for n in range(2, top + 1):
        if len(reachable_diagrams(n)) != catalan(n):
            return ClaimResult("dim TL_n = C_n", False, f"n={n}")
    return ClaimResult("dim TL_n = C_n", True, f"reachable diagrams number C_n, n=2..{top}")


def check_matching_flip_effect(n_max: int) -> ClaimResult:
    top = min(n_max, 8)
    counts = {"general": 0, "(1)+(2)": 0, "(2)+(3)": 0}
    failures = {"(1)+(2)": 0, "(2)+(3)": 0}
    for n in range(4, top + 1):
        for m in enumerate_matchings(n):
            for f in matching_flip_moves(m):
                if f.direction != NEST_TO_SEQ:
                    continue
                flipped = apply_matching_flip(m, f)
                cases = special_cases(f)
                if not cases:
                    counts["general"] += 1
                    effect = matching_flip_deffect(m, f)
                    if effect.after != degrees_from_bits(matching_outdegrees(flipped)):
                        return ClaimResult("matching-flip D effect", False, f"{m.arcs} {f.indices}")
                    continue
                try:
                    matching_flip_deffect(m, f)
                    return ClaimResult("matching-flip D effect", False, f"{f.indices} not classified")
                except NotGeneralPosition as exc:
                    if exc.cases != cases:
                        return ClaimResult("matching-flip D effect", False, f"{f.indices} misclassified")
                before = set(matching_to_triangulation(m).diagonals)
                after = set(matching_to_triangulation(flipped).diagonals)
                diff = before ^ after
                moved = moved_diagonals(m, f)
                if 1 in cases and 2 in cases:
                    counts["(1)+(2)"] += 1
                    if diff != {moved.g, moved.g_prime}:
                        failures["(1)+(2)"] += 1
                if 2 in cases and 3 in cases:
                    counts["(2)+(3)"] += 1
                    expected = {moved.g, moved.h_prime} if moved.h_prime else None
                    if len(diff) != 2 or (expected and diff != expected):
                        failures["(2)+(3)"] += 1
    detail = (
        f"{counts['general']} general flips predicted; "
        f"(1)+(2): {counts['(1)+(2)'] - failures['(1)+(2)']}/{counts['(1)+(2)']} single flips; "
        f"(2)+(3): {counts['(2)+(3)'] - failures['(2)+(3)']}/{counts['(2)+(3)']} single flips"
    )
    return ClaimResult("matching-flip D effect", not any(failures.values()), detail)


def check_generator_triangulations(n_max: int) -> ClaimResult:
    top = min(n_max, 10)
    for n in range(3, top + 1):
        for i in range(1, n):
            if generator_triangulation(n, i) != word_to_triangulation((i,), n)[0]:
                return ClaimResult("generator triangulations", False, f"n={n}, u{i}")
    return ClaimResult("generator triangulations", True, f"direct construction matches, n=3..{top}")


def check_identity_observation(n_max: int) -> ClaimResult:
    top = min(n_max, 8)
    for n in range(2, top + 1):
        for m in enumerate_matchings(n):
            if (1, 2 * n) in m.arcs and (1, n + 1) not in matching_to_triangulation(m).diagonals:
                return ClaimResult("edge v1v2n gives p1p(n+1)", False, f"{m.arcs}")
    return ClaimResult("edge v1v2n gives p1p(n+1)", True, f"n=2..{top}")


def check_neighbor_catalogs(n_max: int) -> ClaimResult:
    top = min(n_max, 8)
    for n in range(2, top + 1):
        g = build_flip_graph(n)
        for i in range(n):
            words = all_generator_neighbors(n, i)
            tri = [word_to_triangulation(w, n)[0] for w in words]
            if len(words) != n - 1 or set(tri) != set(g.neighbors(generator_node(n, i))):
                return ClaimResult("neighbor catalogs", False, f"n={n}, i={i}")
    return ClaimResult("neighbor catalogs", True, f"catalogs equal flip neighborhoods, n=2..{top}")


def check_crossing_definition(n_max: int) -> ClaimResult:
    # chords of the (n+2)-gon cross iff their four endpoints interleave on the circle
    top = min(n_max, 8)
    for m in range(4, top + 3):
        chords = [(a, b) for a in range(1, m + 1) for b in range(a + 1, m + 1)]
        for x in chords:
            for y in chords:
                interleave = len(set(x) | set(y)) == 4 and (
                    sum(x[0] < v < x[1] for v in y) == 1
                )
                if interleave != diagonals_cross(x, y):
                    return ClaimResult("crossing predicate", False, f"{x} {y}")
    return ClaimResult("crossing predicate", True, f"polygons up to {top + 2} points")


def check_neighbor_pairs(n_max: int) -> ClaimResult:
    top = min(n_max, 10)
    for n in range(3, top + 1):
        g = build_flip_graph(n)
        for k in range(1, n - 1):
            for word, gen in (((k, k + 1), k + 1), ((k + 1, k), k)):
                if word_to_triangulation(word, n)[0] not in set(g.neighbors(generator_node(n, gen))):
                    return ClaimResult("u_k u_k+1 pairs", False, f"{format_word(word)} vs u{gen}, n={n}")
    return ClaimResult("u_k u_k+1 pairs", True, f"both pair families are flip neighbors, n=3..{top}")


def check_generator_chain(n_max: int) -> ClaimResult:
    # the chain u_{n-1} - u_{n-1}u_{n-2} - u_{n-2}, read literally
    top = min(n_max, 10)
    bad = []
    for n in range(3, top + 1):
        g = build_flip_graph(n)
        mid = set(g.neighbors(word_to_triangulation((n - 1, n - 2), n)[0]))
        if not {generator_node(n, n - 1), generator_node(n, n - 2)} <= mid:
            bad.append(n)
    if bad:
        return ClaimResult(
            "chain via u_n-1 u_n-2", False,
            f"T(u_n-1 u_n-2) is not adjacent to T(u_n-1) for n in {bad}; the middle word is u_n-2 u_n-1",
        )
    return ClaimResult("chain via u_n-1 u_n-2", True, f"n=3..{top}")


CLAIMS: list[Callable[[int], ClaimResult]] = [
    check_bijection,
    check_flip_merge_split,
    check_degree,
    check_generator_distances,
    check_lower_bound,
    check_tl5_table,
    check_tl_relations,
    check_dimension,
    check_matching_flip_effect,
    check_generator_triangulations,
    check_identity_observation,
    check_neighbor_catalogs,
    check_crossing_definition,
    check_neighbor_pairs,
    check_generator_chain,
]


def run_all(n_max: int) -> list[ClaimResult]:
    return [claim(n_max) for claim in CLAIMS]
