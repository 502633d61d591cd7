import pytest
from hypothesis import given, settings, strategies as st

from flipcat import flips
from flipcat.core import (
    Triangulation,
    degrees_from_bits,
    enumerate_matchings,
    enumerate_triangulations,
    matching_from_arcs,
    matching_outdegrees,
    matching_to_triangulation,
    triangulation_from_diagonals,
    triangulation_outdegrees,
    triangulation_to_matching,
)
from flipcat.errors import IllegalFlip, InvalidMove, NotADiagonal, NotGeneralPosition
from flipcat.flips import (
    MERGE,
    NEST_TO_SEQ,
    SEQ_TO_NEST,
    SPLIT,
    ArcMove,
    MatchingFlip,
    apply_arc_move,
    apply_matching_flip,
    arc_moves,
    arcs_cofacial,
    diagonal_flip,
    diagonal_flip_neighbors,
    find_diagonal_flip,
    matching_faces,
    matching_flip_deffect,
    matching_flip_moves,
    moved_diagonals,
    sections_of,
    special_cases,
    transport_arc_move,
    transport_diagonal_flip,
)

from oracles import brute_flip_neighbors, brute_triangulations

FAN3 = Triangulation(3, ((1, 3), (1, 4)))
IDENT3 = matching_from_arcs(3, [(1, 6), (2, 5), (3, 4)])
ZIG3 = matching_from_arcs(3, [(1, 6), (2, 3), (4, 5)])
N6 = matching_from_arcs(6, [(1, 10), (4, 7), (2, 3), (5, 6), (8, 9), (11, 12)])
N6_FLIP = MatchingFlip((1, 4, 7, 10), NEST_TO_SEQ)


# -- diagonal flips ------------------------------------------------------------


def test_pentagon_fan_flip():
    f = find_diagonal_flip(FAN3, (1, 3))
    assert f.quad == (1, 2, 3, 4)
    assert f.new_diagonal == (2, 4)
    t = diagonal_flip(FAN3, (1, 3))
    assert t.diagonals == ((1, 4), (2, 4))
    assert triangulation_outdegrees(FAN3) == (3, 0, 0)
    assert triangulation_outdegrees(t) == (2, 1, 0)
    assert diagonal_flip(t, (2, 4)) == FAN3


def test_octagon_figure_flip():
    t = triangulation_from_diagonals(
        8, [(1, 3), (3, 10), (3, 7), (4, 7), (5, 7), (7, 10), (7, 9)]
    )
    f = find_diagonal_flip(t, (7, 10))
    assert f.quad == (3, 7, 9, 10)
    assert f.new_diagonal == (3, 9)
    before, after = triangulation_outdegrees(t), triangulation_outdegrees(diagonal_flip(t, (7, 10)))
    assert after[6] == before[6] - 1
    assert after[2] == before[2] + 1


def test_flip_not_a_diagonal():
    with pytest.raises(NotADiagonal):
        diagonal_flip(FAN3, (2, 4))


def test_neighbor_counts():
    assert len(diagonal_flip_neighbors(FAN3)) == 2
    assert diagonal_flip_neighbors(Triangulation(1, ())) == []
    assert all(len(diagonal_flip_neighbors(t)) == 4 for t in enumerate_triangulations(5))


@pytest.mark.parametrize("n", range(1, 7))
def test_neighbors_match_brute_force(n):
    tris = brute_triangulations(n)
    for t in enumerate_triangulations(n):
        ours = sorted(s.diagonals for s in diagonal_flip_neighbors(t))
        assert ours == brute_flip_neighbors(n, t.diagonals, tris)


@pytest.mark.parametrize("n", range(2, 8))
def test_flip_involution(n):
    for t in enumerate_triangulations(n):
        for d in t.diagonals:
            f = find_diagonal_flip(t, d)
            assert diagonal_flip(diagonal_flip(t, d), f.new_diagonal) == t


# -- sections and arc moves ------------------------------------------------------


def test_sections():
    assert [(s.start, s.end) for s in sections_of(ZIG3)] == [(1, 6), (2, 3), (4, 5)]
    assert [(s.start, s.end) for s in sections_of(IDENT3)] == [(1, 6), (2, 5), (3, 4)]
    assert sections_of(IDENT3)[1].arcs == ((2, 5), (3, 4))


@pytest.mark.parametrize("n", range(1, 9))
def test_section_count_and_balance(n):
    for x in enumerate_matchings(n):
        secs = sections_of(x)
        assert len(secs) == n
        bits = matching_outdegrees(x)
        for s in secs:
            block = bits[s.start - 1:s.end]
            assert block[0] == 1 and block[-1] == 0
            assert sum(block) * 2 == len(block)


def test_arc_move_examples():
    moves = arc_moves(IDENT3)
    assert moves == [ArcMove((2, 5), SPLIT), ArcMove((3, 4), SPLIT)]
    assert all(len(arc_moves(x)) == 2 for x in enumerate_matchings(3))
    assert apply_arc_move(ZIG3, ArcMove((4, 5), MERGE)) == IDENT3
    assert apply_arc_move(IDENT3, ArcMove((3, 4), SPLIT)) == ZIG3


def test_arc_move_errors():
    with pytest.raises(InvalidMove):
        apply_arc_move(IDENT3, ArcMove((1, 6), SPLIT))
    with pytest.raises(InvalidMove):
        apply_arc_move(IDENT3, ArcMove((3, 4), MERGE))
    with pytest.raises(InvalidMove):
        apply_arc_move(IDENT3, ArcMove((2, 3), SPLIT))


@pytest.mark.parametrize("n", range(2, 9))
def test_move_then_inverse(n):
    for x in enumerate_matchings(n):
        for move in arc_moves(x):
            y = apply_arc_move(x, move)
            back = flips.inverse_arc_move(x, move)
            assert back in arc_moves(y)
            assert back.kind != move.kind
            assert apply_arc_move(y, back) == x


def test_transport_examples():
    move = transport_diagonal_flip(FAN3, (1, 3))
    assert move == ArcMove((3, 4), SPLIT)
    t = diagonal_flip(FAN3, (1, 3))
    assert triangulation_to_matching(t) == ZIG3
    assert transport_diagonal_flip(t, (2, 4)) == ArcMove((4, 5), MERGE)
    f = transport_arc_move(IDENT3, move)
    assert f.old_diagonal == (1, 3) and f.new_diagonal == (2, 4)


@pytest.mark.parametrize("n", range(1, 8))
def test_commuting_square(n):
    for t in enumerate_triangulations(n):
        x = triangulation_to_matching(t)
        moves = []
        for d in t.diagonals:
            move = transport_diagonal_flip(t, d)
            assert matching_to_triangulation(apply_arc_move(x, move)) == diagonal_flip(t, d)
            assert transport_arc_move(x, move).old_diagonal == d
            moves.append(move)
        assert sorted(moves, key=repr) == sorted(arc_moves(x), key=repr)


def test_split_lowers_its_endpoint():
    # flip (i,k) -> (j,l) with i<j<k<l moves degree from i to j and is a split
    for t in enumerate_triangulations(6):
        for d in t.diagonals:
            f = find_diagonal_flip(t, d)
            kind = transport_diagonal_flip(t, f).kind
            assert kind == (SPLIT if f.old_diagonal[0] < f.new_diagonal[0] else MERGE)


# -- matching flips -------------------------------------------------------------


def test_two_arc_flip():
    x = matching_from_arcs(2, [(1, 2), (3, 4)])
    (f,) = matching_flip_moves(x)
    assert f == MatchingFlip((1, 2, 3, 4), SEQ_TO_NEST)
    assert apply_matching_flip(x, f).arcs == ((1, 4), (2, 3))


def test_cofacial_identity():
    assert arcs_cofacial(IDENT3, (1, 6), (2, 5))
    assert arcs_cofacial(IDENT3, (2, 5), (3, 4))
    assert not arcs_cofacial(IDENT3, (1, 6), (3, 4))
    with pytest.raises(IllegalFlip):
        apply_matching_flip(IDENT3, MatchingFlip((1, 3, 4, 6), NEST_TO_SEQ))


@pytest.mark.parametrize("n", range(1, 8))
def test_faces_agree_with_separation(n):
    for x in enumerate_matchings(n):
        faces = matching_faces(x)
        assert len(faces) == n + 1
        together = {frozenset((a, b)) for f in faces for a in f for b in f if a != b}
        for a in x.arcs:
            for b in x.arcs:
                if a < b:
                    assert (frozenset((a, b)) in together) == arcs_cofacial(x, a, b)


@pytest.mark.parametrize("n", range(2, 8))
def test_matching_flip_reversible(n):
    for x in enumerate_matchings(n):
        for f in matching_flip_moves(x):
            y = apply_matching_flip(x, f)
            assert f.reverse() in matching_flip_moves(y)
            assert apply_matching_flip(y, f.reverse()) == x
            i, j, k, l = f.indices
            assert {(i, k), (j, l)}.isdisjoint(y.arcs)


def test_n6_example():
    y = apply_matching_flip(N6, N6_FLIP)
    assert set(y.arcs) == {(1, 4), (7, 10), (2, 3), (5, 6), (8, 9), (11, 12)}
    e = matching_flip_deffect(N6, N6_FLIP)
    assert e.before == (2, 2, 0, 1, 0, 1)
    assert (e.p, e.q) == (2, 3)
    assert e.after == (2, 0, 1, 2, 0, 1)
    assert e.after == degrees_from_bits(matching_outdegrees(y))


def test_n6_moved_diagonals():
    md = moved_diagonals(N6, N6_FLIP)
    before = set(matching_to_triangulation(N6).diagonals)
    after = set(matching_to_triangulation(apply_matching_flip(N6, N6_FLIP)).diagonals)
    assert md.g in before and md.h in before
    assert md.g_prime in after and md.h_prime in after


def test_special_case_one():
    x = matching_from_arcs(3, [(1, 4), (2, 3), (5, 6)])
    f = MatchingFlip((1, 2, 3, 4), NEST_TO_SEQ)
    assert special_cases(f) == (1, 2, 3)
    with pytest.raises(NotGeneralPosition) as info:
        matching_flip_deffect(x, f)
    assert 1 in info.value.cases
    assert moved_diagonals(x, f).h is None


def test_deffect_rejects_seq_to_nest():
    with pytest.raises(IllegalFlip):
        matching_flip_deffect(N6, N6_FLIP.reverse())


@pytest.mark.parametrize("n", range(4, 9))
def test_deffect_exhaustive(n):
    for x in enumerate_matchings(n):
        for f in matching_flip_moves(x):
            if f.direction != NEST_TO_SEQ or special_cases(f):
                continue
            e = matching_flip_deffect(x, f)
            y = apply_matching_flip(x, f)
            assert e.after == degrees_from_bits(matching_outdegrees(y))
            assert e.before[e.q - 1] == 0


@pytest.mark.parametrize("n", range(3, 8))
def test_one_plus_two_is_single_flip(n):
    for x in enumerate_matchings(n):
        for f in matching_flip_moves(x):
            cases = special_cases(f)
            if f.direction != NEST_TO_SEQ or not {1, 2} <= set(cases):
                continue
            md = moved_diagonals(x, f)
            before = set(matching_to_triangulation(x).diagonals)
            after = set(matching_to_triangulation(apply_matching_flip(x, f)).diagonals)
            assert before ^ after == {md.g, md.g_prime}


def test_two_plus_three_counterexample():
    # (2)+(3) without (1) changes two diagonals, not one
    x = matching_from_arcs(3, [(1, 6), (2, 3), (4, 5)])
    f = MatchingFlip((1, 4, 5, 6), NEST_TO_SEQ)
    assert special_cases(f) == (2, 3)
    y = apply_matching_flip(x, f)
    assert matching_to_triangulation(x).diagonals == ((1, 4), (2, 4))
    assert matching_to_triangulation(y).diagonals == ((1, 3), (3, 5))


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 9), st.data())
def test_matching_flip_changes_triangulation(n, data):
    ms = enumerate_matchings(n)
    x = data.draw(st.sampled_from(ms))
    moves = matching_flip_moves(x)
    f = data.draw(st.sampled_from(moves))
    y = apply_matching_flip(x, f)
    assert y != x
    assert len(matching_flip_moves(y)) > 0
