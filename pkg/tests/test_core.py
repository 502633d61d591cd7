import pytest
from hypothesis import given, strategies as st

from flipcat import core
from flipcat.core import (
    Matching,
    Triangulation,
    bits_from_degrees,
    catalan,
    degrees_from_bits,
    diagonals_cross,
    enumerate_matchings,
    enumerate_triangulations,
    matching_from_arcs,
    matching_from_outdegrees,
    matching_outdegrees,
    matching_to_triangulation,
    triangulation_from_diagonals,
    triangulation_from_outdegrees,
    triangulation_outdegrees,
    triangulation_to_matching,
)
from flipcat.errors import (
    Crossing,
    IndexOutOfRange,
    InvalidDegrees,
    InvalidTriangulation,
    NotPerfect,
    ResourceLimit,
    Unbalanced,
)

from oracles import (
    brute_noncrossing_matchings,
    brute_triangulations,
    catalan_recurrence,
    chords_cross,
    lower_endpoint_degrees,
)

FAN3 = Triangulation(3, ((1, 3), (1, 4)))


def m(n, *arcs):
    return matching_from_arcs(n, arcs)


# -- validation ---------------------------------------------------------------


def test_matching_examples():
    assert m(3, (1, 6), (2, 5), (3, 4)).arcs == ((1, 6), (2, 5), (3, 4))
    assert m(3, (4, 5), (1, 6), (3, 2)).arcs == ((1, 6), (2, 3), (4, 5))
    with pytest.raises(Crossing):
        m(3, (1, 4), (2, 5), (3, 6))


@pytest.mark.parametrize(
    "n, arcs, error",
    [
        (2, [(1, 2)], NotPerfect),
        (2, [(1, 2), (2, 3)], NotPerfect),
        (2, [(1, 2), (3, 5)], IndexOutOfRange),
        (2, [(1, 1), (3, 4)], NotPerfect),
        (0, [], IndexOutOfRange),
    ],
)
def test_matching_errors(n, arcs, error):
    with pytest.raises(error):
        matching_from_arcs(n, arcs)


@pytest.mark.parametrize(
    "n, diags, error",
    [
        (3, [(1, 3)], InvalidTriangulation),
        (3, [(1, 4), (2, 5)], Crossing),
        (3, [(1, 2), (1, 3)], InvalidTriangulation),
        (3, [(1, 5), (1, 3)], InvalidTriangulation),
        (3, [(1, 3), (1, 7)], IndexOutOfRange),
    ],
)
def test_triangulation_errors(n, diags, error):
    with pytest.raises(error):
        triangulation_from_diagonals(n, diags)


def test_triangulation_edges_include_hull():
    edges = FAN3.edges()
    assert {(1, 2), (2, 3), (3, 4), (4, 5), (1, 5), (1, 3), (1, 4)} == edges


# -- sequences ----------------------------------------------------------------


@pytest.mark.parametrize(
    "arcs, bits",
    [
        (((1, 6), (2, 5), (3, 4)), (1, 1, 1, 0, 0, 0)),
        (((1, 6), (2, 3), (4, 5)), (1, 1, 0, 1, 0, 0)),
        (((1, 2), (3, 4), (5, 6)), (1, 0, 1, 0, 1, 0)),
    ],
)
def test_matching_outdegrees(arcs, bits):
    mm = m(3, *arcs)
    assert matching_outdegrees(mm) == bits
    assert matching_from_outdegrees(bits) == mm


@pytest.mark.parametrize("bits", ["101001", "011100", "110", "1001", "111100"])
def test_unbalanced_bits(bits):
    with pytest.raises((Unbalanced, InvalidDegrees)):
        matching_from_outdegrees(core.parse_bits(bits))


@pytest.mark.parametrize(
    "diags, degrees",
    [
        (((1, 3), (1, 4)), (3, 0, 0)),
        (((1, 4), (2, 4)), (2, 1, 0)),
        (((1, 3), (3, 5)), (2, 0, 1)),
        (((2, 5), (3, 5)), (1, 1, 1)),
    ],
)
def test_triangulation_outdegrees(diags, degrees):
    t = triangulation_from_diagonals(3, diags)
    assert triangulation_outdegrees(t) == degrees
    assert triangulation_from_outdegrees(degrees) == t


def test_degree_111_is_not_the_crossing_pair():
    # (1,1,1) must be the non-crossing {(2,5),(3,5)}; (2,4) and (3,5) cross
    assert diagonals_cross((2, 4), (3, 5))
    assert triangulation_from_outdegrees((1, 1, 1)).diagonals == ((2, 5), (3, 5))


@pytest.mark.parametrize(
    "degrees, bits",
    [((3, 0, 0), "111000"), ((2, 1, 0), "110100"), ((1, 1, 1), "101010"), ((2, 0, 1), "110010")],
)
def test_bits_degrees(degrees, bits):
    assert core.format_bits(bits_from_degrees(degrees)) == bits
    assert degrees_from_bits(core.parse_bits(bits)) == degrees


@pytest.mark.parametrize("degrees", [(2, 0, 0), (0, 3, 0), (1, 0, 2), (-1, 2, 2), ()])
def test_invalid_degrees(degrees):
    with pytest.raises(InvalidDegrees):
        core.check_degrees(degrees)


@pytest.mark.parametrize(
    "arcs, diags",
    [
        (((1, 6), (2, 5), (3, 4)), ((1, 3), (1, 4))),
        (((1, 6), (2, 3), (4, 5)), ((1, 4), (2, 4))),
        (((1, 4), (2, 3), (5, 6)), ((1, 3), (3, 5))),
    ],
)
def test_bijection_examples(arcs, diags):
    mm = m(3, *arcs)
    t = triangulation_from_diagonals(3, diags)
    assert matching_to_triangulation(mm) == t
    assert triangulation_to_matching(t) == mm


@pytest.mark.parametrize(
    "a, b, expected",
    [((1, 4), (2, 5), True), ((1, 3), (3, 5), False), ((2, 4), (1, 5), False), ((2, 5), (1, 4), True)],
)
def test_diagonals_cross(a, b, expected):
    assert diagonals_cross(a, b) is expected
    assert diagonals_cross(b, a) is expected


def test_cross_predicate_matches_oracle():
    pts = range(1, 10)
    chords = [(a, b) for a in pts for b in pts if a < b]
    for x in chords:
        for y in chords:
            assert diagonals_cross(x, y) == chords_cross(x, y)


# -- enumeration and bijection against brute force -----------------------------


@pytest.mark.parametrize("n", range(1, 11))
def test_catalan(n):
    assert catalan(n) == catalan_recurrence(n)


def test_catalan_10():
    assert catalan(10) == 16796


@pytest.mark.parametrize("n", range(1, 7))
def test_enumerations_match_brute_force(n):
    assert [x.arcs for x in enumerate_matchings(n)] == brute_noncrossing_matchings(n)
    assert [t.diagonals for t in enumerate_triangulations(n)] == brute_triangulations(n)


def test_enumerate_small():
    assert enumerate_matchings(1) == [Matching(1, ((1, 2),))]
    assert len(enumerate_matchings(3)) == 5
    assert enumerate_triangulations(1) == [Triangulation(1, ())]


@pytest.mark.parametrize("n", range(1, 11))
def test_roundtrips(n):
    ms = enumerate_matchings(n)
    assert len(ms) == catalan(n)
    tris = set()
    for x in ms:
        t = matching_to_triangulation(x)
        tris.add(t)
        assert triangulation_to_matching(t) == x
        assert matching_from_outdegrees(matching_outdegrees(x)) == x
    assert len(tris) == catalan(n)


@pytest.mark.parametrize("n", range(1, 8))
def test_triangulations_valid_and_degrees(n):
    for t in enumerate_triangulations(n):
        assert len(t.diagonals) == n - 1
        assert not any(diagonals_cross(a, b) for a in t.diagonals for b in t.diagonals)
        d = triangulation_outdegrees(t)
        assert d == lower_endpoint_degrees(n, t.diagonals)
        assert degrees_from_bits(bits_from_degrees(d)) == d


@pytest.mark.parametrize("n", range(1, 9))
def test_arc_map_agrees_with_stack_parse(n):
    for x in enumerate_matchings(n):
        diags = sorted(d for d in core.arc_diagonals(x).values() if d != (1, n + 2))
        via_arcs = Triangulation(n, tuple(diags))
        via_stack = triangulation_from_outdegrees(degrees_from_bits(matching_outdegrees(x)))
        assert via_arcs == via_stack


def test_enumeration_cap(monkeypatch):
    with pytest.raises(ResourceLimit):
        enumerate_matchings(15)
    with pytest.raises(ResourceLimit):
        enumerate_matchings(5, cap=4)
    monkeypatch.setenv(core.CAP_ENV_VAR, "3")
    assert core.enumeration_cap() == 3
    with pytest.raises(ResourceLimit):
        enumerate_triangulations(4)
    assert len(enumerate_triangulations(3)) == 5


# -- property tests -----------------------------------------------------------


@st.composite
def dyck_bits(draw, max_n=25):
    n = draw(st.integers(1, max_n))
    choices = draw(st.lists(st.booleans(), min_size=2 * n, max_size=2 * n))
    bits, opened, closed = [], 0, 0
    for c in choices:
        if opened < n and (c or opened == closed):
            bits.append(1)
            opened += 1
        else:
            bits.append(0)
            closed += 1
    return tuple(bits)


@given(dyck_bits())
def test_sequence_roundtrip_property(bits):
    x = matching_from_outdegrees(bits)
    assert matching_outdegrees(x) == bits
    d = degrees_from_bits(bits)
    assert sum(d) == len(bits) // 2
    assert bits_from_degrees(d) == bits
    t = matching_to_triangulation(x)
    assert triangulation_outdegrees(t) == d
    assert triangulation_to_matching(t) == x


@given(dyck_bits())
def test_json_roundtrip_property(bits):
    x = matching_from_outdegrees(bits)
    t = matching_to_triangulation(x)
    assert core.matching_from_json(x.to_json()) == x
    assert core.triangulation_from_json(t.to_json()) == t
    assert core.parse_bits(core.format_bits(bits)) == bits
    d = triangulation_outdegrees(t)
    assert core.parse_degrees(core.format_degrees(d)) == d
