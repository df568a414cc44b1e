import numpy as np
import pytest
from hypothesis import given, settings

from conftest import oriented_graphs
from oracles import floyd_warshall, strongly_connected
from orientdim import (
    UNREACHABLE,
    DigraphError,
    build_digraph,
    distance_matrix,
    is_strongly_connected,
    oriented_wheel_c3simple,
    parse_digraph,
    serialize_digraph,
    to_dot,
)

TRIANGLE = build_digraph(3, [(0, 1), (1, 2), (2, 0)])


def test_build_normalizes_arc_order():
    D = build_digraph(3, [(2, 0), (0, 1), (1, 2)])
    assert D.arcs == ((0, 1), (1, 2), (2, 0))
    assert D == TRIANGLE


@pytest.mark.parametrize(
    "n, arcs, message",
    [
        (3, [(0, 1), (1, 0)], "both orientations"),
        (3, [(1, 1)], "self-loop"),
        (3, [(0, 1), (0, 1)], "duplicate"),
        (3, [(0, 3)], "outside"),
        (3, [(-1, 0)], "outside"),
    ],
)
def test_build_rejects(n, arcs, message):
    with pytest.raises(DigraphError, match=message):
        build_digraph(n, arcs)


def test_wheel4_arc_set():
    c, v1, v2, v3, v4 = range(5)
    expected = {(c, v1), (c, v3), (v1, v2), (v1, v4), (v3, v4), (v3, v2), (v2, c), (v4, c)}
    D = oriented_wheel_c3simple(4, "A")
    assert set(D.arcs) == expected
    assert len(D.arcs) == 8


def test_degrees():
    D = oriented_wheel_c3simple(4, "A")
    assert D.out_degree(0) == 2 and D.in_degree(0) == 2
    assert D.in_degree(1) == 1


def test_strong_connectivity_examples():
    assert is_strongly_connected(TRIANGLE)
    assert not is_strongly_connected(build_digraph(2, [(0, 1)]))
    assert is_strongly_connected(oriented_wheel_c3simple(4, "A"))
    assert is_strongly_connected(build_digraph(1, []))
    assert not is_strongly_connected(build_digraph(2, []))


def test_distance_examples():
    dm = distance_matrix(TRIANGLE)
    assert dm(0, 1) == 1 and dm(1, 0) == 2
    assert all(dm(u, u) == 0 for u in range(3))
    assert distance_matrix(build_digraph(3, [(0, 1), (1, 2)]))(2, 0) == UNREACHABLE


def test_wheel4_distances():
    c, v1, v2, v3, v4 = range(5)
    dm = distance_matrix(oriented_wheel_c3simple(4, "A"))
    assert dm(v3, v1) == 3
    assert dm(v3, v2) == 1
    assert dm(v4, v1) == 2
    assert dm(v4, v2) == 3
    assert dm(c, v1) == 1
    assert dm(c, v2) == 2


def test_distance_matrix_is_read_only():
    dm = distance_matrix(TRIANGLE)
    with pytest.raises(ValueError):
        dm.d[0, 1] = 5


def test_parse_examples():
    assert parse_digraph("3 3\n0 1\n1 2\n2 0\n") == TRIANGLE
    D = parse_digraph("2 1\n0 1\n# comment\n")
    assert D.n == 2 and D.arcs == ((0, 1),)


@pytest.mark.parametrize(
    "text, message",
    [
        ("", "missing"),
        ("3\n0 1\n", "malformed header"),
        ("3 1\n0 x\n", "non-integer"),
        ("3 2\n0 1\n", "declares 2"),
        ("2 2\n0 1\n1 0\n", "both orientations"),
        ("3 1\n0 1 2\n", "malformed arc"),
    ],
)
def test_parse_errors(text, message):
    with pytest.raises(DigraphError, match=message):
        parse_digraph(text)


def test_serialize_wheel4_canonical():
    text = serialize_digraph(oriented_wheel_c3simple(4, "A"))
    body = [line for line in text.splitlines() if not line.startswith("#")]
    assert body == ["5 8", "0 1", "0 3", "1 2", "1 4", "2 0", "3 2", "3 4", "4 0"]
    back = parse_digraph(text)
    assert back == oriented_wheel_c3simple(4, "A")
    assert back.labels == ("c", "v1", "v2", "v3", "v4")


def test_dot_export():
    dot = to_dot(oriented_wheel_c3simple(4, "A"))
    assert dot.startswith("digraph {")
    assert "  0 -> 1;" in dot
    assert '[label="v3"]' in dot


@settings(max_examples=200, deadline=None)
@given(oriented_graphs())
def test_round_trip(D):
    assert parse_digraph(serialize_digraph(D)) == D


@settings(max_examples=300, deadline=None)
@given(oriented_graphs())
def test_distance_matrix_axioms(D):
    d = distance_matrix(D).d
    n = D.n
    assert (np.diag(d) == 0).all()
    off = ~np.eye(n, dtype=bool)
    assert (d[off] >= 1).all()
    fin = d != UNREACHABLE
    for v in range(n):
        both = fin[:, [v]] & fin[[v], :]
        through = d[:, [v]] + d[[v], :]
        assert (d[both] <= through[both]).all()
    assert is_strongly_connected(D) == bool(fin.all())


@settings(max_examples=300, deadline=None)
@given(oriented_graphs())
def test_distances_match_floyd_warshall(D):
    d = distance_matrix(D).d.astype(float)
    d[d == UNREACHABLE] = np.inf
    assert np.array_equal(d, floyd_warshall(D.n, D.arcs))
    assert is_strongly_connected(D) == strongly_connected(D.n, D.arcs)


@settings(max_examples=200, deadline=None)
@given(oriented_graphs())
def test_reversal_transposes(D):
    R = D.reverse()
    assert is_strongly_connected(R) == is_strongly_connected(D)
    assert np.array_equal(distance_matrix(R).d, distance_matrix(D).d.T)
