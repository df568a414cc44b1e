import pytest

from orientdim import (
    DigraphError,
    FamilyError,
    FamilySpec,
    build_digraph,
    build_family,
    center_partition,
    check_cn_simple,
    distance_matrix,
    fan_dim2_orientation,
    is_dim_one_by_characterization,
    is_strongly_connected,
    metric_dimension,
    oriented_fan_c3simple,
    oriented_wheel_c3simple,
    oriented_wheel_odd,
    path_amal_cycles,
    representation,
    two_dimensional_wheel,
    wheel_dim2_orientation,
)
from orientdim.families import amalgamation_cycles, fan_triangles, tail_end, wheel_triangles

# -- wheels -----------------------------------------------------------------


@pytest.mark.parametrize("n", range(4, 21, 2))
@pytest.mark.parametrize("variant", ["A", "B"])
def test_c3simple_wheel_is_simple_and_strong(n, variant):
    D = oriented_wheel_c3simple(n, variant)
    assert D.n == n + 1 and len(D.arcs) == 2 * n
    assert is_strongly_connected(D)
    assert check_cn_simple(D, 3, wheel_triangles(n))


def test_variant_b_swaps_parity():
    D = oriented_wheel_c3simple(6, "B")
    assert D.has_arc(6, 1)
    assert all(D.has_arc(0, i) for i in (2, 4, 6))
    assert all(D.has_arc(i, 0) for i in (1, 3, 5))


@pytest.mark.parametrize("n", [3, 5, 7])
def test_odd_c3simple_wheel_rejected(n):
    with pytest.raises(FamilyError, match="if and only if n is even"):
        oriented_wheel_c3simple(n, "A")


def test_wheel_bad_variant():
    with pytest.raises(FamilyError):
        oriented_wheel_c3simple(6, "C")


@pytest.mark.parametrize("n", range(4, 21, 2))
def test_wheel_distance_pattern(n):
    # V2 -> V1 at distance 2, V2 -> V2 at distance 3.
    D = oriented_wheel_c3simple(n, "A")
    dm = distance_matrix(D)
    part = center_partition(D, [0])
    for x in part.V2:
        assert all(dm(x, y) == 2 for y in part.V1)
        assert all(dm(x, y) == 3 for y in part.V2 if y != x)


def test_center_partitions():
    part = center_partition(oriented_wheel_c3simple(6, "A"), [0])
    assert part.V1 == {1, 3, 5} and part.V2 == {2, 4, 6}
    assert center_partition(oriented_wheel_c3simple(4, "B"), [0]).V1 == {2, 4}
    fan = center_partition(oriented_fan_c3simple(2, 5, "centers-out"), [0, 1])
    assert len(fan.V2) == 2 and fan.V0 == {0, 1}


def test_center_partition_rejects_far_vertices():
    with pytest.raises(FamilyError, match="not a C3-simple"):
        center_partition(path_amal_cycles(1, [5, 5]), [0])


# -- fans -------------------------------------------------------------------


@pytest.mark.parametrize("m", [1, 2, 3, 4])
@pytest.mark.parametrize("n", range(2, 13))
@pytest.mark.parametrize("variant", ["centers-out", "centers-in"])
def test_fan_is_simple_and_strong(m, n, variant):
    D = oriented_fan_c3simple(m, n, variant)
    assert is_strongly_connected(D)
    assert check_cn_simple(D, 3, fan_triangles(m, n))
    if n % 2:
        sign = 1 if variant == "centers-out" else -1
        for c in range(m):
            assert sign * (D.out_degree(c) - D.in_degree(c)) > 0


def test_smallest_fan_is_triangle():
    D = oriented_fan_c3simple(1, 2, "centers-out")
    assert set(D.arcs) == {(0, 1), (1, 2), (2, 0)}
    assert metric_dimension(D).dimension == 1


def test_fan_2_5():
    assert metric_dimension(oriented_fan_c3simple(2, 5, "centers-out")).dimension == 3


def test_fan_1_7_degrees():
    D = oriented_fan_c3simple(1, 7, "centers-out")
    assert D.out_degree(0) == 4 and D.in_degree(0) == 3


@pytest.mark.parametrize("m", [2, 3, 4])
@pytest.mark.parametrize("n", range(2, 11))
def test_fan_center_rows(m, n):
    dm = distance_matrix(oriented_fan_c3simple(m, n))
    for i in range(m):
        for j in range(m):
            if i != j:
                assert dm(i, j) == 3
                assert (dm.d[i, m:] == dm.d[j, m:]).all()
                assert (dm.d[m:, i] == dm.d[m:, j]).all()


def test_fan_range_errors():
    with pytest.raises(FamilyError):
        oriented_fan_c3simple(0, 4)
    with pytest.raises(FamilyError):
        oriented_fan_c3simple(1, 1)


# -- odd wheels ---------------------------------------------------------------


def test_odd_wheel_closing_triangle_not_simple():
    D = oriented_wheel_odd(5, "centers-out", "vn-to-v1")
    assert is_strongly_connected(D)
    assert not check_cn_simple(D, 3, wheel_triangles(5))
    assert check_cn_simple(D, 3, wheel_triangles(5)[:-1])


def test_odd_wheel_examples():
    assert metric_dimension(oriented_wheel_odd(7, "centers-out", "v1-to-vn")).dimension == 2
    # The published case split puts this cell at (n-1)/2 = 3; exhaustive
    # search finds the 2-set {v3, v7}.
    res = metric_dimension(oriented_wheel_odd(7, "centers-in", "v1-to-vn"))
    assert (res.dimension, res.basis) == (2, (3, 7))


def test_odd_wheel_rejects_even():
    with pytest.raises(FamilyError):
        oriented_wheel_odd(6)


# -- two-dimensional constructions -----------------------------------------------


def test_dim2_wheel_representations_n8():
    D = wheel_dim2_orientation(8)
    dm = distance_matrix(D)
    table = {0: (2, 2), 1: (1, 4), 2: (0, 3), 3: (1, 1), 4: (3, 0), 5: (4, 1), 6: (3, 3), 7: (4, 4), 8: (5, 5)}
    for v, rep in table.items():
        assert representation(dm, v, (2, 4)).vector == rep
    assert not is_dim_one_by_characterization(D)


def test_dim2_wheel_n10():
    D = wheel_dim2_orientation(10)
    assert is_strongly_connected(D)
    assert metric_dimension(D).dimension == 2


def test_dim2_wheel_range():
    with pytest.raises(FamilyError, match="n >= 8"):
        wheel_dim2_orientation(7)


@pytest.mark.parametrize("n", range(4, 12))
def test_two_dimensional_wheel_routing(n):
    D = two_dimensional_wheel(n)
    assert D.n == n + 1 and len(D.arcs) == 2 * n
    assert metric_dimension(D).dimension == 2


def test_two_dimensional_wheel_rejects_3():
    with pytest.raises(FamilyError):
        two_dimensional_wheel(3)


def test_dim2_fan_arc_sets():
    c, v1, v2, v3, v4 = range(5)
    assert set(fan_dim2_orientation(3).arcs) == {(v1, v2), (v3, v2), (v1, c), (v2, c), (c, v3)}
    assert set(fan_dim2_orientation(4).arcs) == {
        (v1, v2), (v3, v2), (v3, v4), (v1, c), (v2, c), (c, v3), (v4, c)
    }


def test_dim2_fan_tail():
    dm = distance_matrix(fan_dim2_orientation(6))
    assert representation(dm, 5, (2, 3)).vector == (4, 3)
    assert representation(dm, 6, (2, 3)).vector == (5, 4)


def test_dim2_fan_not_strong():
    D = fan_dim2_orientation(9)
    assert D.in_degree(1) == 0
    assert not is_strongly_connected(D)
    assert metric_dimension(D, "allow-sentinel").dimension == 2


# -- amalgamations ------------------------------------------------------------


def test_bowtie():
    D = path_amal_cycles(1, [3, 3])
    assert D.n == 5
    assert set(D.arcs) == {(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)}
    assert D.labels == ("v1", "v2^1", "v3^1", "v2^2", "v3^2")


def test_edge_amalgamation_dimension():
    assert metric_dimension(path_amal_cycles(2, [4, 5, 6])).dimension == 2


def test_tail_distance_identity():
    x, lengths = 3, [5, 5]
    D = path_amal_cycles(x, lengths)
    dm = distance_matrix(D)
    target = tail_end(x, lengths, 1)
    for u in amalgamation_cycles(x, lengths)[1][x:]:
        assert dm(u, target) == dm(u, 0) + lengths[0] - 1


@pytest.mark.parametrize("x, lengths", [(1, [3, 4, 5]), (2, [3, 3]), (3, [4, 6, 5, 7])])
def test_cycles_close_in_n_steps(x, lengths):
    D = path_amal_cycles(x, lengths)
    assert is_strongly_connected(D)
    for cycle, L in zip(amalgamation_cycles(x, lengths), lengths):
        assert len(cycle) == L
        assert cycle[0] == 0
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            assert D.has_arc(a, b)
        assert check_cn_simple(D, L, [cycle])


@pytest.mark.parametrize("x, lengths", [(0, [3, 3]), (3, [3, 4]), (1, [2, 3]), (1, [4])])
def test_amalgamation_range_errors(x, lengths):
    with pytest.raises(FamilyError):
        path_amal_cycles(x, lengths)


# -- C_n-simple check --------------------------------------------------------------


def test_check_cn_simple_triangle():
    T = build_digraph(3, [(0, 1), (1, 2), (2, 0)])
    assert check_cn_simple(T, 3, [[0, 1, 2]])
    assert check_cn_simple(T, 3, [[0, 2, 1]])


def test_check_cn_simple_errors():
    D = build_digraph(3, [(0, 1), (1, 2)])
    with pytest.raises(DigraphError, match="missing edge"):
        check_cn_simple(D, 3, [[0, 1, 2]])
    with pytest.raises(DigraphError, match="length"):
        check_cn_simple(D, 4, [[0, 1, 2]])


# -- spec strings -----------------------------------------------------------------


@pytest.mark.parametrize(
    "text, canonical",
    [
        ("wheel-c3simple:n=6,variant=A", "wheel-c3simple:n=6,variant=A"),
        ("wheel-c3simple:n=6", "wheel-c3simple:n=6,variant=A"),
        ("fan-c3simple:m=3,n=2", "fan-c3simple:m=3,n=2,variant=centers-out"),
        ("path-amal:x=2,lengths=4+5+6", "path-amal:x=2,lengths=4+5+6"),
        ("wheel-odd:n=7,closing=v1-to-vn,fan=centers-in", "wheel-odd:n=7,fan=centers-in,closing=v1-to-vn"),
        ("wheel-dim2:n=9", "wheel-dim2:n=9"),
        ("fan-dim2:n=5", "fan-dim2:n=5"),
    ],
)
def test_spec_strings(text, canonical):
    spec = FamilySpec.parse(text)
    assert str(spec) == canonical
    assert FamilySpec.parse(canonical).build() == spec.build()


@pytest.mark.parametrize(
    "text", ["wheel:n=4", "wheel-c3simple", "wheel-c3simple:n=x", "path-amal:x=1", "fan-c3simple:n=4,q=1", "fan-dim2:n"]
)
def test_spec_string_errors(text):
    with pytest.raises(FamilyError):
        FamilySpec.parse(text)


def test_build_family_labels():
    assert build_family("fan-c3simple:m=2,n=3").labels == ("c1", "c2", "v1", "v2", "v3")
