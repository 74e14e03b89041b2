import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from phasepants.chords import AnglePoint
from phasepants.partitions import nonempty_subsets
from phasepants.simplex import (
    DsdCell,
    RationalPoint,
    SpineCube,
    amoeba_contains,
    coamoeba_contains,
    dsd_cells,
    in_dsd_cell,
    spine_cube_rank_dimension,
    spine_cubes,
)


def test_dsd_of_interval():
    cells = dsd_cells({0, 1})
    assert {(c.I, c.J) for c in cells} == {((0,), (0,)), ((1,), (1,)), ((0, 1), (0, 1)), ((0,), (0, 1)), ((1,), (0, 1))}
    assert [c.dim for c in cells] == [0, 0, 0, 1, 1]


@pytest.mark.parametrize("size", [1, 2, 3, 4])
def test_dsd_count(size):
    cells = dsd_cells(range(size))
    assert len(cells) == 3 ** size - 2 ** size
    assert sum(len(c.I) == 1 and len(c.J) == size for c in cells) == size


def test_dsd_empty():
    with pytest.raises(ValueError):
        dsd_cells([])


def test_tripod():
    cubes = spine_cubes({0, 1, 2})
    assert len(cubes) == 7
    assert sorted((c.I, c.J) for c in cubes if c.dim == 1) == [((0, 1), (0, 1, 2)), ((0, 2), (0, 1, 2)), ((1, 2), (0, 1, 2))]
    assert [(c.I, c.J) for c in spine_cubes({0, 1})] == [((0, 1), (0, 1))]
    assert spine_cubes({0}) == []
    with pytest.raises(ValueError):
        SpineCube((0,), (0, 1))


def test_amoeba_examples():
    assert amoeba_contains(RationalPoint.parse("1/3,1/3,1/3"))
    assert not amoeba_contains(RationalPoint.parse("1,0,0"))
    assert amoeba_contains(RationalPoint.parse("1/2,1/2,0"))


def test_coamoeba_examples():
    assert coamoeba_contains(AnglePoint.parse("0,1"), (0, 1))
    assert not coamoeba_contains(AnglePoint.parse("0,1/2"), (0, 1))
    assert coamoeba_contains(AnglePoint.parse("0,2/3,4/3"), (0, 1, 2))
    assert not coamoeba_contains(AnglePoint.parse("0,1/4,1/2"), (0, 1, 2))
    with pytest.raises(ValueError):
        coamoeba_contains(AnglePoint.parse("0,1"), (0,))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_cube_dimension_by_rank(n):
    for cube in spine_cubes(range(n + 1)):
        assert spine_cube_rank_dimension(cube, n) == cube.dim


@pytest.mark.parametrize("n", [2, 3])
def test_face_order_matches_barycenters(n):
    cells = dsd_cells(range(n + 1))
    for a, b in itertools.product(cells, cells):
        x = RationalPoint(a.barycenter(n))
        assert in_dsd_cell(x, b) == a.is_face_of(b)


@pytest.mark.parametrize("n", [2, 3])
def test_closed_under_faces(n):
    cubes = set(spine_cubes(range(n + 1)))
    for c in cubes:
        for I in nonempty_subsets(c.J, 2):
            if set(I) >= set(c.I):
                for K in nonempty_subsets(c.J):
                    if set(I) <= set(K):
                        assert SpineCube(I, K) in cubes


def simplex_points(max_n=4):
    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(st.integers(0, 4), min_size=n + 1, max_size=n + 1).filter(any).map(
            lambda ws: RationalPoint(tuple(Fraction(w, sum(ws)) for w in ws))))


@given(simplex_points())
def test_spine_union(x):
    cubes = spine_cubes(range(x.n + 1))
    hit = any(in_dsd_cell(x, c) for c in cubes)
    assert hit == (len(x.argmax()) >= 2)


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(
    st.lists(st.fractions(0, 2, max_denominator=6), min_size=n + 1, max_size=n + 1),
    st.fractions(0, 2, max_denominator=6), st.permutations(range(n + 1)))))
def test_coamoeba_symmetries(data):
    vals, shift, perm = data
    I = tuple(range(len(vals)))
    base = coamoeba_contains(AnglePoint(tuple(vals)), I)
    assert coamoeba_contains(AnglePoint(tuple(v + shift for v in vals)), I) == base
    assert coamoeba_contains(AnglePoint(tuple(vals[p] for p in perm)), I) == base
