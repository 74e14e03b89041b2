import itertools

import pytest
from hypothesis import given, strategies as st

from conftest import partitions_up_to
from phasepants.errors import ResourceLimitError
from phasepants.partitions import (
    CyclicPartition,
    coarsen,
    divides,
    enumerate_cyclic_partitions,
    is_coarsening,
    nonempty_subsets,
)
from phasepants.verify import cyclic_partition_oracle

P = CyclicPartition.parse


def test_n1_partitions():
    got = enumerate_cyclic_partitions(1)
    assert [s.render() for s in got] == ["⟨{01}⟩", "⟨0,1⟩"]


def test_n2_partitions():
    got = {s.render() for s in enumerate_cyclic_partitions(2)}
    assert got == {"⟨{012}⟩", "⟨{01},2⟩", "⟨{02},1⟩", "⟨0,{12}⟩", "⟨0,1,2⟩", "⟨0,2,1⟩"}


def test_n3_counts_by_part_count():
    got = enumerate_cyclic_partitions(3)
    assert len(got) == 26
    by_k = [sum(s.k == k for s in got) for k in range(1, 5)]
    assert by_k == [1, 7, 12, 6]


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_counts_match_permutation_oracle(n):
    ours = {tuple(frozenset(p) for p in s.parts) for s in enumerate_cyclic_partitions(n)}
    assert ours == cyclic_partition_oracle(n)


def test_guard():
    with pytest.raises(ResourceLimitError):
        enumerate_cyclic_partitions(7)


def test_rotation_is_canonical():
    assert CyclicPartition(((1,), (2,), (3,), (4, 5), (0,)), 5) == P("<0|1|2|3|45>")
    assert P("⟨1,2,3,{45},0⟩") == P("<0|1|2|3|45>")


def test_divides_examples():
    assert not divides(P("⟨{01},2⟩"), {0, 1})
    assert divides(P("⟨0,1,2⟩"), {0, 2})
    assert not divides(P("⟨1,2,3,{45},0⟩"), {4, 5})
    with pytest.raises(ValueError):
        divides(P("<0|1>"), [])


def test_coarsen_examples():
    s = P("⟨0,1,2⟩")
    assert coarsen(s, {0, 1, 2}) == s
    assert coarsen(s, {1}) == P("⟨{012}⟩")
    assert coarsen(s, {0, 1}) == P("⟨0,{12}⟩")
    with pytest.raises(ValueError):
        coarsen(s, set())


def test_single_vertex_coarsenings_coincide():
    s = P("<0|1>")
    assert coarsen(s, {0}) == coarsen(s, {1}) == P("<01>")
    assert len(s.coarsenings()) == 2


def test_is_coarsening_examples():
    s = P("⟨0,1,2⟩")
    assert is_coarsening(s, s)
    assert is_coarsening(P("⟨{012}⟩"), s)
    assert not is_coarsening(P("⟨0,2,1⟩"), s)


@given(partitions_up_to(), st.data())
def test_coarsen_has_V_parts_and_composes(sigma, data):
    V = data.draw(st.sets(st.sampled_from(list(sigma.vertices())), min_size=1))
    coarse, vmap = sigma.coarsen_with_map(V)
    assert coarse.k == len(V)
    assert is_coarsening(coarse, sigma)
    W = data.draw(st.sets(st.sampled_from(sorted(V)), min_size=1))
    twice = coarse.coarsen(vmap[w] for w in W)
    assert twice == sigma.coarsen(W)


@given(partitions_up_to(), st.data())
def test_divides_is_monotone_under_refinement(sigma, data):
    J = data.draw(st.sets(st.integers(0, sigma.n), min_size=1))
    for coarse in sigma.coarsenings():
        if divides(coarse, J):
            assert divides(sigma, J)


@given(partitions_up_to(5))
def test_render_parse_round_trip(sigma):
    assert P(sigma.render(), sigma.n) == sigma
    assert P(sigma.render(ascii=True), sigma.n) == sigma
    assert CyclicPartition.from_json(sigma.to_json()) == sigma


@pytest.mark.parametrize("n", [2, 3])
def test_coarsening_relation_matches_vertex_subsets(n):
    parts = enumerate_cyclic_partitions(n)
    for fine, coarse in itertools.product(parts, parts):
        brute = any(fine.coarsen(V) == coarse for V in nonempty_subsets(fine.vertices()))
        assert is_coarsening(coarse, fine) == brute
