import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from phasepants.complex import (
    INTEGERS,
    Z2,
    FacePoset,
    SimplicialComplex,
    collapse,
    euler_characteristic,
    homology,
    is_circle,
    labeled_isomorphic,
    order_complex,
    poset_homology,
)
from phasepants.complex.collapse import collapses_to, is_point
from phasepants.errors import ResourceLimitError


def simplex_faces(n_vertices):
    """Face poset of the full simplex on n vertices."""
    verts = range(n_vertices)
    elems = [(f, len(f) - 1) for r in range(1, n_vertices + 1) for f in itertools.combinations(verts, r)]
    covers = [(f[:i] + f[i + 1:], f) for f, d in elems if d > 0 for i in range(len(f))]
    return FacePoset(elems, covers)


def cycle(m, tag=""):
    elems = [(f"{tag}v{i}", 0) for i in range(m)] + [(f"{tag}e{i}", 1) for i in range(m)]
    covers = [(f"{tag}v{i}", f"{tag}e{i}") for i in range(m)] + [(f"{tag}v{(i + 1) % m}", f"{tag}e{i}") for i in range(m)]
    return FacePoset(elems, covers)


def cube_faces(d):
    """Faces of [0,1]^d as strings over {0,1,*}."""
    elems = [("".join(w), w.count("*")) for w in itertools.product("01*", repeat=d)]
    covers = []
    for w, k in elems:
        for i, ch in enumerate(w):
            if ch == "*":
                for b in "01":
                    covers.append((w[:i] + b + w[i + 1:], w))
    return FacePoset(elems, covers)


def test_order_complex_small():
    one = FacePoset([("a", 0)])
    assert order_complex(one).facets == [(0,)]
    interval = FacePoset([("a", 0), ("b", 0), ("ab", 1)], [("a", "ab"), ("b", "ab")])
    oc = order_complex(interval)
    assert oc.f_vector() == (3, 2)
    assert order_complex(cycle(4)).f_vector() == (8, 8)


def test_homology_examples():
    c8 = SimplicialComplex(range(8), [(i, (i + 1) % 8) for i in range(8)])
    h = homology(c8)
    assert h.ranks == [1, 1] and h.torsion_free
    sphere = SimplicialComplex(range(4), itertools.combinations(range(4), 3))
    assert homology(sphere).ranks == [1, 0, 1]


def test_projective_plane_torsion():
    rp2 = [(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 5, 1), (1, 2, 4), (2, 3, 5), (3, 4, 1), (4, 5, 2), (5, 1, 3)]
    c = SimplicialComplex(range(6), rp2)
    h = homology(c, INTEGERS)
    assert h.ranks == [1, 0, 0] and h.torsion == [[], [2], []]
    assert homology(c, Z2).ranks == [1, 1, 1]


def test_guard():
    sphere = SimplicialComplex(range(5), itertools.combinations(range(5), 4))
    with pytest.raises(ResourceLimitError):
        homology(sphere, nonzero_guard=10)


def test_euler_examples():
    assert euler_characteristic(FacePoset([("a", 0)])) == 1
    assert euler_characteristic(cycle(4)) == 0


def test_collapse_examples():
    core = collapse(simplex_faces(4))
    assert len(core) == 1 and is_point(core)
    assert len(collapse(cycle(4))) == len(cycle(4))
    assert is_point(collapse(cube_faces(3)))


def test_collapse_is_deterministic():
    p = simplex_faces(4).subposet(x for x in simplex_faces(4) if len(x) < 4)  # boundary sphere
    q = cube_faces(2)
    assert collapse(p).labels == collapse(p).labels
    assert collapse(q).labels == collapse(q).labels


def test_is_circle_examples():
    assert is_circle(cycle(4))
    path = FacePoset([("a", 0), ("b", 0), ("ab", 1)], [("a", "ab"), ("b", "ab")])
    assert not is_circle(path)
    two = cycle(3, "x").elements() + cycle(3, "y").elements()
    covers = cycle(3, "x").covers() + cycle(3, "y").covers()
    assert not is_circle(FacePoset(two, covers))


def test_labeled_isomorphism():
    p = cube_faces(2)
    assert labeled_isomorphic(p, p, lambda x: x)
    swap = {x: x.replace("0", "t").replace("1", "0").replace("t", "1") for x in p}
    assert labeled_isomorphic(p, p, swap)
    bad = dict(swap)
    bad["00"], bad["0*"] = bad["0*"], bad["00"]
    assert not labeled_isomorphic(p, p, bad)
    with pytest.raises(ValueError):
        labeled_isomorphic(p, p, {"00": "00"})


def test_json_round_trip():
    p = cube_faces(2)
    q = FacePoset.from_json(p.to_json())
    assert q.elements() == p.elements() and set(q.covers()) == set(p.covers())
    assert p.to_dot().startswith("digraph")


def test_bad_cover_rejected():
    with pytest.raises(ValueError):
        FacePoset([("a", 0), ("b", 2)], [("a", "b")])
    with pytest.raises(ValueError):
        FacePoset([("a", 0), ("a", 1)])


@st.composite
def random_complexes(draw):
    n = draw(st.integers(2, 6))
    facets = draw(st.lists(st.sets(st.integers(0, n - 1), min_size=1, max_size=4), min_size=1, max_size=6))
    faces = {tuple(sorted(s)) for f in facets for r in range(1, len(f) + 1) for s in itertools.combinations(sorted(f), r)}
    elems = [(f, len(f) - 1) for f in faces]
    covers = [(f[:i] + f[i + 1:], f) for f in faces if len(f) > 1 for i in range(len(f))]
    return FacePoset(elems, covers)


@settings(max_examples=60, deadline=None)
@given(random_complexes())
def test_euler_matches_betti(p):
    h = poset_homology(p)
    assert h.euler_characteristic == euler_characteristic(p)


@settings(max_examples=60, deadline=None)
@given(random_complexes())
def test_collapse_keeps_homology(p):
    before = poset_homology(p).ranks
    after = poset_homology(collapse(p)).ranks
    pad = lambda r: r + [0] * (5 - len(r))
    assert pad(before) == pad(after)


@settings(max_examples=60, deadline=None)
@given(random_complexes())
def test_z2_agrees_when_torsion_free(p):
    hz = poset_homology(p, INTEGERS)
    if hz.torsion_free:
        assert poset_homology(p, Z2).ranks == hz.ranks


def test_randomized_retries_reach_goal():
    ok, core = collapses_to(simplex_faces(3), is_point, retries=4, seed=1)
    assert ok and is_point(core)
    rng = random.Random(3)
    assert is_point(collapse(simplex_faces(4), rng=rng))
