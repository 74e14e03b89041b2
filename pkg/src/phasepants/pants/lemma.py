"""The complement of a cell inside its ambient product Delta_J x Delta_sigma.

Ambient faces are triples (I, K, fam): a dualizing-subdivision cell [I, K] of
Delta_J times an alcove face of Delta_sigma, written as a chord family in
sigma's own vertex labels.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from ..chords import chord_divides, local_alcove_faces, relabel, support
from ..complex import FacePoset, collapses_to, is_point
from ..partitions import CyclicPartition, index_subset, nonempty_subsets

AmbientFace = tuple  # (I, K, fam)


def _check_cell(sigma: CyclicPartition, J) -> tuple[int, ...]:
    J = index_subset(J, sigma.n)
    if len(J) < 2 or not sigma.divides(J):
        raise ValueError(f"{sigma} does not divide {J}")
    return J


def L_complex(sigma: CyclicPartition, J: Iterable[int]) -> FacePoset:
    """Pairs (K, V) with K inside one arc of the coarsening of sigma at V."""
    J = _check_cell(sigma, J)
    elems = []
    for V in nonempty_subsets(sigma.vertices()):
        coarse = sigma.coarsen(V)
        for K in nonempty_subsets(J):
            if not coarse.divides(K):
                elems.append((K, V))
    keep = set(elems)
    covers = []
    for K, V in elems:
        for x in K:
            lower = (tuple(k for k in K if k != x), V)
            if lower in keep:
                covers.append((lower, (K, V)))
        for v in V:
            lower = (K, tuple(w for w in V if w != v))
            if lower in keep:
                covers.append((lower, (K, V)))
    return FacePoset([(e, len(e[0]) + len(e[1]) - 2) for e in elems], covers)


def ambient_faces(sigma: CyclicPartition, J: Iterable[int]) -> FacePoset:
    J = tuple(J)
    fams = local_alcove_faces(sigma.k)
    elems = [(I, K, fam) for K in nonempty_subsets(J) for I in nonempty_subsets(K) for fam in fams]
    keep = set(elems)
    covers = []
    for I, K, fam in elems:
        for x in K:
            if x in I:
                continue
            covers.append(((I + (x,) if x > I[-1] else tuple(sorted(I + (x,))), K, fam), (I, K, fam)))
            covers.append(((I, tuple(k for k in K if k != x), fam), (I, K, fam)))
        if len(fam) > 1:
            for c in fam:
                covers.append(((I, K, tuple(d for d in fam if d != c)), (I, K, fam)))
    assert all(lo in keep for lo, _ in covers)
    return FacePoset([(e, _dim(e)) for e in elems], covers)


def _dim(face: AmbientFace) -> int:
    I, K, fam = face
    return len(K) - len(I) + len(fam) - 1


def in_phase(sigma: CyclicPartition, face: AmbientFace) -> bool:
    """Is the ambient face a piece of the cell: every chord divides I."""
    I, _, fam = face
    return all(chord_divides(c, I, sigma) for c in fam)


def face_vertices(face: AmbientFace) -> list[AmbientFace]:
    """Vertices (I', I', {c}) with I <= I' <= K and c a chord of the family."""
    I, K, fam = face
    extra = [k for k in K if k not in I]
    out = []
    for mask in range(1 << len(extra)):
        Ip = tuple(sorted(I + tuple(x for b, x in enumerate(extra) if mask >> b & 1)))
        out.extend((Ip, Ip, (c,)) for c in fam)
    return out


def single_part(sigma: CyclicPartition, face: AmbientFace) -> bool:
    _, K, fam = face
    return not sigma.coarsen(support(fam)).divides(K)


def star_complement(sigma: CyclicPartition, J: Iterable[int]) -> FacePoset:
    """Ambient faces with no vertex in the cell, by the vertex criterion."""
    J = _check_cell(sigma, J)
    amb = ambient_faces(sigma, J)
    keep = [f for f in amb if not any(in_phase(sigma, v) for v in face_vertices(f))]
    return amb.subposet(keep)


@dataclass
class ComplementReport:
    sigma: CyclicPartition
    J: tuple[int, ...]
    ambient_size: int = 0
    complement_size: int = 0
    census_failures: list = field(default_factory=list)
    criterion_mismatches: list = field(default_factory=list)
    carriers_missing: list = field(default_factory=list)
    carriers_extra: list = field(default_factory=list)
    open_cell_failures: list = field(default_factory=list)
    m_collapse_failures: list = field(default_factory=list)
    m_faces_checked: int = 0

    @property
    def ok(self) -> bool:
        return not (self.census_failures or self.criterion_mismatches or self.carriers_missing
                    or self.carriers_extra or self.open_cell_failures or self.m_collapse_failures)

    def witness(self) -> dict:
        def show(items):
            return [repr(x) for x in items[:5]]

        return {
            "cell": [self.sigma.render(ascii=True), list(self.J)],
            "census_failures": show(self.census_failures),
            "criterion_mismatches": show(self.criterion_mismatches),
            "carriers_missing": show(self.carriers_missing),
            "carriers_extra": show(self.carriers_extra),
            "open_cell_failures": show(self.open_cell_failures),
            "m_collapse_failures": show(self.m_collapse_failures),
        }


def _intersection_poset(sigma: CyclicPartition, amb: FacePoset, face: AmbientFace) -> FacePoset:
    return amb.subposet(g for g in amb.down_set([face]) if in_phase(sigma, g))


def check_complement(sigma: CyclicPartition, J: Iterable[int], m_cache: dict | None = None,
                     retries: int = 32, seed: int = 0) -> ComplementReport:
    """Vertex census, both complement criteria, carrier support versus L, and M-collapsibility."""
    J = _check_cell(sigma, J)
    rep = ComplementReport(sigma, J)
    amb = ambient_faces(sigma, J)
    rep.ambient_size = len(amb)
    phase_vertex = {v: in_phase(sigma, v) for v in amb if amb.dim(v) == 0}
    complement = []
    for f in amb:
        verts = face_vertices(f)
        found = {v for v in amb.down_set([f]) if amb.dim(v) == 0}
        I, K, fam = f
        if set(verts) != found or len(found) != 2 ** (len(K) - len(I)) * len(fam):
            rep.census_failures.append(f)
        outside = not any(phase_vertex[v] for v in verts)
        if outside != single_part(sigma, f):
            rep.criterion_mismatches.append(f)
        if outside:
            complement.append(f)
    rep.complement_size = len(complement)

    # carriers (K, supp fam) must sweep out exactly L, each as an open cell
    L = L_complex(sigma, J)
    euler: dict = {}
    for I, K, fam in complement:
        key = (K, support(fam))
        euler[key] = euler.get(key, 0) + (-1) ** _dim((I, K, fam))
    rep.carriers_missing = sorted(set(L) - set(euler))
    rep.carriers_extra = sorted(set(euler) - set(L))
    rep.open_cell_failures = sorted(k for k, e in euler.items() if k in L and e != (-1) ** L.dim(k))

    # faces meeting the cell without lying in it: the part inside must collapse to a point
    cache = {} if m_cache is None else m_cache
    for f in amb:
        if in_phase(sigma, f) or not any(phase_vertex[v] for v in face_vertices(f)):
            continue
        I, K, fam = f
        key = (I, K, relabel(sigma, fam))
        if key not in cache:
            sub = _intersection_poset(sigma, amb, f)
            cache[key] = collapses_to(sub, is_point, retries=retries, seed=seed)[0]
            rep.m_faces_checked += 1
        if not cache[key]:
            rep.m_collapse_failures.append(f)
    return rep
