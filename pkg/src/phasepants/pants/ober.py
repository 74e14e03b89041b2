"""The 2x2 case: ober-tropical cell versus phase-tropical cell in Delta_J x Delta_sigma.

Here sigma = <0,1,2> and J = {0,1,2}.  Delta_sigma carries its alcove
subdivision with the central triangle further split by its trivalent
skeleton: a centre point, three legs to the chord points and three
triangles.  The ober cell is the union of the squares H_ij x leg(c) over the
chords c separating i from j; the phase cell is the refined piece complex.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from ..chords import chord_divides, is_tangent, local_alcove_faces
from ..complex import FacePoset, is_circle, poset_homology
from ..partitions import CyclicPartition, nonempty_subsets
from .lemma import in_phase

SIGMA = CyclicPartition(((0,), (1,), (2,)), 2)
J = (0, 1, 2)
CENTER = ("center",)


def _central():
    return tuple(c for c in local_alcove_faces(3) if len(c) == 3 and not any(map(is_tangent, c)))[0]


def refined_simplex() -> FacePoset:
    """Alcove faces of Delta_sigma with the central triangle stellarly subdivided."""
    central = _central()
    elems, covers = [], []
    for fam in local_alcove_faces(3):
        if fam == central:
            continue
        elems.append((("alcove", fam), len(fam) - 1))
        if len(fam) > 1:
            covers += [(("alcove", tuple(d for d in fam if d != c)), ("alcove", fam)) for c in fam]
    elems.append((CENTER, 0))
    for c in central:
        leg = ("leg", c)
        elems.append((leg, 1))
        covers += [(CENTER, leg), (("alcove", (c,)), leg)]
    for edge in itertools.combinations(central, 2):
        tri = ("triangle", edge)
        elems.append((tri, 2))
        covers += [(("alcove", edge), tri)] + [(("leg", c), tri) for c in edge]
    return FacePoset(elems, covers)


def dsd_simplex() -> FacePoset:
    elems = [((I, K), len(K) - len(I)) for K in nonempty_subsets(J) for I in nonempty_subsets(K)]
    covers = []
    for (I, K), _ in elems:
        for x in K:
            if x not in I:
                covers.append(((tuple(sorted(I + (x,))), K), (I, K)))
                covers.append(((I, tuple(k for k in K if k != x)), (I, K)))
    return FacePoset(elems, covers)


def product(p: FacePoset, q: FacePoset) -> FacePoset:
    elems = [((a, b), p.dim(a) + q.dim(b)) for a in p for b in q]
    covers = [((lo, b), (hi, b)) for lo, hi in p.covers() for b in q]
    covers += [((a, lo), (a, hi)) for a in p for lo, hi in q.covers()]
    return FacePoset(elems, covers)


def _closure(amb: FacePoset, tops) -> FacePoset:
    return amb.subposet(amb.down_set(tops))


def ober_cell_2x2() -> tuple[FacePoset, FacePoset, FacePoset]:
    """(ambient, ober cell, phase cell), all as subposets of the refined product."""
    amb = product(dsd_simplex(), refined_simplex())
    central = _central()
    ober_tops = []
    for i, j in itertools.combinations(J, 2):
        for c in central:
            if chord_divides(c, (i, j), SIGMA):
                ober_tops.append((((i, j), J), ("leg", c)))
    # phase pieces from the unrefined alcove faces, then subdivide the central one
    phase_tops = []
    for K in nonempty_subsets(J):
        for I in nonempty_subsets(K):
            for fam in local_alcove_faces(3):
                if not in_phase(SIGMA, (I, K, fam)):
                    continue
                if fam == central:
                    phase_tops += [((I, K), ("triangle", e)) for e in itertools.combinations(central, 2)]
                else:
                    phase_tops.append(((I, K), ("alcove", fam)))
    return amb, _closure(amb, ober_tops), _closure(amb, phase_tops)


def boundary_edges(cell: FacePoset) -> set:
    """Edges of a pure 2-complex lying on exactly one of its 2-cells."""
    return {e for e in cell if cell.dim(e) == 1 and len(cell.cofacets_of(e)) == 1}


def _edges_mod2(amb: FacePoset, faces) -> set:
    out: set = set()
    for f in faces:
        out ^= {e for e in amb.facets_of(f)}
    return out


def _in_ambient_boundary(face) -> bool:
    (_, K), r = face
    if K != J:
        return True
    if r == CENTER or r[0] in ("leg", "triangle"):
        return False
    return len({v for c in r[1] for v in c}) < 3


@dataclass
class OberReport:
    ober_two_cells: int
    phase_two_cells: int
    ober_betti: list
    phase_betti: list
    ober_boundary_circle: bool
    phase_boundary_circle: bool
    boundaries_in_ambient_boundary: bool
    boundaries_coincide: bool
    move_equivalent: bool
    prism_relation: bool
    only_in_ober: list = field(default_factory=list)
    only_in_phase: list = field(default_factory=list)

    def to_json(self) -> dict:
        out = dict(self.__dict__)
        out["only_in_ober"] = [repr(e) for e in self.only_in_ober]
        out["only_in_phase"] = [repr(e) for e in self.only_in_phase]
        return out


def compare_ober_phase() -> OberReport:
    amb, ober, phase = ober_cell_2x2()
    bo, bp = boundary_edges(ober), boundary_edges(phase)
    # the roofing moves sweep through the prisms H_ij x T_ij; their back faces sit over b_ij
    central = _central()
    backs, prisms = [], []
    for i, j in itertools.combinations(J, 2):
        edge = tuple(c for c in central if chord_divides(c, (i, j), SIGMA))
        backs.append((((i, j), (i, j)), ("triangle", edge)))
        prisms.append((((i, j), J), ("triangle", edge)))
    top = lambda cell: {f for f in cell if cell.dim(f) == 2}
    prism_sides: set = set()
    for pr in prisms:
        prism_sides ^= set(amb.facets_of(pr))
    return OberReport(
        ober_two_cells=len(top(ober)),
        phase_two_cells=len(top(phase)),
        ober_betti=poset_homology(ober).ranks,
        phase_betti=poset_homology(phase).ranks,
        ober_boundary_circle=is_circle(ober.subposet(ober.down_set(bo))),
        phase_boundary_circle=is_circle(phase.subposet(phase.down_set(bp))),
        boundaries_in_ambient_boundary=all(_in_ambient_boundary(f) for f in amb.down_set(bo | bp)),
        boundaries_coincide=amb.down_set(bo) == amb.down_set(bp),
        move_equivalent=(bo ^ bp) == _edges_mod2(amb, backs),
        prism_relation=(top(ober) ^ top(phase) ^ set(backs)) == prism_sides,
        only_in_ober=sorted(bo - bp, key=repr),
        only_in_phase=sorted(bp - bo, key=repr),
    )
