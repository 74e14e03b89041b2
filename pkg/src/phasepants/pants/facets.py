"""Codimension-one pieces of a cell and the two shapes of top pieces around them."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from ..partitions import CyclicPartition, index_subset
from .cells import StratumLabel
from .pieces import Piece, pieces_of_cell

TYPE_1 = "type-1"  # |I| = 2, one chord short of a maximal net
TYPE_2 = "type-2"  # |I| = 3, maximal net


def top_piece_type(p: Piece, sigma: CyclicPartition) -> str | None:
    k = sigma.k
    if len(p.I) == 2 and len(p.nu.chords) == k - 1:
        return TYPE_1
    if len(p.I) == 3 and len(p.nu.chords) == k:
        return TYPE_2
    return None


@dataclass
class Codim1Entry:
    piece: Piece
    incident: list[Piece]
    on_boundary: bool  # stratum label is a proper face of the cell

    @property
    def signature(self) -> tuple[int, int]:
        return (len(self.piece.I), len(self.piece.nu.chords))


@dataclass
class FacetReport:
    sigma: CyclicPartition
    J: tuple[int, ...]
    top_dim: int
    top_types: dict = field(default_factory=dict)
    entries: list[Codim1Entry] = field(default_factory=list)

    def interior(self) -> list[Codim1Entry]:
        return [e for e in self.entries if len(e.incident) == 2]

    def boundary(self) -> list[Codim1Entry]:
        return [e for e in self.entries if len(e.incident) == 1]

    def problems(self) -> list[str]:
        out = []
        untyped = [p for p, t in self.top_types.items() if t is None]
        out += [f"top piece {p} is neither type" for p in untyped]
        for e in self.entries:
            if len(e.incident) not in (1, 2):
                out.append(f"{e.piece} meets {len(e.incident)} top pieces")
            elif (len(e.incident) == 1) != e.on_boundary:
                out.append(f"{e.piece} meets {len(e.incident)} top pieces but on_boundary={e.on_boundary}")
        for e in self.interior():
            if any(self.top_types[q] is None for q in e.incident):
                out.append(f"interior {e.piece} is flanked by an untyped top piece")
        return out

    @property
    def ok(self) -> bool:
        return not self.problems()

    def to_json(self) -> dict:
        census = {TYPE_1: 0, TYPE_2: 0, "other": 0}
        for t in self.top_types.values():
            census[t or "other"] += 1
        sigs: dict = {}
        for e in self.interior():
            key = f"{e.signature[0]},{e.signature[1]}"
            sigs[key] = sigs.get(key, 0) + 1
        return {
            "cell": [self.sigma.render(ascii=True), list(self.J)],
            "top_dim": self.top_dim,
            "top_types": census,
            "codim1": len(self.entries),
            "interior": len(self.interior()),
            "boundary": len(self.boundary()),
            "interior_signatures": dict(sorted(sigs.items())),
            "problems": self.problems()[:5],
        }


def classify_codim1_pieces(sigma: CyclicPartition, J: Iterable[int]) -> FacetReport:
    """Incidence count of every codim-1 piece with the top pieces of the cell.

    The two shapes Type 1 / Type 2 describe the top pieces themselves; a
    codim-1 piece between a Type 1 and a Type 2 piece has its own (|I|, |nu|)
    signature, so the report carries the types of the flanking top pieces.
    """
    J = index_subset(J, sigma.n)
    cell = pieces_of_cell(sigma, J)
    label = StratumLabel(sigma, J)
    top = cell.max_dim
    rep = FacetReport(sigma, J, top)
    for p in cell:
        if cell.dim(p) == top:
            rep.top_types[p] = top_piece_type(p, sigma)
    for p in cell:
        if cell.dim(p) == top - 1:
            rep.entries.append(Codim1Entry(p, cell.cofacets_of(p), p.stratum != label))
    return rep
