"""Pieces H_IK x A_nu of the phase-tropical pair-of-pants and their face poset."""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from ..chords import Net, enumerate_nets, local_alcove_faces, relabel, support
from ..complex import FacePoset
from ..errors import ResourceLimitError
from ..partitions import CyclicPartition, from_mask, index_subset, nonempty_subsets, to_mask
from .cells import PantsCellLabel, StratumLabel, enumerate_pants_cells

PIECE_MAX_N = 3


@dataclass(frozen=True, order=True)
class Piece:
    """I inside K, a tangent-free net whose chords all divide I."""

    I: tuple[int, ...]
    K: tuple[int, ...]
    nu: Net

    def __post_init__(self):
        I, K = index_subset(self.I, self.nu.n), index_subset(self.K, self.nu.n)
        if len(I) < 2 or not set(I) <= set(K):
            raise ValueError(f"piece needs 2 <= |I| and I inside K, got {I}, {K}")
        if not self.nu.dividing_test(to_mask(I)):
            raise ValueError(f"some chord of {self.nu} does not divide {I}")
        object.__setattr__(self, "I", I)
        object.__setattr__(self, "K", K)

    @property
    def dim(self) -> int:
        return len(self.K) - len(self.I) + len(self.nu.chords) - 1

    @property
    def stratum(self) -> StratumLabel:
        return StratumLabel(self.nu.partition, self.K)

    def facets(self) -> list["Piece"]:
        """Pieces one dimension down."""
        out = []
        extra = [x for x in self.K if x not in self.I]
        for x in extra:
            out.append(Piece(self.I + (x,), self.K, self.nu))
            out.append(Piece(self.I, tuple(k for k in self.K if k != x), self.nu))
        if len(self.nu.chords) > 1:
            for c in self.nu.chords:
                rest = tuple(d for d in self.nu.chords if d != c)
                out.append(Piece(self.I, self.K, relabel(self.nu.partition, rest)))
        return out

    def render(self, ascii: bool = False) -> str:
        return f"[{''.join(map(str, self.I))}|{''.join(map(str, self.K))}] x {self.nu.render(ascii)}"

    def __str__(self) -> str:
        return self.render()

    def to_json(self) -> dict:
        return {"I": list(self.I), "K": list(self.K), "nu": self.nu.to_json()}

    @classmethod
    def from_json(cls, data: dict | str) -> "Piece":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(tuple(data["I"]), tuple(data["K"]), Net.from_json(data["nu"]))


def _pieces_over(nets: Iterable[Net], ground: Iterable[int]) -> list[Piece]:
    ground = tuple(ground)
    out = []
    for nu in nets:
        if nu.has_tangent:
            continue
        test = nu.dividing_test
        for K in nonempty_subsets(ground, 2):
            for I in nonempty_subsets(K, 2):
                if test(to_mask(I)):
                    out.append(Piece(I, K, nu))
    return out


def _poset(pieces: list[Piece]) -> FacePoset:
    members = set(pieces)
    covers = []
    for p in pieces:
        for f in p.facets():
            if f not in members:
                raise AssertionError(f"face {f} of {p} missing from the enumeration")
            covers.append((f, p))
    return FacePoset([(p, p.dim) for p in pieces], covers)


def local_nets(sigma: CyclicPartition) -> list[Net]:
    """Nets over sigma and all its coarsenings, built from chord families in sigma's labels."""
    return sorted({relabel(sigma, fam) for fam in local_alcove_faces(sigma.k)})


def pieces_of_cell(sigma: CyclicPartition, J: Iterable[int], max_n: int = PIECE_MAX_N + 1) -> FacePoset:
    """Closed cell of (sigma, J), enumerated from sigma's own alcove faces."""
    J = index_subset(J, sigma.n)
    if len(J) < 2 or not sigma.divides(J):
        raise ValueError(f"{sigma} does not divide {J}")
    if sigma.n > max_n:
        raise ResourceLimitError(f"n={sigma.n} exceeds the per-cell guard {max_n}")
    return _poset(_pieces_over(local_nets(sigma), J))


class PhaseTropical:
    """Global piece poset with each piece tagged by the stratum holding its interior."""

    def __init__(self, n: int, poset: FacePoset):
        self.n = n
        self.poset = poset
        self.stratum = {p: p.stratum for p in poset}
        self.by_label: dict[StratumLabel, list[Piece]] = {}
        for p in poset:
            self.by_label.setdefault(self.stratum[p], []).append(p)

    def labels(self) -> list[StratumLabel]:
        return sorted(self.by_label)

    def label_dim(self, label: StratumLabel) -> int:
        return max(p.dim for p in self.by_label[label])

    def top_pieces(self, sigma: CyclicPartition, J: Iterable[int]) -> list[Piece]:
        label = StratumLabel(sigma, tuple(J))
        members = self.by_label.get(label, [])
        top = max((p.dim for p in members), default=-1)
        return [p for p in members if p.dim == top]

    def cell_members(self, sigma: CyclicPartition, J: Iterable[int]) -> list[Piece]:
        """Pieces whose stratum label is a face of (sigma, J)."""
        J = index_subset(J, self.n)
        out = []
        for coarse in sigma.coarsenings():
            for K in nonempty_subsets(J, 2):
                if coarse.divides(K):
                    out.extend(self.by_label.get(StratumLabel(coarse, K), []))
        return sorted(out)

    def cell(self, sigma: CyclicPartition, J: Iterable[int]) -> FacePoset:
        """Closed cell as the down-set of its top pieces."""
        return self.poset.subposet(self.poset.down_set(self.top_pieces(sigma, J)))

    def boundary(self, sigma: CyclicPartition, J: Iterable[int]) -> FacePoset:
        label = StratumLabel(sigma, tuple(J))
        cell = self.cell(sigma, J)
        return cell.subposet(p for p in cell if self.stratum[p] != label)

    def stratum_poset(self) -> FacePoset:
        """Order on labels generated by piece incidences; dims are the largest piece dims."""
        labels = self.labels()
        index = {lab: i for i, lab in enumerate(labels)}
        below = [0] * len(labels)
        for lo, hi in self.poset.covers():
            a, b = index[self.stratum[lo]], index[self.stratum[hi]]
            if a != b:
                below[b] |= 1 << a
        # transitive closure, processing labels in order of dimension
        dims = [self.label_dim(lab) for lab in labels]
        closed = [0] * len(labels)
        for b in sorted(range(len(labels)), key=lambda i: dims[i]):
            acc = below[b]
            for a in from_mask(below[b]):
                acc |= closed[a]
            closed[b] = acc
        covers = []
        for b in range(len(labels)):
            # a < b is a cover unless some c sits strictly between
            between = 0
            for c in from_mask(closed[b]):
                between |= closed[c]
            for a in from_mask(closed[b] & ~between):
                covers.append((labels[a], labels[b]))
        return FacePoset([(lab, d) for lab, d in zip(labels, dims)], covers)


@lru_cache(maxsize=4)
def assemble_phase_tropical(n: int, max_n: int = PIECE_MAX_N) -> PhaseTropical:
    if n < 1:
        raise ValueError("need n >= 1")
    if n > max_n:
        raise ResourceLimitError(f"n={n} exceeds the piece enumeration guard {max_n}")
    pieces = _pieces_over(enumerate_nets(n, max_n=max(n, 4)), range(n + 1))
    return PhaseTropical(n, _poset(pieces))


def max_piece_dims(n: int, max_n: int = PIECE_MAX_N) -> dict[PantsCellLabel, int]:
    """Largest piece dimension in every closed cell, via per-label maxima."""
    pt = assemble_phase_tropical(n, max_n=max_n)
    best = {lab: pt.label_dim(lab) for lab in pt.labels()}
    out = {}
    for cell in enumerate_pants_cells(n):
        top = -1
        for coarse in cell.sigma.coarsenings():
            for K in nonempty_subsets(cell.J, 2):
                if coarse.divides(K):
                    top = max(top, best.get(StratumLabel(coarse, K), -1))
        out[cell] = top
    return out
