"""Faces of the amoeba-side simplex: dualizing subdivision, spine cubes, and
the hypersimplex / coamoeba membership predicates.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .chords import AnglePoint
from .linalg import rational_rank
from .partitions import index_subset, nonempty_subsets


@dataclass(frozen=True, order=True)
class DsdCell:
    """Cell of the dualizing subdivision: convex hull of barycenters of faces between I and J."""

    I: tuple[int, ...]
    J: tuple[int, ...]

    def __post_init__(self):
        I, J = index_subset(self.I), index_subset(self.J)
        if not I or not set(I) <= set(J):
            raise ValueError(f"dsd cell needs nonempty I inside J, got {I}, {J}")
        object.__setattr__(self, "I", I)
        object.__setattr__(self, "J", J)

    @property
    def dim(self) -> int:
        return len(self.J) - len(self.I)

    def is_face_of(self, other: "DsdCell") -> bool:
        return set(self.J) <= set(other.J) and set(self.I) >= set(other.I)

    def barycenter(self, n: int) -> tuple[Fraction, ...]:
        """Average of the barycenters of the faces Delta_L with I <= L <= J."""
        extra = [j for j in self.J if j not in self.I]
        corners = []
        for r in range(len(extra) + 1):
            for add in itertools.combinations(extra, r):
                L = set(self.I) | set(add)
                corners.append([Fraction(1, len(L)) if i in L else Fraction(0) for i in range(n + 1)])
        return tuple(sum(col, Fraction(0)) / len(corners) for col in zip(*corners))

    def to_json(self) -> dict:
        return {"I": list(self.I), "J": list(self.J)}


@dataclass(frozen=True, order=True)
class SpineCube(DsdCell):
    """Face H_{IJ} of the tropical hyperplane; requires |I| >= 2."""

    def __post_init__(self):
        super().__post_init__()
        if len(self.I) < 2:
            raise ValueError("spine cubes need |I| >= 2")


def dsd_cells(J: Iterable[int]) -> list[DsdCell]:
    J = index_subset(J)
    if not J:
        raise ValueError("dsd_cells() needs a nonempty J")
    out = [DsdCell(I, K) for K in nonempty_subsets(J) for I in nonempty_subsets(K)]
    return sorted(out, key=lambda c: (c.dim, c.J, c.I))


def spine_cubes(J: Iterable[int]) -> list[SpineCube]:
    J = index_subset(J)
    out = [SpineCube(I, K) for K in nonempty_subsets(J, 2) for I in nonempty_subsets(K, 2)]
    return sorted(out, key=lambda c: (c.dim, c.J, c.I))


def spine_cube_rank_dimension(cube: DsdCell, n: int) -> int:
    """Affine dimension of the equalities cutting out the cube, by exact rank."""
    rows = []
    I = list(cube.I)
    for a, b in zip(I, I[1:]):
        row = [0] * (n + 1)
        row[a], row[b] = 1, -1
        rows.append(row)
    for j in range(n + 1):
        if j not in cube.J:
            row = [0] * (n + 1)
            row[j] = 1
            rows.append(row)
    rows.append([1] * (n + 1))
    return n + 1 - rational_rank(rows)


# -- rational points --------------------------------------------------


@dataclass(frozen=True)
class RationalPoint:
    coords: tuple[Fraction, ...]

    def __post_init__(self):
        coords = tuple(Fraction(c) for c in self.coords)
        if any(c < 0 for c in coords) or sum(coords) != 1:
            raise ValueError(f"{coords} is not a point of the simplex")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def of(cls, values: Iterable) -> "RationalPoint":
        return cls(tuple(Fraction(str(v).strip()) if isinstance(v, str) else Fraction(v) for v in values))

    @classmethod
    def parse(cls, text: str) -> "RationalPoint":
        return cls.of(t for t in text.split(",") if t.strip())

    @property
    def n(self) -> int:
        return len(self.coords) - 1

    def argmax(self) -> tuple[int, ...]:
        top = max(self.coords)
        return tuple(i for i, c in enumerate(self.coords) if c == top)

    def support(self) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.coords) if c != 0)

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coords]


def in_dsd_cell(x: RationalPoint, cell: DsdCell) -> bool:
    """Exact membership in the closed cell: constant and maximal on I, zero off J."""
    c = x.coords
    if any(c[j] != 0 for j in range(len(c)) if j not in cell.J):
        return False
    top = c[cell.I[0]]
    if any(c[i] != top for i in cell.I):
        return False
    return all(c[k] <= top for k in range(len(c)))


def amoeba_contains(x: RationalPoint) -> bool:
    """Hypersimplex test with perimeter normalized to 1: every coordinate at most 1/2."""
    return all(c <= Fraction(1, 2) for c in x.coords)


def coamoeba_contains(theta: AnglePoint, I: Sequence[int]) -> bool:
    """Closed partial coamoeba: the angles indexed by I leave no gap wider than pi."""
    I = index_subset(I)
    if len(I) < 2:
        raise ValueError("coamoeba_contains() needs |I| >= 2")
    angles = sorted(theta.thetas[i] for i in I)
    gaps = [b - a for a, b in zip(angles, angles[1:])] + [angles[0] + 2 - angles[-1]]
    return max(gaps) <= 1


def cells_to_json(cells: Iterable[DsdCell]) -> str:
    return json.dumps([c.to_json() for c in cells])
