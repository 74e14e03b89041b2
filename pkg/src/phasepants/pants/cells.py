"""The abstract lattice of cells (sigma, J) of the complex pair-of-pants."""
from __future__ import annotations

import json
from dataclasses import dataclass

from ..complex import FacePoset
from ..errors import ResourceLimitError
from ..partitions import CyclicPartition, enumerate_cyclic_partitions, index_subset, nonempty_subsets

LATTICE_MAX_N = 5


@dataclass(frozen=True, order=True)
class PantsCellLabel:
    """A cell (sigma, J); sigma must divide J."""

    sigma: CyclicPartition
    J: tuple[int, ...]

    def __post_init__(self):
        J = index_subset(self.J, self.sigma.n)
        if len(J) < 2 or not self.sigma.divides(J):
            raise ValueError(f"{self.sigma} does not divide {J}")
        object.__setattr__(self, "J", J)

    @property
    def dim(self) -> int:
        return self.sigma.k + len(self.J) - 4

    def is_face_of(self, other: "PantsCellLabel") -> bool:
        return set(self.J) <= set(other.J) and self.sigma.is_coarsening_of(other.sigma)

    def facets(self) -> list["PantsCellLabel"]:
        """Labels one dimension down: drop one vertex of sigma or one element of J."""
        out = set()
        if self.sigma.k > 2:
            for v in self.sigma.vertices():
                coarse = self.sigma.coarsen(w for w in self.sigma.vertices() if w != v)
                if coarse.divides(self.J):
                    out.add(PantsCellLabel(coarse, self.J))
        for j in self.J:
            rest = tuple(x for x in self.J if x != j)
            if len(rest) >= 2 and self.sigma.divides(rest):
                out.add(PantsCellLabel(self.sigma, rest))
        return sorted(out)

    def render(self, ascii: bool = False) -> str:
        return f"({self.sigma.render(ascii)}, {{{''.join(map(str, self.J))}}})"

    def __str__(self) -> str:
        return self.render()

    def to_json(self) -> dict:
        return {"sigma": self.sigma.to_json(), "J": list(self.J)}

    @classmethod
    def from_json(cls, data: dict | str) -> "PantsCellLabel":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(CyclicPartition.from_json(data["sigma"]), tuple(data["J"]))

    @classmethod
    def parse(cls, sigma: str, J: str, n: int | None = None) -> "PantsCellLabel":
        """From strings like '<0|1|2>' and '012' (or '0,1,2')."""
        members = [int(t) for t in (J.split(",") if "," in J else list(J.strip("{} ")))]
        part = CyclicPartition.parse(sigma, n)
        return cls(part, tuple(members))


# both cells and strata carry the same data
StratumLabel = PantsCellLabel


def enumerate_pants_cells(n: int, max_n: int = LATTICE_MAX_N) -> FacePoset:
    if n < 1:
        raise ValueError("need n >= 1")
    if n > max_n:
        raise ResourceLimitError(f"n={n} exceeds the lattice guard {max_n}")
    cells = []
    for sigma in enumerate_cyclic_partitions(n, max_n=max(n, max_n)):
        for J in nonempty_subsets(range(n + 1), 2):
            if sigma.divides(J):
                cells.append(PantsCellLabel(sigma, J))
    covers = [(f, c) for c in cells for f in c.facets()]
    return FacePoset([(c, c.dim) for c in cells], covers)
