"""Index subsets and cyclic partitions of the ground set {0, ..., n}.

A cyclic partition labels a stratum of the torus: the parts are the clusters
of equal angles, listed counter-clockwise.  Vertex ``i`` is the gap between
``parts[i - 1]`` and ``parts[i]``.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import ResourceLimitError

DEFAULT_MAX_N = 6

IndexSubset = tuple  # sorted, duplicate-free tuple of ints


def index_subset(members: Iterable[int], n: int | None = None) -> tuple[int, ...]:
    subset = tuple(sorted({int(m) for m in members}))
    if subset and subset[0] < 0:
        raise ValueError(f"negative index in {subset}")
    if n is not None and subset and subset[-1] > n:
        raise ValueError(f"index subset {subset} not contained in 0..{n}")
    return subset


def to_mask(members: Iterable[int]) -> int:
    m = 0
    for i in members:
        m |= 1 << i
    return m


def from_mask(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def nonempty_subsets(items: Sequence, min_size: int = 1) -> list[tuple]:
    items = tuple(items)
    return [
        c for r in range(max(min_size, 1), len(items) + 1) for c in itertools.combinations(items, r)
    ]


def _fmt_element_group(part: Sequence[int], sep: str) -> str:
    return sep.join(str(i) for i in part)


@dataclass(frozen=True, order=True)
class CyclicPartition:
    """Cyclically ordered parts covering {0..n}, stored rotated so 0 is in the first part."""

    parts: tuple[tuple[int, ...], ...]
    n: int

    def __post_init__(self):
        parts = tuple(tuple(sorted(int(i) for i in p)) for p in self.parts)
        if not parts or any(not p for p in parts):
            raise ValueError("cyclic partition needs nonempty parts")
        flat = [i for p in parts for i in p]
        if sorted(flat) != list(range(self.n + 1)):
            raise ValueError(f"parts {parts} do not partition 0..{self.n}")
        r = next(s for s, p in enumerate(parts) if 0 in p)
        object.__setattr__(self, "parts", parts[r:] + parts[:r])

    # -- structure -----------------------------------------------------
    @property
    def k(self) -> int:
        return len(self.parts)

    def vertices(self) -> range:
        return range(self.k)

    @cached_property
    def part_of(self) -> tuple[int, ...]:
        owner = [0] * (self.n + 1)
        for s, p in enumerate(self.parts):
            for i in p:
                owner[i] = s
        return tuple(owner)

    @cached_property
    def part_masks(self) -> tuple[int, ...]:
        return tuple(to_mask(p) for p in self.parts)

    @property
    def is_maximal(self) -> bool:
        return self.k == self.n + 1

    def divides(self, J: Iterable[int]) -> bool:
        J = tuple(J)
        if not J:
            raise ValueError("divides() needs a nonempty index set")
        return len({self.part_of[j] for j in J}) >= 2

    # -- coarsening ----------------------------------------------------
    def coarsen_with_map(self, V: Iterable[int]) -> tuple["CyclicPartition", dict[int, int]]:
        """Keep only the vertices in V; returns the coarsening and old->new vertex map."""
        vs = sorted(set(V))
        if not vs:
            raise ValueError("coarsening needs a nonempty vertex subset")
        if vs[0] < 0 or vs[-1] >= self.k:
            raise ValueError(f"vertex subset {vs} invalid for {self.k} vertices")
        m = len(vs)
        merged = []
        for r, v in enumerate(vs):
            stop = vs[(r + 1) % m] if m > 1 else v
            span = (stop - v) % self.k or self.k
            merged.append(tuple(i for t in range(span) for i in self.parts[(v + t) % self.k]))
        r0 = next(r for r, p in enumerate(merged) if 0 in p)
        coarse = CyclicPartition(tuple(merged), self.n)
        return coarse, {v: (r - r0) % m for r, v in enumerate(vs)}

    def coarsen(self, V: Iterable[int]) -> "CyclicPartition":
        return self.coarsen_with_map(V)[0]

    def coarsenings(self) -> list["CyclicPartition"]:
        """All distinct coarsenings, deduplicated by canonical form."""
        seen = {self.coarsen(V) for V in nonempty_subsets(self.vertices())}
        return sorted(seen, key=lambda s: (s.k, s.parts))

    def is_coarsening_of(self, other: "CyclicPartition") -> bool:
        if self.n != other.n or self.k > other.k:
            return False
        # each part of self is a union of parts of other, and the cyclic order agrees
        owner = self.part_of
        seq = [owner[p[0]] for p in other.parts]
        for p in other.parts:
            if len({owner[i] for i in p}) != 1:
                return False
        runs = [s for s, _ in itertools.groupby(seq)]
        if len(runs) > 1 and runs[0] == runs[-1]:
            runs.pop()
        if len(runs) != self.k or len(set(runs)) != self.k:
            return False
        start = runs.index(0)
        return runs[start:] + runs[:start] == list(range(self.k))

    # -- text and JSON -------------------------------------------------
    def render(self, ascii: bool = False) -> str:
        wide = self.n >= 10
        if ascii:
            sep = "," if wide else ""
            return "<" + "|".join(_fmt_element_group(p, sep) for p in self.parts) + ">"
        sep = "," if wide else ""
        body = ",".join(
            str(p[0]) if len(p) == 1 else "{" + _fmt_element_group(p, sep) + "}" for p in self.parts
        )
        return "⟨" + body + "⟩"

    def __str__(self) -> str:
        return self.render()

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> "CyclicPartition":
        s = text.strip()
        ascii_form = s[:1] == "<" or "|" in s
        if s[:1] in "<⟨" and s[-1:] in ">⟩":
            s = s[1:-1]
        if ascii_form:
            parts = [_parse_group(g) for g in s.split("|")]
        else:
            parts, depth, token = [], 0, ""
            for ch in s + ",":
                if ch == "{":
                    depth += 1
                elif ch == "}":
                    depth -= 1
                if ch == "," and depth == 0:
                    token = token.strip()
                    if token.startswith("{"):
                        parts.append(_parse_group(token[1:-1]))
                    else:
                        parts.append((int(token),))
                    token = ""
                else:
                    token += ch
        if n is None:
            n = max(i for p in parts for i in p)
        return cls(tuple(parts), n)

    def to_json(self) -> dict:
        return {"parts": [list(p) for p in self.parts], "n": self.n}

    @classmethod
    def from_json(cls, data: dict | str) -> "CyclicPartition":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(tuple(tuple(p) for p in data["parts"]), int(data["n"]))


def _parse_group(group: str) -> tuple[int, ...]:
    group = group.strip()
    if "," in group:
        return tuple(int(t) for t in group.split(","))
    return tuple(int(ch) for ch in group)


def divides(sigma: CyclicPartition, J: Iterable[int]) -> bool:
    return sigma.divides(J)


def coarsen(sigma: CyclicPartition, V: Iterable[int]) -> CyclicPartition:
    return sigma.coarsen(V)


def is_coarsening(coarse: CyclicPartition, fine: CyclicPartition) -> bool:
    return coarse.is_coarsening_of(fine)


def _ordered_set_partitions(items: tuple[int, ...]):
    if not items:
        yield ()
        return
    for first in nonempty_subsets(items):
        rest = tuple(i for i in items if i not in first)
        for tail in _ordered_set_partitions(rest):
            yield (first,) + tail


def enumerate_cyclic_partitions(n: int, max_n: int = DEFAULT_MAX_N) -> list[CyclicPartition]:
    """All cyclic partitions of {0..n}, ordered by part count then lexicographically."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > max_n:
        raise ResourceLimitError(f"n={n} exceeds the cyclic-partition guard {max_n}")
    others = tuple(range(1, n + 1))
    out = []
    # fixing the part containing 0 in front picks the canonical rotation
    for companions in itertools.chain([()], nonempty_subsets(others)):
        first = (0,) + companions
        rest = tuple(i for i in others if i not in companions)
        for tail in _ordered_set_partitions(rest):
            out.append(CyclicPartition((first,) + tail, n))
    out.sort(key=lambda s: (s.k, s.parts))
    return out
