"""Nets of chords and the alcove decomposition of the torus.

Angles are exact rationals in units of pi, taken modulo 2.  A chord joins two
vertices (gaps) of a cyclic partition; a chord ``(a, a)`` is a tangent.  A
point of the torus determines its net by sweeping a diameter through a
half-turn: each open interval of directions contributes the chord joining the
two gaps that contain the diameter's endpoints.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

from .errors import InvariantViolation, ResourceLimitError
from .partitions import CyclicPartition, enumerate_cyclic_partitions, to_mask

DEFAULT_NET_MAX_N = 4

Chord = tuple  # (a, b) with a <= b; a == b is a tangent

# pair relation codes for i < j
EQUAL, ANTIPODAL, I_FIRST, J_FIRST = "E", "A", "L", "R"
_CLOSED = {EQUAL: {EQUAL}, ANTIPODAL: {ANTIPODAL}, I_FIRST: {EQUAL, ANTIPODAL, I_FIRST},
           J_FIRST: {EQUAL, ANTIPODAL, J_FIRST}}


def make_chord(a: int, b: int) -> Chord:
    return (a, b) if a <= b else (b, a)


def is_tangent(c: Chord) -> bool:
    return c[0] == c[1]


def chords_intersect(c1: Chord, c2: Chord, k: int | None = None) -> bool:
    """True iff the chords share a vertex or cross; tangents only meet chords at their vertex."""
    if k is not None and max(c1 + c2) >= k:
        raise ValueError(f"chord endpoints {c1}, {c2} invalid for {k} vertices")
    if set(c1) & set(c2):
        return True
    if is_tangent(c1) or is_tangent(c2):
        return False
    a, b = c1
    return (a < c2[0] < b) != (a < c2[1] < b)


def all_chords(k: int) -> list[Chord]:
    return [(a, b) for a in range(k) for b in range(a, k)]


@lru_cache(maxsize=None)
def local_alcove_faces(k: int) -> tuple[tuple[Chord, ...], ...]:
    """Every nonempty pairwise-intersecting chord family on k labelled vertices.

    These are the faces of the alcove decomposition of the simplex over a
    partition with k parts; the vertex support of a family is its face of the
    simplex.
    """
    chords = all_chords(k)
    meets = [[chords_intersect(c, d) for d in chords] for c in chords]
    out = []

    def grow(current, start):
        for idx in range(start, len(chords)):
            if all(meets[idx][j] for j in current):
                nxt = current + [idx]
                out.append(tuple(chords[j] for j in nxt))
                grow(nxt, idx + 1)

    grow([], 0)
    out.sort(key=lambda fam: (len(fam), fam))
    return tuple(out)


def support(chords: Iterable[Chord]) -> tuple[int, ...]:
    return tuple(sorted({v for c in chords for v in c}))


@dataclass(frozen=True, order=True)
class Net:
    """A chord family over a cyclic partition, labelling an alcove."""

    partition: CyclicPartition
    chords: tuple[Chord, ...]

    def __post_init__(self):
        chords = tuple(sorted({make_chord(*c) for c in self.chords}))
        k = self.partition.k
        for c in chords:
            if c[0] < 0 or c[1] >= k:
                raise ValueError(f"chord {c} invalid for {k} vertices")
        object.__setattr__(self, "chords", chords)

    @property
    def n(self) -> int:
        return self.partition.n

    @property
    def has_tangent(self) -> bool:
        return any(is_tangent(c) for c in self.chords)

    @cached_property
    def side_masks(self) -> dict[Chord, int]:
        """Element mask on the counter-clockwise side of each non-tangent chord."""
        masks = self.partition.part_masks
        out = {}
        for a, b in self.chords:
            if a != b:
                m = 0
                for s in range(a, b):
                    m |= masks[s]
                out[(a, b)] = m
        return out

    def divides(self, c: Chord, I: Iterable[int]) -> bool:
        return chord_divides(c, I, self.partition)

    @cached_property
    def dividing_test(self):
        """Return a predicate on element masks: every chord divides the set."""
        if self.has_tangent:
            return lambda mask: False
        full = (1 << (self.n + 1)) - 1
        sides = [(m, full & ~m) for m in self.side_masks.values()]
        return lambda mask: all(mask & p and mask & q for p, q in sides)

    @cached_property
    def faces(self) -> frozenset["Net"]:
        """Closed-alcove faces: every nonempty sub-family, relabelled onto its support."""
        out = set()
        for r in range(1, len(self.chords) + 1):
            for sub in itertools.combinations(self.chords, r):
                out.add(relabel(self.partition, sub))
        return frozenset(out)

    def render(self, ascii: bool = False) -> str:
        body = ", ".join(f"{a}~" if a == b else f"{a}-{b}" for a, b in self.chords)
        return f"{self.partition.render(ascii)} {{{body}}}"

    def __str__(self) -> str:
        return self.render()

    def to_json(self) -> dict:
        return {"partition": self.partition.to_json(), "chords": [list(c) for c in self.chords]}

    @classmethod
    def from_json(cls, data: dict | str) -> "Net":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(CyclicPartition.from_json(data["partition"]), tuple(tuple(c) for c in data["chords"]))


def relabel(sigma: CyclicPartition, chords: Sequence[Chord]) -> Net:
    """Canonical net of a chord family given in sigma's vertex labels."""
    coarse, vmap = sigma.coarsen_with_map(support(chords))
    return Net(coarse, tuple(make_chord(vmap[a], vmap[b]) for a, b in chords))


def chord_divides(c: Chord, I: Iterable[int], base: CyclicPartition) -> bool:
    """True iff I meets both sides of the chord; a tangent divides nothing."""
    I = tuple(I)
    if not I:
        raise ValueError("chord_divides() needs a nonempty index set")
    a, b = make_chord(*c)
    if a == b:
        return False
    sides = {a <= base.part_of[i] < b for i in I}
    return len(sides) == 2


def is_net(nu: Net) -> bool:
    k = nu.partition.k
    if not nu.chords or k > nu.n + 1:
        return False
    if any(not chords_intersect(c, d) for c, d in itertools.combinations(nu.chords, 2)):
        return False
    return support(nu.chords) == tuple(range(k))


def alcove_dim(nu: Net) -> int:
    return len(nu.chords) - 1


class PairRelationTable(dict):
    """Relation per unordered pair (i, j), i < j: equal, antipodal, or an interval with an order."""

    def codes(self) -> tuple[str, ...]:
        return tuple(self[p] for p in sorted(self))

    def describe(self) -> dict[str, str]:
        names = {EQUAL: "equal", ANTIPODAL: "antipodal", I_FIRST: "interval:first", J_FIRST: "interval:second"}
        out = {}
        for (i, j), code in sorted(self.items()):
            label = names[code]
            if code == I_FIRST:
                label = f"interval:{i} first"
            elif code == J_FIRST:
                label = f"interval:{j} first"
            out[f"{i},{j}"] = label
        return out


def _first(c: Chord, s: int, t: int, k: int) -> int:
    a, b = c
    start = a if (a == b or a <= s < b) else b
    return s if (s - start) % k < (t - start) % k else t


def alcove_relations(nu: Net) -> PairRelationTable:
    """Relations among angles forced on the alcove of nu, read off separating chords."""
    return PairRelationTable(_relations(nu))


@lru_cache(maxsize=65536)
def _relations(nu: Net) -> PairRelationTable:
    part_of = nu.partition.part_of
    k = nu.partition.k
    table = PairRelationTable()
    for i, j in itertools.combinations(range(nu.n + 1), 2):
        s, t = part_of[i], part_of[j]
        if s == t:
            table[(i, j)] = EQUAL
            continue
        separating = [c for c in nu.chords if c[0] != c[1] and (c[0] <= s < c[1]) != (c[0] <= t < c[1])]
        if not separating:
            raise InvariantViolation(f"{i},{j} lie in different parts but no chord separates them", nu.to_json())
        if len(separating) == len(nu.chords):
            table[(i, j)] = ANTIPODAL
            continue
        firsts = {_first(c, s, t, k) for c in nu.chords if c not in separating}
        if len(firsts) != 1:
            raise InvariantViolation(f"non-separating chords disagree on the order of {i},{j}", nu.to_json())
        table[(i, j)] = I_FIRST if firsts.pop() == s else J_FIRST
    return table


# ---------------------------------------------------------------------------
# angle points


@dataclass(frozen=True)
class AnglePoint:
    """Homogeneous torus coordinates in units of pi, normalized so theta_0 = 0."""

    thetas: tuple[Fraction, ...]

    def __post_init__(self):
        vals = [Fraction(v) for v in self.thetas]
        if not vals:
            raise ValueError("angle point needs at least one coordinate")
        base = vals[0]
        object.__setattr__(self, "thetas", tuple((v - base) % 2 for v in vals))

    @classmethod
    def of(cls, values: Iterable) -> "AnglePoint":
        return cls(tuple(Fraction(str(v).strip()) if isinstance(v, str) else Fraction(v) for v in values))

    @classmethod
    def parse(cls, text: str) -> "AnglePoint":
        return cls.of(t for t in text.split(",") if t.strip())

    @property
    def n(self) -> int:
        return len(self.thetas) - 1

    def codes(self) -> tuple[str, ...]:
        return self._codes

    @cached_property
    def _codes(self) -> tuple[str, ...]:
        th = self.thetas
        out = []
        for i, j in itertools.combinations(range(len(th)), 2):
            d = (th[j] - th[i]) % 2
            out.append(EQUAL if d == 0 else ANTIPODAL if d == 1 else I_FIRST if d < 1 else J_FIRST)
        return tuple(out)

    def render(self) -> str:
        return ",".join(str(t) for t in self.thetas)


def alcove_contains(theta: AnglePoint, nu: Net, interior: bool = False) -> bool:
    """Closed-alcove membership (relative interior when interior=True).

    Pairwise closure of the relation codes is necessary but not sufficient
    (all angles equal passes it for the central triangle), so the closed test
    looks for a lift to [0, 2] with the parts in order that satisfies the
    non-strict interval for every pair.
    """
    if theta.n != nu.n:
        raise ValueError("dimension mismatch between point and net")
    codes = theta.codes()
    table = _relations(nu)
    wanted = table.codes()
    if interior:
        return codes == wanted
    if not all(c in _CLOSED[w] for c, w in zip(codes, wanted)):
        return False
    return _closed_lift_exists(theta, nu, table)


def _closed_lift_exists(theta: AnglePoint, nu: Net, table: PairRelationTable) -> bool:
    sigma = nu.partition
    th = theta.thetas
    vals = []
    for part in sigma.parts:
        v = {th[i] for i in part}
        if len(v) != 1:
            return False
        vals.append(v.pop())
    choices = [(v,) if v else (Fraction(0), Fraction(2)) for v in vals[1:]]
    owner = sigma.part_of
    for rest in itertools.product(*choices):
        lift = (vals[0],) + rest
        if any(a > b for a, b in zip(lift, lift[1:])):
            continue
        ok = True
        for (i, j), code in table.items():
            s, t = owner[i], owner[j]
            if s == t:
                continue
            # lifted theta_j - theta_i; the open alcove puts it in (0,2) or (-2,0)
            e = lift[t] - lift[s]
            lo = 0 if s < t else -2
            if code == ANTIPODAL:
                ok = e == lo + 1
            elif code == I_FIRST:
                ok = lo <= e <= lo + 1
            else:
                ok = lo + 1 <= e <= lo + 2
            if not ok:
                break
        if ok:
            return True
    return False


def classify_point(theta: AnglePoint) -> Net:
    """The net whose open alcove contains theta."""
    th = theta.thetas
    values = sorted(set(th))
    parts = tuple(tuple(i for i, v in enumerate(th) if v == w) for w in values)
    sigma = CyclicPartition(parts, theta.n)
    k = len(values)

    def gap(p: Fraction) -> int:
        p %= 2
        for v, w in enumerate(values):
            if p < w:
                return v
        return 0

    events = sorted({v % 1 for v in values})
    chords = set()
    for e, nxt in zip(events, events[1:] + [events[0] + 1]):
        p = (e + nxt) / 2
        chords.add(make_chord(gap(p), gap(p + 1)))
    net = Net(sigma, tuple(chords))
    assert k == sigma.k
    return net


def enumerate_nets(n: int, max_n: int = DEFAULT_NET_MAX_N) -> list[Net]:
    """Every canonical net over every cyclic partition of {0..n}."""
    if n > max_n:
        raise ResourceLimitError(f"n={n} exceeds the net enumeration guard {max_n}")
    out = []
    for sigma in enumerate_cyclic_partitions(n, max_n=max(max_n, n)):
        full = tuple(range(sigma.k))
        for fam in local_alcove_faces(sigma.k):
            if support(fam) == full:
                out.append(Net(sigma, fam))
    return out


def net_face(nu_a: Net, nu_b: Net) -> bool:
    """True iff the closed alcove of nu_b contains the alcove of nu_a."""
    if nu_a.n != nu_b.n or not nu_a.partition.is_coarsening_of(nu_b.partition):
        return False
    return nu_a in nu_b.faces


def nets_by_partition(nets: Iterable[Net]) -> dict[CyclicPartition, list[Net]]:
    out: dict[CyclicPartition, list[Net]] = {}
    for nu in nets:
        out.setdefault(nu.partition, []).append(nu)
    return out


def relation_rank_dimension(nu: Net) -> int:
    """n minus the exact rank of the equality constraints (equal or antipodal pairs)."""
    from .linalg import rational_rank

    rows = []
    for (i, j), code in alcove_relations(nu).items():
        if code in (EQUAL, ANTIPODAL):
            row = [0] * (nu.n + 1)
            row[i], row[j] = 1, -1
            rows.append(row)
    # homogeneous coordinates: quotient by the diagonal
    return nu.n - rational_rank(rows)


def element_mask(I: Iterable[int]) -> int:
    return to_mask(I)
