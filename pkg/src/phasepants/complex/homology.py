"""Order complexes and simplicial homology over Z and Z/2."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from ..errors import ResourceLimitError
from .poset import FacePoset

DEFAULT_NONZERO_GUARD = 200_000

Z2 = "z2"
INTEGERS = "z"


class SimplicialComplex:
    """Vertex labels plus an antichain of facets; faces are implicit."""

    def __init__(self, vertices: Sequence, facets: Iterable[Iterable[int]], faces=None):
        self.vertices = list(vertices)
        self.facets = sorted({tuple(sorted(f)) for f in facets}, key=lambda f: (len(f), f))
        self._faces = faces

    @property
    def dim(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    def faces_by_dim(self) -> list[list[tuple[int, ...]]]:
        if self._faces is None:
            seen: list[set] = [set() for _ in range(self.dim + 1)]
            for f in self.facets:
                for r in range(1, len(f) + 1):
                    seen[r - 1].update(_combinations(f, r))
            self._faces = [sorted(s) for s in seen]
        return self._faces

    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(x) for x in self.faces_by_dim())

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * c for d, c in enumerate(self.f_vector()))


def _combinations(f, r):
    import itertools

    return itertools.combinations(f, r)


def order_complex(p: FacePoset) -> SimplicialComplex:
    """Chains of the poset; vertices are poset elements in the poset's fixed order."""
    m = len(p)
    above = [0] * m
    for i in sorted(range(m), key=lambda i: -p.dim_at(i)):
        acc = 0
        for j in p.up_indices(i):
            acc |= (1 << j) | above[j]
        above[i] = acc
    faces: list[list[tuple[int, ...]]] = []
    facets = []

    def bits(x):
        while x:
            low = x & -x
            yield low.bit_length() - 1
            x ^= low

    def extend(chain, last):
        d = len(chain) - 1
        while len(faces) <= d:
            faces.append([])
        faces[d].append(chain)
        nxt = above[last]
        if not nxt:
            facets.append(chain)
            return
        for j in bits(nxt):
            extend(chain + (j,), j)

    for i in range(m):
        extend((i,), i)
    for level in faces:
        level.sort()
    return SimplicialComplex(p.labels, facets, faces=faces)


@dataclass
class BettiVector:
    ranks: list[int]
    torsion: list[list[int]] = field(default_factory=list)
    coefficients: str = INTEGERS

    @property
    def euler_characteristic(self) -> int:
        return sum((-1) ** d * r for d, r in enumerate(self.ranks))

    @property
    def torsion_free(self) -> bool:
        return all(not t for t in self.torsion)

    def to_json(self) -> dict:
        return {"ranks": self.ranks, "torsion": self.torsion, "coefficients": self.coefficients}


def is_sphere_homology(betti: BettiVector, d: int) -> bool:
    """Homology of S^d; S^-1 is the empty complex."""
    if not betti.torsion_free:
        return False
    if d < 0:
        return betti.ranks == []
    if d == 0:
        return betti.ranks == [2]
    return betti.ranks == [1] + [0] * (d - 1) + [1]


def _boundary_entries(faces_k, faces_km1):
    """Sparse columns of the boundary map from k-simplices to (k-1)-simplices."""
    index = {f: i for i, f in enumerate(faces_km1)}
    cols = []
    for f in faces_k:
        col = {}
        for t in range(len(f)):
            col[index[f[:t] + f[t + 1:]]] = -1 if t % 2 else 1
        cols.append(col)
    return cols


def _rank_z2(cols) -> int:
    pivots: dict[int, int] = {}
    rank = 0
    for col in cols:
        v = 0
        for r in col:
            v ^= 1 << r
        while v:
            top = v.bit_length() - 1
            if top in pivots:
                v ^= pivots[top]
            else:
                pivots[top] = v
                rank += 1
                break
    return rank


def _snf_diagonal(cols, nrows) -> list[int]:
    """Nonzero invariant entries of an integer matrix given as sparse columns."""
    rows: dict[int, dict[int, int]] = {}
    for c, col in enumerate(cols):
        for r, v in col.items():
            if v:
                rows.setdefault(r, {})[c] = v
    col_rows: dict[int, set[int]] = {}
    for r, row in rows.items():
        for c in row:
            col_rows.setdefault(c, set()).add(r)
    diag = []
    # unit pivots: eliminate the pivot column from other rows, then drop row and column
    progress = True
    while progress and rows:
        progress = False
        for r in sorted(rows, key=lambda r: len(rows[r])):
            row = rows.get(r)
            if row is None:
                continue
            best = None
            for c, v in row.items():
                if v in (1, -1) and (best is None or len(col_rows[c]) < len(col_rows[best])):
                    best = c
            if best is None:
                continue
            _eliminate(rows, col_rows, r, best)
            diag.append(1)
            progress = True
    if rows:
        diag.extend(_dense_snf(rows))
    return diag


def _eliminate(rows, col_rows, r, c):
    prow = rows.pop(r)
    pv = prow[c]
    for c2 in prow:
        col_rows[c2].discard(r)
    for r2 in list(col_rows[c]):
        row2 = rows[r2]
        f = row2[c] * pv  # pv is a unit, so pv == 1/pv
        for c2, v in prow.items():
            nv = row2.get(c2, 0) - f * v
            if nv:
                if c2 not in row2:
                    col_rows[c2].add(r2)
                row2[c2] = nv
            elif c2 in row2:
                del row2[c2]
                col_rows[c2].discard(r2)
        if not row2:
            del rows[r2]
    del col_rows[c]


def _dense_snf(rows: dict[int, dict[int, int]]) -> list[int]:
    rkeys = sorted(rows)
    ckeys = sorted({c for row in rows.values() for c in row})
    a = [[rows[r].get(c, 0) for c in ckeys] for r in rkeys]
    m, n = len(a), len(ckeys)
    diag = []
    t = 0
    while t < min(m, n):
        nz = [(abs(a[i][j]), i, j) for i in range(t, m) for j in range(t, n) if a[i][j]]
        if not nz:
            break
        _, i, j = min(nz)
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        while True:
            done = True
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                    if a[i][t]:
                        done = False
                        if abs(a[i][t]) < abs(a[t][t]):
                            a[t], a[i] = a[i], a[t]
            for j in range(t + 1, n):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    for row in a:
                        row[j] -= q * row[t]
                    if a[t][j]:
                        done = False
                        if abs(a[t][j]) < abs(a[t][t]):
                            for row in a:
                                row[t], row[j] = row[j], row[t]
            if done:
                bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                            if a[i][j] % a[t][t]), None)
                if bad is None:
                    break
                a[t] = [x + y for x, y in zip(a[t], a[bad[0]])]
        diag.append(abs(a[t][t]))
        t += 1
    return diag


def _invariant_factors(diag: list[int]) -> list[int]:
    """Normalize a diagonal into a divisibility chain, dropping units."""
    primes: dict[int, list[int]] = {}
    for d in diag:
        x, p = d, 2
        while x > 1 and p * p <= x:
            e = 0
            while x % p == 0:
                x //= p
                e += 1
            if e:
                primes.setdefault(p, []).append(p ** e)
            p += 1
        if x > 1:
            primes.setdefault(x, []).append(x)
    length = max((len(v) for v in primes.values()), default=0)
    out = [1] * length
    for p, powers in primes.items():
        powers.sort(reverse=True)
        for i, q in enumerate(powers):
            out[length - 1 - i] *= q
    return [d for d in out if d > 1]


def homology(c: SimplicialComplex, coefficients: str = INTEGERS,
             nonzero_guard: int = DEFAULT_NONZERO_GUARD) -> BettiVector:
    """Simplicial homology; torsion reported per degree for integer coefficients."""
    faces = c.faces_by_dim()
    if not faces or not faces[0]:
        return BettiVector([], [], coefficients)
    nnz = sum(len(level) * (d + 1) for d, level in enumerate(faces))
    if nnz > nonzero_guard:
        raise ResourceLimitError(f"boundary matrices have {nnz} nonzeros, guard is {nonzero_guard}")
    top = len(faces) - 1
    ranks = [0] * (top + 2)
    torsions: list[list[int]] = [[] for _ in range(top + 1)]
    for k in range(1, top + 1):
        cols = _boundary_entries(faces[k], faces[k - 1])
        if coefficients == Z2:
            ranks[k] = _rank_z2(cols)
        else:
            diag = _snf_diagonal(cols, len(faces[k - 1]))
            ranks[k] = len(diag)
            torsions[k - 1] = _invariant_factors(diag)
    betti = [len(faces[k]) - ranks[k] - ranks[k + 1] for k in range(top + 1)]
    return BettiVector(betti, torsions, coefficients)


def poset_homology(p: FacePoset, coefficients: str = INTEGERS,
                   nonzero_guard: int = DEFAULT_NONZERO_GUARD) -> BettiVector:
    return homology(order_complex(p), coefficients, nonzero_guard)


def binomial_ranks(n: int) -> list[int]:
    return [math.comb(n, k) for k in range(n)]
