"""Point membership in the phase-tropical pants, two ways.

``membership`` uses the spine cubes and partial coamoebas directly;
``piece_membership`` searches the enumerated pieces.  They must agree.
"""
from __future__ import annotations

import random
from fractions import Fraction

import numpy as np

from ..chords import ANTIPODAL, EQUAL, I_FIRST, J_FIRST, AnglePoint, alcove_contains, alcove_relations
from ..partitions import nonempty_subsets
from ..simplex import DsdCell, RationalPoint, coamoeba_contains, in_dsd_cell
from .pieces import PhaseTropical

_CODE = {EQUAL: 0, ANTIPODAL: 1, I_FIRST: 2, J_FIRST: 3}
# _ALLOWED[wanted, seen]: pairwise closure, a necessary condition only
_ALLOWED = np.array([
    [1, 0, 0, 0],
    [0, 1, 0, 0],
    [1, 1, 1, 0],
    [1, 1, 0, 1],
], dtype=bool)


def membership(x: RationalPoint, theta: AnglePoint) -> bool:
    """Is (x, theta) in some H_IJ x C^I?"""
    if x.n != theta.n:
        raise ValueError("point and angles live over different n")
    top = x.argmax()
    supp = set(x.support())
    for I in nonempty_subsets(top, 2):
        J = tuple(sorted(supp | set(I)))
        if in_dsd_cell(x, DsdCell(I, J)) and coamoeba_contains(theta, I):
            return True
    return False


class PieceIndex:
    """Closed-alcove lookup over the nets that carry pieces, vectorized over nets."""

    def __init__(self, pt: PhaseTropical):
        self.pt = pt
        self.pieces = set(pt.poset)
        nets = sorted({p.nu for p in pt.poset})
        self.nets = nets
        self.wanted = np.array([[_CODE[c] for c in alcove_relations(nu).codes()] for nu in nets], dtype=np.int8)

    def closed_alcoves(self, theta: AnglePoint) -> list:
        seen = np.array([_CODE[c] for c in theta.codes()], dtype=np.int8)
        if not len(seen):
            return list(self.nets)
        ok = _ALLOWED[self.wanted, seen[None, :]].all(axis=1)
        return [self.nets[i] for i in np.flatnonzero(ok) if alcove_contains(theta, self.nets[i])]

    def witness(self, x: RationalPoint, theta: AnglePoint):
        """A piece whose closed cell contains (x, theta), or None."""
        top = x.argmax()
        supp = set(x.support())
        nets = self.closed_alcoves(theta)
        for I in nonempty_subsets(top, 2):
            K = tuple(sorted(supp | set(I)))
            for nu in nets:
                piece = _lookup(self.pieces, I, K, nu)
                if piece is not None:
                    return piece
        return None


def _lookup(pieces, I, K, nu):
    from .pieces import Piece

    try:
        p = Piece(I, K, nu)
    except ValueError:
        return None
    return p if p in pieces else None


def piece_membership(x: RationalPoint, theta: AnglePoint, index: PieceIndex) -> bool:
    return index.witness(x, theta) is not None


def sample_pair(n: int, rng: random.Random) -> tuple[RationalPoint, AnglePoint]:
    """A random rational (x, theta) biased toward ties, zeros and antipodes."""
    weights = [rng.choice((0, 1, 1, 2, 2, 3, 5)) for _ in range(n + 1)]
    if rng.random() < 0.5:
        # force a tie at the top
        m = max(weights) or 1
        for i in rng.sample(range(n + 1), rng.randint(2, n + 1)):
            weights[i] = m
    if not any(weights):
        weights[rng.randrange(n + 1)] = 1
    total = sum(weights)
    x = RationalPoint(tuple(Fraction(w, total) for w in weights))
    den = rng.choice((1, 2, 3, 4, 6, 12))
    theta = AnglePoint(tuple(Fraction(rng.randrange(2 * den), den) for _ in range(n + 1)))
    return x, theta
