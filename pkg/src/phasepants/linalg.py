"""Exact rank over the rationals for small constraint systems."""
from fractions import Fraction


def rational_rank(rows) -> int:
    mat = [[Fraction(x) for x in row] for row in rows]
    if not mat:
        return 0
    rank, ncols = 0, len(mat[0])
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(mat)) if mat[r][col] != 0), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        pv = mat[rank][col]
        for r in range(len(mat)):
            if r != rank and mat[r][col] != 0:
                f = mat[r][col] / pv
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[rank])]
        rank += 1
    return rank
