"""Elementary collapses of regular CW complexes given as face posets."""
from __future__ import annotations

import heapq
import random
from typing import Callable

from .poset import FacePoset

DEFAULT_RETRIES = 32


def collapse(p: FacePoset, rng: random.Random | None = None) -> FacePoset:
    """Remove free pairs until none remain.

    A face is free when it has exactly one cover and that cover is maximal.
    Without ``rng`` the highest-dimensional free face goes first, ties broken
    by the poset's label order; with ``rng`` the priorities are shuffled.
    """
    m = len(p)
    alive = [True] * m
    n_up = [len(p.up_indices(i)) for i in range(m)]
    keys = list(range(m))
    if rng is not None:
        rng.shuffle(keys)

    def priority(i):
        return (keys[i],) if rng is not None else (-p.dim_at(i), i)

    def free_cover(i):
        if not alive[i] or n_up[i] != 1:
            return None
        cover = next(j for j in p.up_indices(i) if alive[j])
        return cover if n_up[cover] == 0 else None

    heap = [priority(i) + (i,) for i in range(m) if free_cover(i) is not None]
    heapq.heapify(heap)
    while heap:
        i = heapq.heappop(heap)[-1]
        cover = free_cover(i)
        if cover is None:
            continue
        alive[i] = alive[cover] = False
        touched = set()
        for face in p.down_indices(cover):
            if alive[face]:
                n_up[face] -= 1
                touched.add(face)
        for face in p.down_indices(i):
            if alive[face]:
                n_up[face] -= 1
                touched.add(face)
                if n_up[face] == 0:
                    # face became maximal: its own faces may now be free
                    touched.update(g for g in p.down_indices(face) if alive[g])
        for face in touched:
            if n_up[face] == 0:
                touched_faces = [g for g in p.down_indices(face) if alive[g]]
            else:
                touched_faces = []
            for g in [face] + touched_faces:
                if free_cover(g) is not None:
                    heapq.heappush(heap, priority(g) + (g,))
    return p.subposet(p.label(i) for i in range(m) if alive[i])


def collapses_to(p: FacePoset, goal: Callable[[FacePoset], bool], retries: int = DEFAULT_RETRIES,
                 seed: int = 0) -> tuple[bool, FacePoset]:
    """Greedy collapse, then seeded random-order retries until goal(core) holds."""
    core = collapse(p)
    if goal(core):
        return True, core
    rng = random.Random(seed)
    for _ in range(retries):
        attempt = collapse(p, rng=random.Random(rng.random()))
        if goal(attempt):
            return True, attempt
    return False, core


def is_point(p: FacePoset) -> bool:
    return len(p) == 1 and p.max_dim == 0


def is_circle(p: FacePoset) -> bool:
    """Pure 1-dimensional, connected, each vertex in exactly two edges."""
    if not len(p) or p.max_dim != 1:
        return False
    verts = [x for x in p if p.dim(x) == 0]
    edges = [x for x in p if p.dim(x) == 1]
    if any(len(p.facets_of(e)) != 2 for e in edges):
        return False
    if any(len(p.cofacets_of(v)) != 2 for v in verts):
        return False
    seen, stack = {verts[0]}, [verts[0]]
    while stack:
        v = stack.pop()
        for e in p.cofacets_of(v):
            for w in p.facets_of(e):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
    return len(seen) == len(verts)
