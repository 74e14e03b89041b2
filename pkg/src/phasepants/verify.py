"""Named verification checks with JSON / junit reports.

Each check takes a context (n, seed, config) and returns a status plus a
witness.  Failures and guard violations never abort the batch.
"""
from __future__ import annotations

import itertools
import json
import math
import random
import time
import xml.etree.ElementTree as ET
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

import numpy as np

from .chords import (
    AnglePoint,
    alcove_contains,
    alcove_dim,
    alcove_relations,
    classify_point,
    enumerate_nets,
    net_face,
    relation_rank_dimension,
)
from .complex import collapse, homology, is_sphere_homology, order_complex, poset_homology
from .complex.collapse import collapses_to, is_circle
from .complex.poset import euler_characteristic, labeled_isomorphic
from .config import Config
from .errors import ResourceLimitError
from .pants import (
    L_complex,
    PieceIndex,
    assemble_phase_tropical,
    check_complement,
    classify_codim1_pieces,
    compare_ober_phase,
    enumerate_pants_cells,
    max_piece_dims,
    membership,
    piece_membership,
    sample_pair,
)
from .partitions import enumerate_cyclic_partitions

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"
ORACLE_MAX_N = 3


@dataclass
class CheckReport:
    name: str
    params: dict
    status: str
    witness: object = None
    elapsed: float = 0.0

    def to_json(self, timing: bool = False) -> dict:
        out = {"check": self.name, "params": self.params, "status": self.status, "witness": self.witness}
        if timing:
            out["elapsed"] = round(self.elapsed, 3)
        return out


@dataclass
class Context:
    n: int
    seed: int = 0
    config: Config = field(default_factory=Config)

    def pieces(self):
        return assemble_phase_tropical(self.n, max_n=self.config.max_n)


def _result(ok: bool, params: dict, witness=None) -> tuple[str, dict, object]:
    return (PASS if ok else FAIL), params, (witness if not ok else None)


# ---------------------------------------------------------------------------
# oracles


def cyclic_partition_oracle(n: int) -> set:
    """Distinct cyclic arrangements of set blocks, built from permutations and cuts."""
    seen = set()
    items = range(n + 1)
    for perm in itertools.permutations(items):
        for cuts in itertools.product((0, 1), repeat=n):
            blocks, cur = [], [perm[0]]
            for x, cut in zip(perm[1:], cuts):
                if cut:
                    blocks.append(frozenset(cur))
                    cur = []
                cur.append(x)
            blocks.append(frozenset(cur))
            r = next(i for i, b in enumerate(blocks) if 0 in b)
            seen.add(tuple(blocks[r:] + blocks[:r]))
    return seen


def sign_vector_oracle(n: int, max_n: int = ORACLE_MAX_N) -> list[tuple[str, ...]]:
    """Relation tables realized on the grid of angles with denominator 4*(n+1)!.

    Every returned table is realized by the exact grid point that produced
    it; the grid is fine enough to meet every alcove.
    """
    if n > max_n:
        raise ResourceLimitError(f"sign-vector oracle is limited to n <= {max_n}")
    D = 4 * math.factorial(n + 1)
    pairs = list(itertools.combinations(range(n + 1), 2))
    found: set[int] = set()
    rest = [np.arange(2 * D)] * max(n - 1, 0)
    for first in range(2 * D if n else 1):
        grids = np.meshgrid(*rest, indexing="ij") if rest else []
        cols = [np.zeros(grids[0].size if grids else 1, dtype=np.int64)]
        if n:
            cols.append(np.full_like(cols[0], first))
        cols += [g.ravel() for g in grids]
        th = np.stack(cols, axis=1)
        key = np.zeros(len(th), dtype=np.int64)
        for p, (i, j) in enumerate(pairs):
            d = (th[:, j] - th[:, i]) % (2 * D)
            code = np.where(d == 0, 0, np.where(d == D, 1, np.where(d < D, 2, 3)))
            key += code * 4 ** p
        found.update(np.unique(key).tolist())
    letters = "EALR"
    return sorted(tuple(letters[(k >> 2 * p) & 3] for p in range(len(pairs))) for k in found)


# ---------------------------------------------------------------------------
# checks


def check_partition_census(ctx: Context):
    if ctx.n > 5:
        raise ResourceLimitError("permutation oracle is limited to n <= 5")
    ours = enumerate_cyclic_partitions(ctx.n)
    canon = {tuple(frozenset(p) for p in s.parts) for s in ours}
    oracle = cyclic_partition_oracle(ctx.n)
    ok = canon == oracle and len(canon) == len(ours)
    return _result(ok, {"n": ctx.n, "count": len(ours), "oracle": len(oracle)},
                   {"missing": len(oracle - canon), "extra": len(canon - oracle)})


def check_net_census(ctx: Context):
    nets = enumerate_nets(ctx.n)
    tables = [alcove_relations(nu).codes() for nu in nets]
    oracle = sign_vector_oracle(ctx.n)
    ok = len(set(tables)) == len(tables) and set(tables) == set(oracle)
    witness = {
        "duplicates": len(tables) - len(set(tables)),
        "missing": ["".join(t) for t in sorted(set(oracle) - set(tables))][:5],
        "extra": ["".join(t) for t in sorted(set(tables) - set(oracle))][:5],
    }
    return _result(ok, {"n": ctx.n, "nets": len(nets), "oracle": len(oracle)}, witness)


def random_angles(n: int, rng: random.Random) -> AnglePoint:
    den = rng.choice((1, 2, 3, 4, 6, 8, 12))
    return AnglePoint(tuple(Fraction(rng.randrange(2 * den), den) for _ in range(n + 1)))


def check_alcove_sampling(ctx: Context):
    """Each sample lies in exactly one open alcove, and its closed alcoves are the star of that one."""
    nets = enumerate_nets(ctx.n)
    rng = random.Random(ctx.seed)
    samples = ctx.config.samples
    problems = []
    for nu in nets:
        if relation_rank_dimension(nu) != alcove_dim(nu):
            problems.append({"net": nu.render(ascii=True), "issue": "dimension"})
    for _ in range(samples):
        theta = random_angles(ctx.n, rng)
        net = classify_point(theta)
        open_hits = [nu for nu in nets if alcove_contains(theta, nu, interior=True)]
        if open_hits != [net]:
            problems.append({"theta": theta.render(), "open": [nu.render(ascii=True) for nu in open_hits]})
            continue
        for nu in nets:
            if alcove_contains(theta, nu) != net_face(net, nu):
                problems.append({"theta": theta.render(), "closed": nu.render(ascii=True)})
                break
    return _result(not problems, {"n": ctx.n, "samples": samples, "seed": ctx.seed, "nets": len(nets)},
                   problems[:5])


def check_dimension_formula(ctx: Context):
    dims = max_piece_dims(ctx.n, max_n=ctx.config.max_n)
    bad = [(c.render(ascii=True), d, c.dim) for c, d in dims.items() if d != c.dim]
    return _result(not bad, {"n": ctx.n, "cells": len(dims)}, {"exceptions": bad[:5], "count": len(bad)})


def check_lattice_isomorphism(ctx: Context):
    strata = ctx.pieces().stratum_poset()
    lattice = enumerate_pants_cells(ctx.n)
    try:
        ok = labeled_isomorphic(strata, lattice, lambda x: x)
    except ValueError:
        ok = False
    params = {"n": ctx.n, "f_vector": list(lattice.f_vector()), "strata": len(strata)}
    witness = {
        "only_strata": [c.render(ascii=True) for c in set(strata) - set(lattice)][:5],
        "only_lattice": [c.render(ascii=True) for c in set(lattice) - set(strata)][:5],
        "strata_f_vector": list(strata.f_vector()),
    }
    return _result(ok, params, witness)


def check_boundary_sphere(ctx: Context):
    pt = ctx.pieces()
    bad = []
    cells = enumerate_pants_cells(ctx.n)
    for c in cells:
        b = pt.boundary(c.sigma, c.J)
        h = homology(order_complex(b), nonzero_guard=ctx.config.snf_nonzero_guard)
        if not is_sphere_homology(h, c.dim - 1) or h.euler_characteristic != euler_characteristic(b):
            bad.append({"cell": c.render(ascii=True), "betti": h.ranks, "torsion": h.torsion})
    return _result(not bad, {"n": ctx.n, "cells": len(cells)}, bad[:5])


def check_L_circle(ctx: Context):
    bad = []
    cells = enumerate_pants_cells(ctx.n, max_n=ctx.config.max_n)
    for c in cells:
        L = L_complex(c.sigma, c.J)
        ok, core = collapses_to(L, is_circle, retries=ctx.config.collapse_retries, seed=ctx.seed)
        h = poset_homology(L, nonzero_guard=ctx.config.snf_nonzero_guard)
        if not ok or h.ranks[:2] != [1, 1] or any(h.ranks[2:]) or not h.torsion_free:
            bad.append({"cell": c.render(ascii=True), "betti": h.ranks, "core": list(core.f_vector())})
    return _result(not bad, {"n": ctx.n, "cells": len(cells)}, bad[:5])


def check_star_complement(ctx: Context):
    bad = []
    cache: dict = {}
    cells = enumerate_pants_cells(ctx.n, max_n=ctx.config.max_n)
    for c in cells:
        rep = check_complement(c.sigma, c.J, cache, retries=ctx.config.collapse_retries, seed=ctx.seed)
        if not rep.ok:
            bad.append(rep.witness())
    return _result(not bad, {"n": ctx.n, "cells": len(cells), "m_faces": len(cache)}, bad[:5])


def check_facet_types(ctx: Context):
    bad = []
    census = {"type-1": 0, "type-2": 0, "interior": 0, "boundary": 0}
    cells = enumerate_pants_cells(ctx.n, max_n=ctx.config.max_n)
    for c in cells:
        rep = classify_codim1_pieces(c.sigma, c.J)
        info = rep.to_json()
        census["type-1"] += info["top_types"]["type-1"]
        census["type-2"] += info["top_types"]["type-2"]
        census["interior"] += info["interior"]
        census["boundary"] += info["boundary"]
        if not rep.ok:
            bad.append(info)
    return _result(not bad, {"n": ctx.n, "cells": len(cells), **census}, bad[:5])


def check_global_homology(ctx: Context):
    """Collapse first (homotopy equivalence), then take homology of the core's order complex."""
    pt = ctx.pieces()
    core = collapse(pt.poset)
    h = poset_homology(core, nonzero_guard=ctx.config.snf_nonzero_guard)
    ranks = h.ranks + [0] * (pt.poset.max_dim + 1 - len(h.ranks))
    expected = [math.comb(ctx.n, k) for k in range(ctx.n)] + [0] * (len(ranks) - ctx.n)
    chi = euler_characteristic(pt.poset)
    ok = ranks == expected and h.torsion_free and chi == (-1) ** (ctx.n - 1) == h.euler_characteristic
    params = {"n": ctx.n, "betti": ranks, "euler": chi, "pieces": len(pt.poset), "core": list(core.f_vector())}
    return _result(ok, params, {"expected": expected, "torsion": h.torsion})


def check_membership(ctx: Context):
    index = PieceIndex(ctx.pieces())
    rng = random.Random(ctx.seed)
    mismatches, hits = [], 0
    for _ in range(ctx.config.samples):
        x, theta = sample_pair(ctx.n, rng)
        a = membership(x, theta)
        b = piece_membership(x, theta, index)
        hits += a
        if a != b:
            mismatches.append({"x": x.to_json(), "theta": theta.render(), "coamoeba": a, "pieces": b})
    params = {"n": ctx.n, "samples": ctx.config.samples, "seed": ctx.seed, "inside": hits}
    return _result(not mismatches, params, {"mismatches": len(mismatches), "first": mismatches[:5]})


def check_ober(ctx: Context):
    if ctx.n < 2:
        return SKIPPED, {"n": ctx.n}, {"reason": "the 2x2 cell needs |J| = 3, so n >= 2"}
    rep = compare_ober_phase()
    ok = (rep.ober_two_cells == 6 and rep.ober_betti == [1, 0, 0] and rep.phase_betti == [1, 0, 0]
          and rep.boundaries_coincide)
    params = {"ober_two_cells": rep.ober_two_cells, "ober_betti": rep.ober_betti, "phase_betti": rep.phase_betti,
              "boundaries_coincide": rep.boundaries_coincide, "move_equivalent": rep.move_equivalent}
    return _result(ok, params, rep.to_json())


CHECKS: dict[str, Callable] = {
    "partition-census": check_partition_census,
    "net-census": check_net_census,
    "alcove-partition-sampling": check_alcove_sampling,
    "dimension-formula": check_dimension_formula,
    "lattice-isomorphism": check_lattice_isomorphism,
    "boundary-sphere": check_boundary_sphere,
    "L-circle": check_L_circle,
    "star-complement": check_star_complement,
    "facet-types": check_facet_types,
    "global-homology": check_global_homology,
    "membership-consistency": check_membership,
    "ober-2x2": check_ober,
}


def run_check(name: str, ctx: Context) -> CheckReport:
    if name not in CHECKS:
        raise KeyError(f"unknown check {name!r}; known: {', '.join(CHECKS)}")
    t0 = time.perf_counter()
    try:
        status, params, witness = CHECKS[name](ctx)
    except ResourceLimitError as exc:
        status, params, witness = SKIPPED, {"n": ctx.n}, {"reason": str(exc)}
    except Exception as exc:  # a crashing check is a failing check
        status, params, witness = FAIL, {"n": ctx.n}, {"error": f"{type(exc).__name__}: {exc}"}
    if status == FAIL and witness is None:
        witness = {"error": "no witness recorded"}
    return CheckReport(name, params, status, witness, time.perf_counter() - t0)


def run_all(n: int, selection: Iterable[str] | None = None, seed: int = 0,
            config: Config | None = None) -> list[CheckReport]:
    """Run the selected checks (all by default), ordered by name."""
    names = sorted(CHECKS) if selection is None else sorted(set(selection))
    unknown = [s for s in names if s not in CHECKS]
    if unknown:
        raise KeyError(f"unknown checks: {', '.join(unknown)}")
    ctx = Context(n, seed, config or Config(seed=seed))
    return [run_check(name, ctx) for name in names]


def reports_to_json(reports: list[CheckReport], timing: bool = False) -> str:
    return json.dumps([r.to_json(timing) for r in reports], indent=2, sort_keys=True, default=str) + "\n"


def reports_to_text(reports: list[CheckReport]) -> str:
    return "".join(f"{r.status.upper():8s} {r.name} {json.dumps(r.params, sort_keys=True)}\n" for r in reports)


def write_junit(reports: list[CheckReport], path: str) -> None:
    suite = ET.Element("testsuite", name="phasepants-verify", tests=str(len(reports)),
                       failures=str(sum(r.status == FAIL for r in reports)),
                       skipped=str(sum(r.status == SKIPPED for r in reports)))
    for r in reports:
        case = ET.SubElement(suite, "testcase", classname="verify", name=r.name, time=f"{r.elapsed:.3f}")
        if r.status == FAIL:
            ET.SubElement(case, "failure", message="check failed").text = json.dumps(r.witness, default=str)
        elif r.status == SKIPPED:
            ET.SubElement(case, "skipped", message=json.dumps(r.witness, default=str))
    ET.ElementTree(suite).write(path, encoding="utf-8", xml_declaration=True)
