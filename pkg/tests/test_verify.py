import json

import pytest

from phasepants.chords import alcove_relations, enumerate_nets
from phasepants.config import Config
from phasepants.errors import ResourceLimitError
from phasepants.verify import (
    CHECKS,
    FAIL,
    PASS,
    SKIPPED,
    CheckReport,
    cyclic_partition_oracle,
    reports_to_json,
    run_all,
    write_junit,
)
from phasepants.verify import sign_vector_oracle

FAST = Config(samples=500)


def test_check_names_are_stable():
    assert sorted(CHECKS) == sorted([
        "partition-census", "net-census", "alcove-partition-sampling", "dimension-formula",
        "lattice-isomorphism", "boundary-sphere", "L-circle", "star-complement", "facet-types",
        "global-homology", "membership-consistency", "ober-2x2",
    ])


def test_run_all_n1():
    reports = run_all(1, seed=0, config=FAST)
    status = {r.name: r.status for r in reports}
    assert status.pop("ober-2x2") == SKIPPED
    assert set(status.values()) == {PASS}
    census = next(r for r in reports if r.name == "net-census")
    assert census.params["nets"] == 4


def test_global_homology_n2():
    (r,) = run_all(2, {"global-homology"}, 0)
    assert r.status == PASS and r.params["betti"][:3] == [1, 2, 0] and r.params["euler"] == -1


def test_lattice_isomorphism_n2():
    (r,) = run_all(2, {"lattice-isomorphism"}, 0)
    assert r.status == PASS and r.params["f_vector"] == [6, 9, 2]


def test_unknown_check():
    with pytest.raises(KeyError):
        run_all(1, {"nope"})


@pytest.mark.parametrize("n,count", [(1, 4), (2, 24), (3, 208)])
def test_sign_vector_oracle_counts(n, count):
    tables = sign_vector_oracle(n)
    assert len(tables) == count == len(enumerate_nets(n))
    ours = sorted(tuple(alcove_relations(nu).codes()) for nu in enumerate_nets(n))
    assert ours == tables


def test_sign_vector_oracle_guard():
    with pytest.raises(ResourceLimitError):
        sign_vector_oracle(4)


@pytest.mark.parametrize("n,count", [(1, 2), (2, 6), (3, 26)])
def test_partition_oracle(n, count):
    assert len(cyclic_partition_oracle(n)) == count


def test_reports_reproducible():
    sel = {"alcove-partition-sampling", "membership-consistency", "net-census"}
    a = reports_to_json(run_all(2, sel, 7, FAST.updated(seed=7)))
    b = reports_to_json(run_all(2, sel, 7, FAST.updated(seed=7)))
    assert a == b
    assert "elapsed" not in a


def test_fail_carries_witness():
    r = CheckReport("x", {}, FAIL)
    assert r.to_json()["status"] == FAIL
    from phasepants.verify import run_check, Context

    rep = run_check("ober-2x2", Context(2))
    if rep.status == FAIL:
        assert rep.witness


def test_junit(tmp_path):
    reports = run_all(1, {"partition-census", "ober-2x2"}, 0)
    path = tmp_path / "r.xml"
    write_junit(reports, str(path))
    text = path.read_text()
    assert "<skipped" in text and 'tests="2"' in text


def test_json_schema():
    data = json.loads(reports_to_json(run_all(1, {"net-census"}, 0), timing=True))
    assert set(data[0]) == {"check", "params", "status", "witness", "elapsed"}
