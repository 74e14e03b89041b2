import json

import pytest

from phasepants.cli import EXIT_FAIL, EXIT_GUARD, EXIT_OK, EXIT_USAGE, main

GOLDEN = [
    ("cells_n1", ["enumerate", "cells", "--n", "1"]),
    ("cells_n2", ["enumerate", "cells", "--n", "2"]),
    ("nets_n1", ["enumerate", "nets", "--n", "1"]),
    ("nets_n2", ["enumerate", "nets", "--n", "2"]),
    ("partitions_n2", ["enumerate", "partitions", "--n", "2"]),
    ("pieces_n2", ["enumerate", "pieces", "--n", "2"]),
    ("homology_pants_n2", ["homology", "--target", "pants", "--n", "2"]),
    ("verify_n1", ["verify", "--n", "1"]),
]


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("name,argv", GOLDEN, ids=[g[0] for g in GOLDEN])
def test_golden(capsys, fixtures_dir, name, argv):
    code, out, _ = run(capsys, argv)
    assert code == EXIT_OK
    assert out == (fixtures_dir / f"{name}.json").read_text(encoding="utf-8")


def test_enumerate_cells_n2(capsys):
    code, out, _ = run(capsys, ["enumerate", "cells", "--n", "2"])
    assert code == EXIT_OK and json.loads(out)["f_vector"] == [6, 9, 2]


def test_text_and_dot(capsys):
    code, out, _ = run(capsys, ["enumerate", "partitions", "--n", "1", "--format", "text", "--ascii"])
    assert code == EXIT_OK and sorted(out.splitlines()) == ["<01>", "<0|1>"]
    code, out, _ = run(capsys, ["export", "--target", "cell", "<0|1|2>", "012", "--dot"])
    assert code == EXIT_OK and out.startswith("digraph")


def test_classify_point(capsys):
    code, out, _ = run(capsys, ["classify-point", "--theta", "0,1"])
    data = json.loads(out)
    assert code == EXIT_OK and data["dim"] == 0
    code, out, _ = run(capsys, ["classify-point", "--theta", "0,1/2", "--format", "text"])
    assert code == EXIT_OK and out.strip()


def test_homology_and_collapse(capsys):
    code, out, _ = run(capsys, ["homology", "--target", "L", "<0|1|2>", "012", "--coeff", "z2"])
    assert code == EXIT_OK and json.loads(out)["betti"][:2] == [1, 1]
    code, out, _ = run(capsys, ["collapse", "--target", "L", "<0|1|2>", "012", "--goal", "circle"])
    assert code == EXIT_OK and json.loads(out)["reached"] is True
    code, out, _ = run(capsys, ["homology", "--target", "boundary", "<0|1|2>", "012", "--format", "text"])
    assert code == EXIT_OK and "betti [1, 1" in out


def test_verify_exit_codes(capsys, tmp_path):
    code, _, _ = run(capsys, ["verify", "--n", "1", "--checks", "net-census,partition-census"])
    assert code == EXIT_OK
    junit = tmp_path / "v.xml"
    code, out, _ = run(capsys, ["verify", "--n", "2", "--checks", "ober-2x2", "--junit", str(junit)])
    assert code == EXIT_FAIL and json.loads(out)[0]["status"] == "fail"
    assert junit.exists()


def test_usage_errors(capsys):
    assert run(capsys, ["verify", "--n", "1", "--checks", "bogus"])[0] == EXIT_USAGE
    assert run(capsys, ["classify-point", "--theta", "0,x"])[0] == EXIT_USAGE
    assert run(capsys, ["homology", "--target", "pants"])[0] == EXIT_USAGE
    assert run(capsys, ["homology", "--target", "cell", "<01|2>", "01"])[0] == EXIT_USAGE
    with pytest.raises(SystemExit) as exc:
        main(["enumerate", "widgets", "--n", "1"])
    assert exc.value.code == EXIT_USAGE


def test_guard(capsys):
    code, _, err = run(capsys, ["enumerate", "pieces", "--n", "4"])
    assert code == EXIT_GUARD and "guard" in err
    code, _, _ = run(capsys, ["homology", "--target", "phase", "--n", "3"])
    assert code == EXIT_GUARD


def test_config_file(capsys, tmp_path, monkeypatch):
    cfg = tmp_path / "pp.cfg"
    cfg.write_text("output_format = text\nmax_n = 2\n")
    code, out, _ = run(capsys, ["enumerate", "partitions", "--n", "1", "--config", str(cfg)])
    assert code == EXIT_OK and out.startswith("⟨")
    monkeypatch.setenv("PHASEPANTS_CONFIG", str(cfg))
    code, _, _ = run(capsys, ["enumerate", "pieces", "--n", "3"])
    assert code == EXIT_GUARD
    cfg.write_text("max_n = banana\n")
    assert run(capsys, ["enumerate", "cells", "--n", "1", "--config", str(cfg)])[0] == EXIT_USAGE


def test_out_file(capsys, tmp_path):
    target = tmp_path / "o.json"
    code, out, _ = run(capsys, ["enumerate", "cells", "--n", "1", "--out", str(target)])
    assert code == EXIT_OK and out == "" and json.loads(target.read_text())["f_vector"] == [1]
