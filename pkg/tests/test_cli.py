"""CLI: subcommands, JSON reports, exit codes, deterministic output."""

import json

import pytest

from greenring.cli import main
from greenring.presets import dihedral, sweedler, taft


@pytest.fixture
def taft3_path(tmp_path):
    path = tmp_path / "taft3.json"
    path.write_text(json.dumps(taft(3)))
    return str(path)


def run_cli(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_describe(capsys, taft3_path):
    code, report = run_cli(capsys, ["describe", "--datum", taft3_path])
    assert code == 0
    assert report["n"] == 3 and report["l"] == 3 and report["dim_H"] == 9


def test_tensor(capsys, taft3_path):
    code, report = run_cli(
        capsys, ["tensor", "--datum", taft3_path, "--left", "1,2", "--right", "1,2"]
    )
    assert code == 0
    assert report["result"] == {"coeffs": [[1, 3, 1], [3, 1, 1]]}


def test_tensor_pretty(capsys, taft3_path):
    code, report = run_cli(
        capsys,
        ["tensor", "--datum", taft3_path, "--left", "1,2", "--right", "1,2", "--pretty"],
    )
    assert code == 0
    assert report["result"] == "M[chi1,3] + M[chi3,1]"


def test_presentation(capsys, taft3_path):
    code, report = run_cli(capsys, ["presentation", "--datum", taft3_path])
    assert code == 0
    assert report["n"] == 3
    assert len(report["relation_coefficients_by_z_degree"]) == 4
    assert report["group_ring_structure_constants"]


def test_radical(capsys, taft3_path):
    code, report = run_cli(capsys, ["radical", "--datum", taft3_path])
    assert code == 0
    assert report["d3"] == report["rank"] == 2
    assert report["nilpotency_checked"] is True


def test_stable(capsys, taft3_path):
    code, report = run_cli(capsys, ["stable", "--datum", taft3_path])
    assert code == 0
    assert report["grouplike"]["G1"]["pass"]
    assert report["bifrobenius"]["t"]["coeffs"]


def test_verify_selected_suites(capsys, taft3_path):
    code, report = run_cli(
        capsys,
        ["verify", "--datum", taft3_path, "--suite", "presentation,radical"],
    )
    assert code == 0
    assert report["ok"] is True
    assert set(report["suites"]) == {"presentation", "radical"}


def test_verify_all_sweedler(capsys, tmp_path):
    path = tmp_path / "sweedler.json"
    path.write_text(json.dumps(sweedler()))
    code, report = run_cli(capsys, ["verify", "--datum", str(path), "--suite", "all"])
    assert code == 0
    assert report["ok"] is True


def test_oracle_check_max_dim(capsys, taft3_path):
    code, report = run_cli(
        capsys, ["oracle-check", "--datum", taft3_path, "--max-dim", "50"]
    )
    assert code == 0
    assert report["ok"] is True


def test_invalid_datum_exit_code(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    # g = b is not central in the dihedral group
    spec = dihedral(3)
    spec["g"] = "b"
    bad.write_text(json.dumps(spec))
    code, report = run_cli(capsys, ["describe", "--datum", str(bad)])
    assert code == 1
    assert report["error"] == "InvalidDatumError"
    assert "central" in report["message"]


def test_unreadable_file(capsys, tmp_path):
    code, report = run_cli(capsys, ["describe", "--datum", str(tmp_path / "nope.json")])
    assert code == 1
    assert report["error"] == "FileNotFoundError"


def test_unknown_suite(capsys, taft3_path):
    code, report = run_cli(
        capsys, ["verify", "--datum", taft3_path, "--suite", "nonsense"]
    )
    assert code == 1
    assert report["error"] == "KeyError"


def test_deterministic_output(capsys, taft3_path):
    _, first = run_cli(capsys, ["radical", "--datum", taft3_path])
    code = main(["radical", "--datum", taft3_path])
    second = capsys.readouterr().out
    code = main(["radical", "--datum", taft3_path])
    third = capsys.readouterr().out
    assert second == third


def test_out_file(tmp_path, taft3_path, capsys):
    out = tmp_path / "report.json"
    code = main(["describe", "--datum", taft3_path, "--out", str(out)])
    capsys.readouterr()
    assert code == 0
    assert json.loads(out.read_text())["m"] == 3


def test_describe_compare(capsys, tmp_path, taft3_path):
    other = tmp_path / "taft3b.json"
    spec = taft(3)
    spec["chi"] = 3
    other.write_text(json.dumps(spec))
    code, report = run_cli(
        capsys, ["describe", "--datum", taft3_path, "--compare", str(other)]
    )
    assert code == 0
    cmp = report["gauge_comparison"]
    assert cmp["antipode_traces_equal"] is False
    assert cmp["green_rings_isomorphic_by_cyclic_criterion"] is True


def test_generic_group_import(capsys, tmp_path):
    from greenring.groups import character_table, cyclic_group

    table = character_table(cyclic_group(4))
    spec = {
        "group": {
            "order": 4,
            "mult": [list(r) for r in cyclic_group(4).mult],
            "character_table": table.to_json(),
        },
        "chi": 2,
        "g": 1,
        "mu": 0,
    }
    path = tmp_path / "generic.json"
    path.write_text(json.dumps(spec))
    code, report = run_cli(capsys, ["describe", "--datum", str(path)])
    assert code == 0
    assert report["n"] == 4
