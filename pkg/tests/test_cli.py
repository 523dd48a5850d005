"""Command-line interface: subcommands, formats, exit codes, manifests."""

import csv
import hashlib
import json
import math

import pytest

from escobar.cli import main
from escobar.geometry import domain_to_json, make_regular_polygon


def run(capsys, *argv):
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


# ---------------------------------------------------------------------------
# exact
# ---------------------------------------------------------------------------


def test_exact_hexagon(capsys):
    rc, out, _ = run(capsys, "exact", "--ngon", "6", "--k", "3")
    assert rc == 0
    assert "I_3 = 0.75 [exact]" in out


def test_exact_disk_range(capsys):
    rc, out, _ = run(capsys, "exact", "--disk", "--k", "2..4")
    assert rc == 0
    lines = out.strip().splitlines()
    assert len(lines) == 3
    assert lines[0].startswith("I_2 = 0.636619772368 [exact]")


def test_exact_csv(tmp_path, capsys):
    out_file = tmp_path / "table.csv"
    rc, _, _ = run(capsys, "exact", "--ngon", "5", "--k", "2,5", "--out", str(out_file))
    assert rc == 0
    with open(out_file, newline="") as f:
        rows = list(csv.reader(f))
    assert rows[0] == ["k", "value", "kind", "provenance"]
    assert rows[2][0] == "5"
    assert float(rows[2][1]) == pytest.approx(math.cos(math.pi / 5), abs=1e-12)
    # sidecar manifest appears next to the table
    manifest = json.loads((tmp_path / "table.csv.manifest.json").read_text())
    assert manifest["command"] == "exact"
    assert "table.csv" in manifest["digests"]


# ---------------------------------------------------------------------------
# construct
# ---------------------------------------------------------------------------


def test_construct_corner_json(tmp_path, capsys):
    out_file = tmp_path / "tuple.json"
    rc, out, _ = run(
        capsys,
        "construct",
        "--family",
        "corner",
        "--ngon",
        "4",
        "--k",
        "3",
        "--epsilon",
        "1e-9",
        "--out",
        str(out_file),
    )
    assert rc == 0
    assert "max eta =" in out
    data = json.loads(out_file.read_text())
    assert data["family"] == "corner" and data["k"] == 3
    assert len(data["regions"]) == 3
    assert max(data["etas"]) == data["max_eta"]
    # right-angle chain follows the schedule law sin(pi/4)(1 + 2 eps^(1/12))
    law = math.sin(math.pi / 4) * (1 + 2 * (1e-9) ** (1 / 12))
    assert data["max_eta"] == pytest.approx(law, rel=1e-9)


def test_construct_equal_offset(capsys):
    rc, out, _ = run(
        capsys,
        "construct",
        "--family",
        "equal",
        "--ngon",
        "4",
        "--k",
        "2",
        "--offset",
        str(math.sqrt(2) / 2),
    )
    assert rc == 0
    assert "max eta = 0.5" in out


def test_construct_inscribed(capsys):
    rc, out, _ = run(capsys, "construct", "--family", "inscribed", "--ngon", "6", "--k", "3")
    assert rc == 0
    assert "max eta = 0.75" in out


def test_construct_render(tmp_path, capsys):
    svg_file = tmp_path / "pic.svg"
    rc, _, _ = run(
        capsys,
        "construct",
        "--family",
        "stripe",
        "--rect",
        "0.02",
        "8",
        "--k",
        "4",
        "--render",
        str(svg_file),
    )
    assert rc == 0
    assert svg_file.read_text().startswith("<svg")


# ---------------------------------------------------------------------------
# optimize
# ---------------------------------------------------------------------------


def test_optimize_square(tmp_path, capsys):
    out_file = tmp_path / "report.json"
    args = (
        "optimize",
        "--ngon",
        "4",
        "--k",
        "2",
        "--seed",
        "1",
        "--out",
        str(out_file),
    )
    rc, out, _ = run(capsys, *args)
    assert rc == 0
    assert "I_2 <= 0.5 [upper-bound]" in out
    first = out_file.read_bytes()

    rc, _, _ = run(capsys, *args)
    assert rc == 0
    assert out_file.read_bytes() == first  # byte-reproducible


def test_optimize_budget_refusal(capsys):
    rc, _, err = run(
        capsys,
        "optimize",
        "--rect",
        "1",
        "2",
        "--k",
        "3",
        "--grid",
        "100",
        "--budget",
        "1000",
    )
    assert rc == 4
    assert "budget" in err.lower()


# ---------------------------------------------------------------------------
# conjecture-scan
# ---------------------------------------------------------------------------


def test_scan_csv_and_manifest(tmp_path, capsys):
    out_file = tmp_path / "scan.csv"
    args = ("conjecture-scan", "--n-range", "3..6", "--out", str(out_file))
    rc, _, err = run(capsys, *args)
    assert rc == 0
    assert "pairs scanned" in err

    with open(out_file, newline="") as f:
        rows = list(csv.reader(f))
    assert rows[0] == ["n", "k", "bound_dn", "kind", "ik_disk", "satisfied"]
    # pairs with 2 <= k < n for n=3..6: 1 + 2 + 3 + 4
    assert len(rows) - 1 == 10
    assert all(r[5] in {"true", "false"} for r in rows[1:])
    # small orders all satisfy the disk comparison
    assert all(r[5] == "true" for r in rows[1:])

    manifest_path = tmp_path / "scan.csv.manifest.json"
    manifest = json.loads(manifest_path.read_text())
    digest = hashlib.sha256(out_file.read_bytes()).hexdigest()
    assert manifest["digests"]["scan.csv"] == digest
    assert manifest["command"] == "conjecture-scan"

    first = out_file.read_bytes()
    rc, _, _ = run(capsys, *args)
    assert rc == 0
    assert out_file.read_bytes() == first


def test_scan_stdout(capsys):
    rc, out, _ = run(capsys, "conjecture-scan", "--n-range", "4", "--k-range", "2..3")
    assert rc == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,k,bound_dn,kind,ik_disk,satisfied"
    assert len(lines) == 3


# ---------------------------------------------------------------------------
# symmetry-audit
# ---------------------------------------------------------------------------


def test_symmetry_audit(tmp_path, capsys):
    out_file = tmp_path / "audit.json"
    rc, out, _ = run(
        capsys,
        "symmetry-audit",
        "--ngon",
        "5",
        "--trials",
        "50",
        "--out",
        str(out_file),
    )
    assert rc == 0
    assert "overall: OK" in out
    data = json.loads(out_file.read_text())
    assert data["ok"] is True
    assert data["inequality_violations"] == 0


# ---------------------------------------------------------------------------
# render
# ---------------------------------------------------------------------------


def test_render_stdout(capsys):
    rc, out, _ = run(capsys, "render", "--disk")
    assert rc == 0
    assert out.startswith("<svg")


def test_render_tuple_roundtrip(tmp_path, capsys):
    tuple_file = tmp_path / "tuple.json"
    rc, _, _ = run(
        capsys,
        "construct",
        "--family",
        "equal",
        "--ngon",
        "6",
        "--k",
        "3",
        "--out",
        str(tuple_file),
    )
    assert rc == 0
    svg_file = tmp_path / "pic.svg"
    rc, _, _ = run(capsys, "render", "--tuple", str(tuple_file), "--out", str(svg_file))
    assert rc == 0
    svg = svg_file.read_text()
    assert svg.startswith("<svg")
    assert svg.count('stroke-width="4"') == 3
    assert (tmp_path / "pic.svg.manifest.json").exists()


def test_render_domain_file(tmp_path, capsys):
    dom_file = tmp_path / "hex.json"
    dom_file.write_text(json.dumps(domain_to_json(make_regular_polygon(6))))
    rc, out, _ = run(capsys, "render", "--domain", str(dom_file))
    assert rc == 0
    assert out.startswith("<svg")


# ---------------------------------------------------------------------------
# exit codes and version
# ---------------------------------------------------------------------------


def test_usage_error_exit_2(capsys):
    assert run(capsys, "exact", "--ngon", "6")[0] == 2  # missing --k
    assert run(capsys, "no-such-command")[0] == 2


def test_input_error_exit_3(tmp_path, capsys):
    rc, _, err = run(capsys, "render", "--domain", str(tmp_path / "missing.json"))
    assert rc == 3
    assert "error:" in err

    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "render", "--domain", str(bad))[0] == 3

    # structurally valid JSON that is not a domain
    bad.write_text('{"wrong": 1}')
    assert run(capsys, "render", "--domain", str(bad))[0] == 3


def test_exact_not_applicable_exit_3(capsys):
    rc, _, err = run(capsys, "exact", "--rect", "1", "2", "--k", "2")
    assert rc == 3
    assert "error:" in err


def test_version(capsys):
    rc, out, _ = run(capsys, "--version")
    assert rc == 0
    assert out.startswith("escobar ")
