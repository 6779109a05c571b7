import json
import subprocess
import sys

import pytest

from bundlelabel import formats
from bundlelabel.cli import FIGURE_CONFIGS, run
from bundlelabel.closed_form import LabelScheme, admissible_shifts, labels_from_scheme
from bundlelabel.graph import BundleSpec, Kind, build_bundle
from bundlelabel.labeling import Labeling


def bundle_args(kind, m, n, ell=None):
    args = ["--kind", kind, "-m", str(m), "-n", str(n)]
    if ell is not None:
        args += ["--ell", str(ell)]
    return args


def test_label_grid(capsys):
    code = run(["label", *bundle_args("direct", 9, 7, 3), "-d", "2", "--format", "grid"])
    out, err = capsys.readouterr()
    assert code == 0
    grid = [list(map(int, line.split())) for line in out.splitlines()]
    assert grid == [[(i + 3 * j) % 7 for j in range(7)] for i in range(9)]
    cert = json.loads(err.splitlines()[0])
    assert cert["case"] == "direct-f" and cert["a"] == 1 and cert["optimal"] is True


def test_label_csv_and_certificate_file(tmp_path, capsys):
    cert_path = tmp_path / "cert.json"
    out_path = tmp_path / "labels.csv"
    code = run([
        "label", *bundle_args("cartesian", 9, 7, 6), "-d", "2",
        "--format", "csv", "--certificate", str(cert_path), "-o", str(out_path),
    ])
    assert code == 0
    rows = [list(map(int, line.split(","))) for line in out_path.read_text().splitlines()]
    assert rows == [[(2 * i + 3 * j) % 7 for j in range(7)] for i in range(9)]
    assert json.loads(cert_path.read_text())["case"] == "cartesian-a"


def test_label_flags_upper_bound_for_large_d(capsys):
    ell = min(admissible_shifts(Kind.DIRECT, 3, 13, 5))
    assert run(["label", *bundle_args("direct", 3, 13, ell), "-d", "5"]) == 0
    err = capsys.readouterr().err
    assert "upper bound only" in err
    assert json.loads(err.splitlines()[0])["optimal"] is False


def test_verify_round_trip(tmp_path, capsys):
    path = tmp_path / "lab.json"
    assert run(["label", *bundle_args("direct", 9, 7, 3), "-d", "2", "--format", "json", "-o", str(path)]) == 0
    capsys.readouterr()
    assert run(["verify", str(path)]) == 0
    assert capsys.readouterr().out.strip() == "valid, span 6"


def test_verify_invalid_exits_1(tmp_path, capsys):
    spec = BundleSpec(Kind.DIRECT, 9, 7, 2)
    labeling = labels_from_scheme(spec, LabelScheme(2, "f", 1))
    path = tmp_path / "bad.json"
    path.write_text(formats.to_json(spec, labeling))
    assert run(["verify", str(path)]) == 1
    out = capsys.readouterr().out
    assert out.startswith("invalid,")
    assert "distance" in out


def test_verify_usage_errors(tmp_path, capsys):
    assert run(["verify", str(tmp_path / "missing.json")]) == 2
    bad = tmp_path / "short.json"
    bad.write_text(json.dumps({"kind": "direct", "m": 3, "n": 5, "ell": 1, "d": 1, "labels": [0, 1]}))
    assert run(["verify", str(bad)]) == 2
    broken = tmp_path / "broken.json"
    broken.write_text("{not json")
    assert run(["verify", str(broken)]) == 2


def test_shifts(capsys):
    assert run(["shifts", *bundle_args("cartesian", 9, 7), "-d", "2"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert sorted({int(line.split()[0].split("=")[1]) for line in lines}) == [1, 3, 4, 6]
    assert any("cartesian-b" in line for line in lines)


def test_shifts_rejects_bad_fibre(capsys):
    assert run(["shifts", *bundle_args("direct", 9, 8), "-d", "2"]) == 2


def test_lambda_command(capsys):
    assert run(["lambda", *bundle_args("direct", 3, 5, 1), "-d", "1"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("lambda 4\n")
    assert "nodes" in out


def test_lambda_budget_exhaustion(capsys):
    assert run(["lambda", *bundle_args("direct", 9, 7, 2), "-d", "2", "--budget", "100"]) == 3
    assert "budget exhausted" in capsys.readouterr().out


def test_gen_formats(capsys):
    assert run(["gen", *bundle_args("direct", 3, 5, 1)]) == 0
    out = capsys.readouterr().out
    edges = [tuple(map(int, line.split())) for line in out.splitlines()]
    assert edges == build_bundle(BundleSpec(Kind.DIRECT, 3, 5, 1)).edges()
    assert run(["gen", *bundle_args("cartesian", 3, 5, 1), "--format", "dot"]) == 0
    assert '[label="2,4"]' in capsys.readouterr().out


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["gen", "--kind", "twisted", "-m", "3", "-n", "5", "--ell", "0"],
        ["gen", *bundle_args("direct", 2, 5, 0)],
        ["gen", *bundle_args("direct", 3, 5, 5)],
        ["label", *bundle_args("direct", 9, 7, 2), "-d", "2"],
        ["label", *bundle_args("direct", 9, 7, 3), "-d", "0"],
        ["label", *bundle_args("direct", 9, 8, 3), "-d", "2"],
        ["lambda", *bundle_args("direct", 3, 5, 1), "-d", "1", "--budget", "0"],
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    assert run(argv) == 2


def test_figure_matches_schemes(capsys):
    assert run(["figure"]) == 0
    blocks = capsys.readouterr().out.strip().split("\n\n")
    assert len(blocks) == 8
    for block, (kind, ell, scheme, a) in zip(blocks, FIGURE_CONFIGS):
        header, *grid = block.splitlines()
        assert header == f"# {kind.value} ell={ell} {scheme}{a}: valid, span 6"
        spec = BundleSpec(kind, 9, 7, ell)
        expected = labels_from_scheme(spec, LabelScheme(2, scheme, a))
        assert [int(x) for row in grid for x in row.split()] == list(expected.labels)


def test_output_is_byte_stable(capsys):
    outs = []
    for _ in range(2):
        run(["figure"])
        outs.append(capsys.readouterr().out)
    assert outs[0] == outs[1]


def test_formats_round_trip():
    spec = BundleSpec(Kind.CARTESIAN, 4, 5, 2)
    labeling = Labeling(range(20), 3)
    assert formats.from_json(formats.to_json(spec, labeling)) == (spec, labeling)
    assert formats.from_csv(formats.to_csv(spec, labeling), 3) == labeling
    assert formats.to_grid(spec, labeling).splitlines()[1] == " 5  6  7  8  9"
    with pytest.raises(ValueError):
        formats.from_json('{"kind": "direct"}')


@pytest.mark.parametrize("kind, ell", [("direct", 1), ("cartesian", 6)])
def test_pipe_label_into_verify(kind, ell):
    label = subprocess.run(
        [sys.executable, "-m", "bundlelabel", "label", *bundle_args(kind, 9, 7, ell), "-d", "2", "--format", "json"],
        capture_output=True, text=True, check=True,
    )
    verify = subprocess.run(
        [sys.executable, "-m", "bundlelabel", "verify", "-"],
        input=label.stdout, capture_output=True, text=True,
    )
    assert verify.returncode == 0
    assert verify.stdout.strip() == "valid, span 6"
