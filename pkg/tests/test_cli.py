import csv
import io
import math
import subprocess
import sys
import xml.etree.ElementTree as ET

import pytest

from twocenter.cli import main
from twocenter.geom import Instance, Point, disk
from twocenter.instance_io import (
    CSV_HEADER,
    RunReport,
    generate,
    parse_instance,
    serialize_instance,
)

TRIANGLE = "disks 3\n0 0 1\n4 0 1\n2 5 1\n"
TWO_FAR = "disks 2\n0 0 1\n10 0 1\n"


def test_parse_golden():
    text = "# comment\n\ndisks 2\n 0 0 1 \n# another\n1.5 -2 0.25\n"
    inst = parse_instance(text)
    assert inst.n == 2
    assert inst.disks[1].center == Point(1.5, -2.0)
    assert inst.disks[1].radius == 0.25


def test_parse_errors_carry_line_numbers():
    with pytest.raises(ValueError, match="line 1: expected header"):
        parse_instance("disk 2\n0 0 1\n1 1 1\n")
    with pytest.raises(ValueError, match="line 2: bad number"):
        parse_instance("disks 1\n0 zero 1\n")
    with pytest.raises(ValueError, match="line 3: negative radius"):
        parse_instance("disks 2\n0 0 1\n0 0 -1\n")
    with pytest.raises(ValueError, match="line 2: values must be finite"):
        parse_instance("disks 1\n0 nan 1\n")
    with pytest.raises(ValueError, match="line 4: more disks than declared"):
        parse_instance("disks 2\n0 0 1\n1 0 1\n2 0 1\n")
    with pytest.raises(ValueError, match="declared 3 disks, found 2"):
        parse_instance("disks 3\n0 0 1\n1 0 1\n")
    with pytest.raises(ValueError, match="missing 'disks <n>' header"):
        parse_instance("# only a comment\n")


def test_serialize_parse_fixed_point():
    inst = generate(7, 123)
    once = serialize_instance(inst)
    again = serialize_instance(parse_instance(once))
    assert once == again
    assert once.splitlines()[0] == "disks 7"


def test_generate_deterministic():
    a = generate(5, 42)
    b = generate(5, 42)
    assert a == b
    assert isinstance(a, Instance)
    assert all(0 < d.radius <= 1.5 for d in a.disks)
    assert a != generate(5, 43)


def test_run_report_row():
    rep = RunReport(
        problem="pierce",
        algorithm="exact",
        n=3,
        eps=None,
        radius=1.0,
        c1=Point(2.0, 0.0),
        c2=Point(2.0, 5.0),
        seed=0,
        wall_time=0.123,
    )
    assert rep.csv_row() == "pierce,exact,3,,1,2,0,2,5,0"
    with_eps = RunReport("cover-restricted", "approx", 2, 0.25, 1.5,
                         Point(0, 0), Point(1, 0), 7)
    assert with_eps.csv_row() == "cover-restricted,approx,2,0.25,1.5,0,0,1,0,7"
    with pytest.raises(ValueError):
        RunReport("pierce", "exact", 1, None, -1.0, Point(0, 0), Point(0, 0), 0)


def _run_main(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_solve_pierce_exact(tmp_path, capsys):
    path = tmp_path / "tri.txt"
    path.write_text(TRIANGLE)
    code, out, err = _run_main(
        ["solve", "--problem", "pierce", "--mode", "exact", "--input", str(path)],
        capsys,
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == CSV_HEADER
    row = next(csv.DictReader(io.StringIO(out)))
    assert row["problem"] == "pierce"
    assert row["algorithm"] == "exact"
    assert row["n"] == "3"
    assert row["eps"] == ""
    assert float(row["radius"]) == pytest.approx(1.0, abs=1e-9)
    assert "wall time:" in err


def test_solve_cover_restricted_exact(tmp_path, capsys):
    path = tmp_path / "two.txt"
    path.write_text(TWO_FAR)
    code, out, _ = _run_main(
        ["solve", "--problem", "cover-restricted", "--mode", "exact",
         "--input", str(path)],
        capsys,
    )
    assert code == 0
    row = next(csv.DictReader(io.StringIO(out)))
    assert float(row["radius"]) == pytest.approx(1.0, abs=1e-9)
    centers = {(float(row["c1x"]), float(row["c1y"])),
               (float(row["c2x"]), float(row["c2y"]))}
    assert centers == {(0.0, 0.0), (10.0, 0.0)}


def test_usage_errors_exit_1(tmp_path, capsys):
    path = tmp_path / "two.txt"
    path.write_text(TWO_FAR)
    cases = [
        # approx without eps
        ["solve", "--problem", "cover-general", "--mode", "approx",
         "--input", str(path)],
        # eps outside approx
        ["solve", "--problem", "pierce", "--mode", "exact", "--eps", "0.5",
         "--input", str(path)],
        # mode not available for the problem
        ["solve", "--problem", "pierce", "--mode", "gonzalez",
         "--input", str(path)],
        # unknown flag
        ["solve", "--problem", "pierce", "--mode", "exact",
         "--input", str(path), "--bogus"],
        # missing subcommand
        [],
    ]
    for argv in cases:
        with pytest.raises(SystemExit) as exc:
            main(argv)
        assert exc.value.code == 1, argv
        capsys.readouterr()


def test_invalid_input_exits_2(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("disks 2\n0 0 1\n")
    code, _, err = _run_main(
        ["solve", "--problem", "pierce", "--mode", "exact", "--input", str(bad)],
        capsys,
    )
    assert code == 2
    assert err.startswith("invalid input:")
    code, _, err = _run_main(
        ["solve", "--problem", "pierce", "--mode", "exact",
         "--input", str(tmp_path / "missing.txt")],
        capsys,
    )
    assert code == 2


def test_infeasible_exits_2(tmp_path, capsys):
    empty = tmp_path / "empty.txt"
    empty.write_text("disks 0\n")
    code, _, err = _run_main(
        ["solve", "--problem", "cover-general", "--mode", "exact",
         "--input", str(empty)],
        capsys,
    )
    assert code == 2
    assert err.startswith("infeasible:")


def test_svg_output(tmp_path, capsys):
    path = tmp_path / "two.txt"
    path.write_text(TWO_FAR)
    svg = tmp_path / "fig.svg"
    code, _, _ = _run_main(
        ["solve", "--problem", "cover-restricted", "--mode", "sixapprox",
         "--input", str(path), "--svg", str(svg)],
        capsys,
    )
    assert code == 0
    text = svg.read_text()
    assert "stroke-dasharray" in text
    root = ET.fromstring(text)
    ns = "{http://www.w3.org/2000/svg}"
    circles = root.findall(f"{ns}circle")
    assert len(circles) == 2 + 2  # inputs plus the two solution disks
    assert len(root.findall(f"{ns}path")) == 2  # center crosses


def test_csv_byte_identical_across_runs(tmp_path):
    path = tmp_path / "inst.txt"
    path.write_text(serialize_instance(generate(9, 31)))
    argv = [sys.executable, "-m", "twocenter.cli", "solve",
            "--problem", "cover-restricted", "--mode", "approx",
            "--eps", "0.25", "--seed", "3", "--input", str(path)]
    first = subprocess.run(argv, capture_output=True, check=True)
    second = subprocess.run(argv, capture_output=True, check=True)
    assert first.stdout == second.stdout
    assert first.stdout.decode().splitlines()[0] == CSV_HEADER


def test_bench_agreement_suite(tmp_path):
    assert main(["bench", "--suite", "agreement", "--seed", "1",
                 "--out", str(tmp_path)]) == 0
    rows = list(csv.reader((tmp_path / "agreement.csv").open()))
    assert rows[0] == ["instance", "n", "delta", "naive", "fast", "agree"]
    assert rows[-1][0] == "total"
    assert int(rows[-1][-1]) == 0  # no naive/fast disagreements
    assert all(r[3] == r[4] for r in rows[1:-1])


def test_bench_ratios_suite(tmp_path):
    assert main(["bench", "--suite", "ratios", "--seed", "1",
                 "--out", str(tmp_path)]) == 0
    rows = list(csv.reader((tmp_path / "ratios.csv").open()))[1:]
    assert len(rows) > 300
    bound = {
        "pierce_exact_vs_oracle": 1.0 + 1e-9,
        "restricted_six_vs_exact": 6.0,
        "restricted_fptas025_vs_exact": 1.0 + 4 * math.sin(0.25),
        "restricted_fast025_vs_exact": 1.25,
        "general_fptas05_vs_exact": 1.5 + 1e-3,
    }
    seen = set()
    for r in rows:
        name, ratio = r[2], float(r[5])
        seen.add(name)
        assert ratio <= bound[name] + 1e-9, r
    assert seen == set(bound)


def test_bench_scaling_suite(tmp_path):
    assert main(["bench", "--suite", "scaling", "--seed", "1",
                 "--out", str(tmp_path)]) == 0
    rows = list(csv.reader((tmp_path / "scaling.csv").open()))
    assert rows[0] == ["n", "algorithm", "median_s"]
    assert len(rows) == 1 + 5 * 4
    assert all(float(r[2]) >= 0 for r in rows[1:])
