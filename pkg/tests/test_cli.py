"""Command line interface: config parsing, outputs, exit codes."""

import csv
import json
import math
import subprocess
import sys

import pytest

from quench.cli import main, read_config
from quench.errors import ConfigError


def write_config(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return str(path)


def read_rows(path):
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        rows = [[row[0]] + [float(v) for v in row[1:]]
                if not _all_numeric(row) else [float(v) for v in row]
                for row in reader]
    return header, rows


def _all_numeric(row):
    try:
        [float(v) for v in row]
        return True
    except ValueError:
        return False


DEUTERON_CFG = """\
# weak field, two periods
omega = 1.0
field = 0.1
times = 0.0, 1.5707963267948966, 3.141592653589793, 4.71238898038469
"""

DIFFRACTION_CFG = """\
wave_number = 1.0
time = 100.0
x_start = 98.0
x_stop = 102.0
x_points = 5
cornu_u_max = 3.0
cornu_points = 61
"""

SPECTRAL_CFG = """\
basis = oscillator
size = 30
omega = 1.0
coupling = 0.07071067811865475
time_start = 0.0
time_stop = 6.283185307179586
time_steps = 8
convergence_sizes = 10, 20
"""


class TestReadConfig:
    def test_parses_comments_and_blanks(self, tmp_path):
        path = write_config(tmp_path, "a.cfg", """
# leading comment

omega = 2.5   # trailing comment
label=free  text
""")
        assert read_config(path) == {"omega": "2.5", "label": "free  text"}

    def test_duplicate_key_names_the_key(self, tmp_path):
        path = write_config(tmp_path, "a.cfg", "omega = 1\nomega = 2\n")
        with pytest.raises(ConfigError, match="omega"):
            read_config(path)

    def test_missing_equals_names_the_line(self, tmp_path):
        path = write_config(tmp_path, "a.cfg", "omega 1.0\n")
        with pytest.raises(ConfigError, match="key = value"):
            read_config(path)

    def test_empty_key_rejected(self, tmp_path):
        path = write_config(tmp_path, "a.cfg", "= 3.0\n")
        with pytest.raises(ConfigError, match="empty key"):
            read_config(path)

    def test_missing_file_is_config_error(self, tmp_path):
        with pytest.raises(ConfigError):
            read_config(str(tmp_path / "absent.cfg"))


class TestDeuteronMode:
    def test_run_and_columns(self, tmp_path):
        cfg = write_config(tmp_path, "d.cfg", DEUTERON_CFG)
        out = str(tmp_path / "deut.csv")
        assert main(["deuteron", "--config", cfg, "--out", out,
                     "--no-plots"]) == 0
        header, rows = read_rows(out)
        assert header == ["t", "center", "peak_density", "norm"]
        assert len(rows) == 4
        # half period: center at the turning point -sqrt(2) E / w^2
        t, center, peak, norm = rows[2]
        assert t == pytest.approx(math.pi)
        assert center == pytest.approx(-0.14142135623730953, abs=1e-9)
        assert peak == pytest.approx((1.0 / math.pi) ** 1.5, rel=1e-12)
        assert norm == pytest.approx(1.0, abs=1e-9)

    def test_summary_checks_are_tight(self, tmp_path):
        cfg = write_config(tmp_path, "d.cfg", DEUTERON_CFG)
        out = str(tmp_path / "deut.csv")
        main(["deuteron", "--config", cfg, "--out", out, "--no-plots"])
        with open(tmp_path / "deut.summary.json", encoding="utf-8") as fh:
            summary = json.load(fh)
        checks = summary["checks"]
        assert checks["center_kernel_vs_closed_max_abs_error"] < 1e-9
        assert checks["peak_density_kernel_max_rel_error"] < 1e-9
        assert checks["norm_max_abs_error"] < 1e-9
        assert summary["derived"]["period"] == pytest.approx(2.0 * math.pi)
        assert out in summary["files"]

    def test_slice_table_written(self, tmp_path):
        cfg = write_config(tmp_path, "d.cfg", DEUTERON_CFG
                           + "slice_times = 0.0, 3.141592653589793\n"
                           + "slice_z_points = 21\n")
        out = str(tmp_path / "deut.csv")
        main(["deuteron", "--config", cfg, "--out", out, "--no-plots"])
        header, rows = read_rows(tmp_path / "deut_slices.csv")
        assert header == ["t", "z", "density"]
        assert len(rows) == 42


class TestDiffractionMode:
    def test_quarter_density_on_the_wavefront(self, tmp_path):
        cfg = write_config(tmp_path, "f.cfg", DIFFRACTION_CFG)
        out = str(tmp_path / "diff.csv")
        assert main(["diffraction", "--config", cfg, "--out", out,
                     "--no-plots"]) == 0
        header, rows = read_rows(out)
        assert header == ["x", "u0", "density"]
        x, u0, dens = rows[2]  # midpoint sits exactly on x = k t
        assert x == 100.0
        assert u0 == 0.0
        assert dens == 0.25

    def test_summary_checks_and_cornu_table(self, tmp_path):
        cfg = write_config(tmp_path, "f.cfg", DIFFRACTION_CFG)
        out = str(tmp_path / "diff.csv")
        main(["diffraction", "--config", cfg, "--out", out, "--no-plots"])
        with open(tmp_path / "diff.summary.json", encoding="utf-8") as fh:
            summary = json.load(fh)
        assert summary["checks"]["quarter_point_abs_error"] < 1e-12
        assert summary["checks"]["shadow_density_at_u0_minus_20"] < 1e-3
        assert summary["checks"]["plateau_fringe_mean_abs_error"] < 1e-2
        assert summary["derived"]["wavefront"] == pytest.approx(100.0)
        header, rows = read_rows(tmp_path / "diff_cornu.csv")
        assert header == ["u", "C", "S"]
        assert len(rows) == 61


class TestSpectralMode:
    def test_zero_coupling_survival_is_identically_one(self, tmp_path):
        cfg = write_config(tmp_path, "s.cfg",
                           SPECTRAL_CFG.replace(
                               "coupling = 0.07071067811865475",
                               "coupling = 0.0"))
        out = str(tmp_path / "spect.csv")
        assert main(["spectral", "--config", cfg, "--out", out,
                     "--no-plots"]) == 0
        header, rows = read_rows(out)
        assert header == ["t", "survival", "expect_x", "norm", "energy"]
        for t, survival, expect_x, norm, energy in rows:
            assert survival == 1.0
            assert expect_x == pytest.approx(0.0, abs=1e-13)
            assert energy == pytest.approx(0.5, abs=1e-13)

    def test_deuteron_coupling_checks(self, tmp_path):
        cfg = write_config(tmp_path, "s.cfg", SPECTRAL_CFG)
        out = str(tmp_path / "spect.csv")
        main(["spectral", "--config", cfg, "--out", out, "--no-plots"])
        with open(tmp_path / "spect.summary.json", encoding="utf-8") as fh:
            summary = json.load(fh)
        assert summary["checks"]["eigenvalue_closed_form_max_abs_error"] \
            < 1e-8
        assert summary["checks"]["norm_max_abs_error"] < 1e-10
        assert summary["checks"]["energy_drift_max_abs_error"] < 1e-10
        conv = summary["derived"]["convergence"]
        assert conv["sizes"] == [10, 20]
        header, rows = read_rows(tmp_path / "spect_convergence.csv")
        assert header == ["size", "max_abs_error"]
        assert [int(r[0]) for r in rows] == [10, 20]

    def test_box_with_convergence_request_is_config_error(self, tmp_path):
        cfg = write_config(tmp_path, "s.cfg", """\
basis = box
size = 16
box_length = 2.0
coupling = 0.3
convergence_sizes = 10, 20
""")
        assert main(["spectral", "--config", cfg,
                     "--out", str(tmp_path / "s.csv"), "--no-plots"]) == 2


class TestKernelsCheckMode:
    def test_all_invariants_pass(self, tmp_path):
        cfg = write_config(tmp_path, "k.cfg", "omega = 1.0\nseed = 7\n")
        out = str(tmp_path / "kc.csv")
        assert main(["kernels-check", "--config", cfg, "--out", out,
                     "--no-plots"]) == 0
        with open(out, newline="", encoding="utf-8") as fh:
            reader = csv.reader(fh)
            header = next(reader)
            rows = list(reader)
        assert header == ["check", "error", "tolerance", "status"]
        assert len(rows) == 9
        for name, error, tolerance, status in rows:
            assert status == "PASS"
            assert float(error) < float(tolerance)


class TestJsonFormat:
    def test_single_document_round_trips_csv_values(self, tmp_path):
        cfg = write_config(tmp_path, "d.cfg", DEUTERON_CFG)
        csv_out = str(tmp_path / "a.csv")
        json_out = str(tmp_path / "b.json")
        main(["deuteron", "--config", cfg, "--out", csv_out, "--no-plots"])
        main(["deuteron", "--config", cfg, "--out", json_out,
              "--format", "json", "--no-plots"])
        assert not (tmp_path / "b.summary.json").exists()
        with open(json_out, encoding="utf-8") as fh:
            doc = json.load(fh)
        _, csv_rows = read_rows(csv_out)
        assert doc["data"]["columns"] == ["t", "center", "peak_density",
                                          "norm"]
        for jrow, crow in zip(doc["data"]["rows"], csv_rows):
            assert jrow == crow  # repr round trip is exact
        assert doc["files"] == [json_out]


class TestPlots:
    def test_pngs_written_and_listed(self, tmp_path):
        cfg = write_config(tmp_path, "d.cfg", DEUTERON_CFG)
        out = str(tmp_path / "deut.csv")
        main(["deuteron", "--config", cfg, "--out", out])
        for suffix in ("_trajectory.png", "_density.png"):
            assert (tmp_path / f"deut{suffix}").exists()
        with open(tmp_path / "deut.summary.json", encoding="utf-8") as fh:
            summary = json.load(fh)
        assert str(tmp_path / "deut_trajectory.png") in summary["files"]

    def test_no_plots_suppresses_pngs(self, tmp_path):
        cfg = write_config(tmp_path, "d.cfg", DEUTERON_CFG)
        main(["deuteron", "--config", cfg,
              "--out", str(tmp_path / "deut.csv"), "--no-plots"])
        assert not list(tmp_path.glob("*.png"))


class TestDeterminism:
    def test_byte_identical_reruns(self, tmp_path):
        cfg = write_config(tmp_path, "d.cfg", DEUTERON_CFG
                           + "slice_times = 0.0, 1.5707963267948966\n"
                           + "slice_z_points = 51\n")
        names = ["deut.csv", "deut.summary.json", "deut_slices.csv",
                 "deut_trajectory.png", "deut_density.png"]
        blobs = []
        for _ in range(2):
            main(["deuteron", "--config", cfg,
                  "--out", str(tmp_path / "deut.csv")])
            blobs.append({n: (tmp_path / n).read_bytes() for n in names})
        assert blobs[0] == blobs[1]


class TestExitCodes:
    def test_missing_required_key(self, tmp_path):
        cfg = write_config(tmp_path, "d.cfg", "field = 0.1\n")
        assert main(["deuteron", "--config", cfg,
                     "--out", str(tmp_path / "d.csv"), "--no-plots"]) == 2

    def test_unknown_key(self, tmp_path):
        cfg = write_config(tmp_path, "d.cfg",
                           DEUTERON_CFG + "wavelength = 3\n")
        assert main(["deuteron", "--config", cfg,
                     "--out", str(tmp_path / "d.csv"), "--no-plots"]) == 2

    def test_unparseable_number(self, tmp_path):
        cfg = write_config(tmp_path, "d.cfg",
                           "omega = fast\nfield = 0.1\n")
        assert main(["deuteron", "--config", cfg,
                     "--out", str(tmp_path / "d.csv"), "--no-plots"]) == 2

    def test_missing_config_file(self, tmp_path):
        assert main(["deuteron", "--config", str(tmp_path / "absent.cfg"),
                     "--out", str(tmp_path / "d.csv"), "--no-plots"]) == 2

    def test_numerical_domain_failure(self, tmp_path):
        # grid far too narrow for a size-40 basis: coverage check trips
        cfg = write_config(tmp_path, "s.cfg", """\
basis = oscillator
size = 40
omega = 1.0
coupling = 0.1
grid_half_width = 2.0
grid_points = 101
""")
        assert main(["spectral", "--config", cfg,
                     "--out", str(tmp_path / "s.csv"), "--no-plots"]) == 3


class TestModuleEntryPoint:
    def test_python_dash_m_invocation(self, tmp_path):
        cfg = write_config(tmp_path, "f.cfg", DIFFRACTION_CFG)
        out = str(tmp_path / "diff.csv")
        proc = subprocess.run(
            [sys.executable, "-m", "quench.cli", "diffraction",
             "--config", cfg, "--out", out, "--no-plots"],
            capture_output=True, text=True)
        assert proc.returncode == 0
        assert "mode: diffraction" in proc.stdout
        assert "wrote" in proc.stdout
