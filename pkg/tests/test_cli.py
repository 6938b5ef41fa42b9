import io

import pytest

from quadkit import _kernels_py, kernels
from quadkit.cli import main
from quadkit.dsl import DECOMPOSITION_IDENTITY_TEXT, JACOBI_IDENTITY_TEXT

FIGURE_LINE = '{"A": ["10", "0"], "B": ["16", "4"], "C": ["4", "6"], "D": ["0", "0"]}'
INSIDE_LINE = '{"A": ["0", "0"], "B": ["4", "0"], "C": ["0", "4"], "D": ["1", "1"]}'


def write_lines(path, *lines):
    path.write_text("".join(line + "\n" for line in lines))
    return str(path)


class TestCheck:
    def test_figure_record(self, tmp_path, capsys):
        infile = write_lines(tmp_path / "in.jsonl", FIGURE_LINE)
        assert main(["check", "--input", infile]) == 0
        out = capsys.readouterr().out
        assert "areas=(40, 30, 20, 30)" in out
        assert "quad=60" in out
        assert "jacobi=(0, 0)" in out
        assert "decomposition=(0, 0)" in out
        assert "checked 1 records: all passed" in out

    def test_reads_stdin(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO(FIGURE_LINE + "\n"))
        assert main(["check"]) == 0
        assert "all passed" in capsys.readouterr().out

    def test_rational_record_exact_path(self, tmp_path, capsys):
        line = (
            '{"A": ["1/3", "0"], "B": ["1", "2/7"], "C": ["0.5", "1"], '
            '"D": ["0", "1"]}'
        )
        infile = write_lines(tmp_path / "in.jsonl", line)
        assert main(["check", "--input", infile]) == 0
        assert "jacobi=(0, 0)" in capsys.readouterr().out

    def test_float_backend(self, tmp_path, capsys):
        infile = write_lines(tmp_path / "in.jsonl", FIGURE_LINE, INSIDE_LINE)
        assert main(["check", "--backend", "float", "--input", infile]) == 0
        out = capsys.readouterr().out
        assert "checked 2 records: all passed" in out

    def test_float_tolerance_governs_pass(self, tmp_path, capsys):
        # This record's float residual is a few ulps of its scale:
        # within the default 1e-9 bound, outside a zero bound.
        line = (
            '{"A": ["999983", "999979"], "B": ["-999961", "999959"], '
            '"C": ["999953", "-999931"], "D": ["-999917", "999907"]}'
        )
        infile = write_lines(tmp_path / "in.jsonl", line)
        assert main(["check", "--backend", "float", "--input", infile]) == 0
        capsys.readouterr()
        assert main(["check", "--backend", "float", "--epsilon", "0",
                     "--input", infile]) == 1
        out = capsys.readouterr().out
        assert "FAIL" in out
        # The same record is exactly zero on the exact backend.
        assert main(["check", "--input", infile]) == 0

    def test_malformed_record_reports_line(self, tmp_path, capsys):
        infile = write_lines(tmp_path / "in.jsonl", FIGURE_LINE, "not json")
        assert main(["check", "--input", infile]) == 2
        assert "line 2:" in capsys.readouterr().err

    def test_bad_scalar_reports_line(self, tmp_path, capsys):
        bad = FIGURE_LINE.replace('"10"', '"1e3"')
        infile = write_lines(tmp_path / "in.jsonl", bad)
        assert main(["check", "--input", infile]) == 2
        assert "line 1" in capsys.readouterr().err

    def test_unsigned_area_stub_fails(self, tmp_path, capsys, monkeypatch):
        # Negative control: an unsigned-area kernel must be caught.
        def unsigned_stub(ax, ay, bx, by, cx, cy, dx, dy):
            k2 = [abs(v) for v in _kernels_py.check_quad_ints(
                ax, ay, bx, by, cx, cy, dx, dy)[:4]]
            k2_bcd, k2_acd, k2_abd, k2_abc = k2
            k2_quad = k2_abd + k2_bcd
            jx2 = k2_bcd * ax - k2_acd * bx + k2_abd * cx - k2_abc * dx
            jy2 = k2_bcd * ay - k2_acd * by + k2_abd * cy - k2_abc * dy
            return (
                k2_bcd, k2_acd, k2_abd, k2_abc, k2_quad, jx2, jy2,
                k2_bcd + k2_abd - k2_quad, k2_acd + k2_abc - k2_quad,
            )

        monkeypatch.setattr(kernels, "check_quad_ints", unsigned_stub)
        infile = write_lines(tmp_path / "in.jsonl", INSIDE_LINE)
        assert main(["check", "--input", infile]) == 1
        out = capsys.readouterr().out
        assert "FAIL" in out
        assert "1 failed" in out

    def test_output_file(self, tmp_path):
        infile = write_lines(tmp_path / "in.jsonl", FIGURE_LINE)
        outfile = tmp_path / "out.txt"
        assert main(["check", "--input", infile, "--output", str(outfile)]) == 0
        assert "all passed" in outfile.read_text()

    def test_blank_lines_skipped(self, tmp_path, capsys):
        infile = write_lines(tmp_path / "in.jsonl", "", FIGURE_LINE, "")
        assert main(["check", "--input", infile]) == 0
        assert "checked 1 records" in capsys.readouterr().out

    def test_integer_and_fraction_paths_agree(self, tmp_path, capsys):
        # "10/1" forces the generic exact path; output must not differ
        # from the integer kernel path.
        fast = write_lines(tmp_path / "fast.jsonl", FIGURE_LINE)
        slow = write_lines(
            tmp_path / "slow.jsonl", FIGURE_LINE.replace('"10"', '"10/1"')
        )
        assert main(["check", "--input", fast]) == 0
        fast_out = capsys.readouterr().out
        assert main(["check", "--input", slow]) == 0
        assert capsys.readouterr().out == fast_out

    def test_missing_input_file_exits_2(self, tmp_path, capsys):
        missing = str(tmp_path / "nope.jsonl")
        assert main(["check", "--input", missing]) == 2
        assert "error:" in capsys.readouterr().err

    def test_overflowing_float_coordinates_fail_cleanly(self, tmp_path, capsys):
        huge = "9" * 400
        line = (
            f'{{"A": ["{huge}", "0"], "B": ["1", "0"], '
            '"C": ["0", "1"], "D": ["1", "1"]}'
        )
        infile = write_lines(tmp_path / "in.jsonl", line)
        # Exact backend handles arbitrary magnitudes.
        assert main(["check", "--input", infile]) == 0
        capsys.readouterr()
        # Float backend overflows to infinity: a failed check, not a crash.
        assert main(["check", "--backend", "float", "--input", infile]) == 1
        assert "FAIL" in capsys.readouterr().out


class TestVerify:
    def test_main_identity_verified(self, capsys):
        assert main(["verify", JACOBI_IDENTITY_TEXT, "--samples", "64"]) == 0
        out = capsys.readouterr().out
        assert "result: verified" in out
        assert f"identity: {JACOBI_IDENTITY_TEXT}" in out

    def test_decomposition_verified(self, capsys):
        assert main(["verify", DECOMPOSITION_IDENTITY_TEXT, "--samples", "64"]) == 0
        assert "result: verified" in capsys.readouterr().out

    def test_refuted_identity(self, capsys):
        assert main(["verify", "A - B == 0", "--samples", "16"]) == 1
        out = capsys.readouterr().out
        assert "result: refuted" in out
        assert "counterexample:" in out

    def test_parse_error_exits_2(self, capsys):
        assert main(["verify", "A +"]) == 2
        assert "error:" in capsys.readouterr().err

    def test_type_error_exits_2(self, capsys):
        assert main(["verify", "A*B == 0"]) == 2
        assert "error:" in capsys.readouterr().err

    def test_unbalanced_identity_warns(self, capsys):
        assert main(["verify", "A == 0", "--samples", "4"]) == 1
        captured = capsys.readouterr()
        assert "warning:" in captured.err
        assert "result: refuted" in captured.out

    def test_balanced_identity_no_warning(self, capsys):
        assert main(["verify", "A - A == 0", "--samples", "4"]) == 0
        assert "warning" not in capsys.readouterr().err

    def test_output_file(self, tmp_path):
        outfile = tmp_path / "report.txt"
        args = [
            "verify", JACOBI_IDENTITY_TEXT,
            "--samples", "8", "--seed", "5", "--output", str(outfile),
        ]
        assert main(args) == 0
        assert "result: verified" in outfile.read_text()


class TestBary:
    def test_interior_point(self, capsys):
        assert main(["bary", "1,1", "0,0", "4,0", "0,4"]) == 0
        assert capsys.readouterr().out == "1/2 1/4 1/4 Interior\n"

    def test_vertex(self, capsys):
        assert main(["bary", "0,0", "0,0", "4,0", "0,4"]) == 0
        assert capsys.readouterr().out == "1 0 0 OnVertex(A)\n"

    def test_degenerate_triangle_exits_2(self, capsys):
        assert main(["bary", "1,1", "0,0", "1,1", "2,2"]) == 2
        assert "degenerate" in capsys.readouterr().err

    def test_wrong_arity_exits_2(self, capsys):
        assert main(["bary", "1,1", "0,0"]) == 2

    def test_rational_arguments(self, capsys):
        assert main(["bary", "1/2,1/2", "0,0", "1,0", "0,1"]) == 0
        assert capsys.readouterr().out == "0 1/2 1/2 OnEdge(BC)\n"

    def test_input_file(self, tmp_path, capsys):
        infile = write_lines(
            tmp_path / "queries.txt",
            "1,1 0,0 4,0 0,4",
            "2,0 0,0 4,0 0,4",
        )
        assert main(["bary", "--input", infile]) == 0
        out = capsys.readouterr().out.splitlines()
        assert out[0] == "1/2 1/4 1/4 Interior"
        assert out[1] == "1/2 1/2 0 OnEdge(AB)"

    def test_float_backend_snaps_boundary(self, capsys):
        args = [
            "bary", "--backend", "float",
            "2,0.0000000000001", "0,0", "4,0", "0,4",
        ]
        assert main(args) == 0
        assert "OnEdge(AB)" in capsys.readouterr().out


class TestGen:
    def test_deterministic_bytes(self, tmp_path):
        out1 = tmp_path / "a.jsonl"
        out2 = tmp_path / "b.jsonl"
        args = ["gen", "--kind", "convex", "--count", "25", "--seed", "42"]
        assert main(args + ["--output", str(out1)]) == 0
        assert main(args + ["--output", str(out2)]) == 0
        assert out1.read_bytes() == out2.read_bytes()

    def test_seed_changes_output(self, tmp_path):
        out1 = tmp_path / "a.jsonl"
        out2 = tmp_path / "b.jsonl"
        assert main(["gen", "--count", "10", "--seed", "1",
                     "--output", str(out1)]) == 0
        assert main(["gen", "--count", "10", "--seed", "2",
                     "--output", str(out2)]) == 0
        assert out1.read_bytes() != out2.read_bytes()

    def test_roundtrip_through_check(self, tmp_path, capsys):
        from quadkit.generators import KINDS

        for kind in KINDS:
            outfile = tmp_path / f"{kind}.jsonl"
            assert main(["gen", "--kind", kind, "--count", "40",
                         "--seed", "7", "--output", str(outfile)]) == 0
            assert main(["check", "--input", str(outfile)]) == 0
            assert "all passed" in capsys.readouterr().out

    def test_bad_kind_exits_2(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main(["gen", "--kind", "spiral"])
        assert excinfo.value.code == 2

    def test_count_lines(self, tmp_path):
        outfile = tmp_path / "r.jsonl"
        assert main(["gen", "--count", "13", "--seed", "0",
                     "--output", str(outfile)]) == 0
        assert len(outfile.read_text().splitlines()) == 13

    def test_tiny_range_exits_2(self, capsys):
        assert main(["gen", "--range", "4"]) == 2
        assert "error:" in capsys.readouterr().err


class TestFig:
    def test_figure_svg(self, tmp_path):
        infile = write_lines(tmp_path / "in.jsonl", FIGURE_LINE)
        outfile = tmp_path / "fig.svg"
        assert main(["fig", "--input", infile, "--output", str(outfile)]) == 0
        svg = outfile.read_text()
        assert "<svg" in svg
        assert "K[ABCD] = 60" in svg

    def test_stdout(self, tmp_path, capsys):
        infile = write_lines(tmp_path / "in.jsonl", FIGURE_LINE)
        assert main(["fig", "--input", infile]) == 0
        assert "</svg>" in capsys.readouterr().out

    def test_unwritable_path_exits_2(self, tmp_path, capsys):
        infile = write_lines(tmp_path / "in.jsonl", FIGURE_LINE)
        target = tmp_path / "missing-dir" / "fig.svg"
        assert main(["fig", "--input", infile, "--output", str(target)]) == 2
        assert "error:" in capsys.readouterr().err

    def test_empty_input_exits_2(self, tmp_path, capsys):
        infile = write_lines(tmp_path / "in.jsonl", "")
        assert main(["fig", "--input", infile]) == 2

    def test_malformed_record_exits_2(self, tmp_path, capsys):
        infile = write_lines(tmp_path / "in.jsonl", "{bad}")
        assert main(["fig", "--input", infile]) == 2

    def test_unrenderable_magnitude_exits_2(self, tmp_path, capsys):
        huge = "9" * 400
        line = (
            f'{{"A": ["{huge}", "0"], "B": ["1", "0"], '
            '"C": ["0", "1"], "D": ["1", "1"]}'
        )
        infile = write_lines(tmp_path / "in.jsonl", line)
        assert main(["fig", "--input", infile]) == 2
        assert "error:" in capsys.readouterr().err
