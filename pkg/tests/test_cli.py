"""Command-line interface: artifacts, exit codes, idempotence."""

import json

import pytest

from unitdist.cli import main

ALL_ARTIFACTS = [
    "solutions.json", "drawing.json", "circular.json",
    "drawing_report.json", "circular_report.json",
    "config_centers_a.json", "config_centers_b.json",
    "drawing.svg", "circular.svg",
    "config_centers_a.svg", "config_centers_b.svg",
]


def _run_all(out_dir, extra=()):
    return main(["all", "--seeds", "600", "--rng-seed", "1",
                 "--out-dir", str(out_dir), *extra])


@pytest.fixture(scope="module")
def pipeline_dir(tmp_path_factory):
    out = tmp_path_factory.mktemp("pipeline")
    assert _run_all(out) == 0
    return out


class TestSolve:
    def test_writes_solutions_and_succeeds(self, tmp_path, capsys):
        code = main(["solve", "--seeds", "500", "--rng-seed", "2",
                     "--out-dir", str(tmp_path)])
        assert code == 0
        entries = json.loads((tmp_path / "solutions.json").read_text())
        assert len(entries) == 2
        assert abs(entries[0]["h"] - 1.133693) < 1e-5
        out = capsys.readouterr().out
        assert "2 non-degenerate solution(s)" in out

    def test_no_roots_found_exits_2(self, tmp_path):
        code = main(["solve", "--seeds", "1", "--rng-seed", "0",
                     "--out-dir", str(tmp_path)])
        assert code == 2


class TestLayout:
    def test_builds_both_drawings(self, pipeline_dir, tmp_path):
        code = main(["layout", "--solutions",
                     str(pipeline_dir / "solutions.json"),
                     "--out-dir", str(tmp_path)])
        assert code == 0
        assert (tmp_path / "drawing.json").exists()
        assert (tmp_path / "circular.json").exists()

    def test_missing_solutions_file(self, tmp_path):
        assert main(["layout", "--out-dir", str(tmp_path)]) == 1


class TestVerify:
    def test_faithful_drawing_passes(self, pipeline_dir, tmp_path, capsys):
        code = main(["verify", str(pipeline_dir / "drawing.json"),
                     "--out-dir", str(tmp_path)])
        assert code == 0
        report = json.loads((tmp_path / "drawing_report.json").read_text())
        assert report["is_faithful"] is True
        table = capsys.readouterr().out
        assert "PASS" in table and "faithful" in table

    def test_circular_drawing_fails(self, pipeline_dir, tmp_path):
        code = main(["verify", str(pipeline_dir / "circular.json"),
                     "--out-dir", str(tmp_path)])
        assert code == 2
        report = json.loads((tmp_path / "circular_report.json").read_text())
        assert report["is_faithful"] is False
        assert report["min_nonedge_gap_witness"] == [0, 10]


class TestConfig:
    def test_derives_configuration(self, pipeline_dir, tmp_path):
        code = main(["config", str(pipeline_dir / "drawing.json"),
                     "--centers-class", "b", "--out-dir", str(tmp_path)])
        assert code == 0
        data = json.loads((tmp_path / "config_centers_b.json").read_text())
        assert len(data["points"]) == 8
        assert len(data["incidences"]) == 24

    def test_rejects_non_faithful_drawing(self, pipeline_dir, tmp_path):
        code = main(["config", str(pipeline_dir / "circular.json"),
                     "--out-dir", str(tmp_path)])
        assert code == 2


class TestRender:
    def test_renders_drawing_and_configuration(self, pipeline_dir, tmp_path):
        code = main(["render",
                     "--drawing", str(pipeline_dir / "drawing.json"),
                     "--configuration",
                     str(pipeline_dir / "config_centers_a.json"),
                     "--out-dir", str(tmp_path)])
        assert code == 0
        assert (tmp_path / "drawing.svg").exists()
        assert (tmp_path / "config_centers_a.svg").exists()

    def test_no_inputs_is_usage_error(self, tmp_path):
        assert main(["render", "--out-dir", str(tmp_path)]) == 1


class TestAll:
    def test_produces_every_artifact(self, pipeline_dir):
        for name in ALL_ARTIFACTS:
            assert (pipeline_dir / name).exists(), name

    def test_rerun_is_byte_identical(self, pipeline_dir, tmp_path):
        assert _run_all(tmp_path) == 0
        for name in ALL_ARTIFACTS:
            assert (tmp_path / name).read_bytes() == \
                (pipeline_dir / name).read_bytes(), name

    def test_excessive_gap_threshold_fails(self, tmp_path):
        code = _run_all(tmp_path, extra=["--gap-threshold", "0.5"])
        assert code == 2


class TestUsageErrors:
    def test_unknown_command(self):
        assert main(["frobnicate"]) == 1

    def test_unknown_flag(self):
        assert main(["solve", "--bogus"]) == 1

    def test_gap_threshold_must_exceed_edge_tol(self, tmp_path):
        code = main(["all", "--edge-tol", "1e-3", "--gap-threshold", "1e-4",
                     "--out-dir", str(tmp_path)])
        assert code == 1

    def test_no_command(self):
        assert main([]) == 1

    def test_missing_input_file(self, tmp_path, capsys):
        code = main(["verify", str(tmp_path / "nope.json"),
                     "--out-dir", str(tmp_path)])
        assert code == 1
        assert "not found" in capsys.readouterr().err

    def test_wrong_artifact_schema(self, pipeline_dir, tmp_path):
        # feeding a solutions file where a drawing is expected
        code = main(["config", str(pipeline_dir / "solutions.json"),
                     "--out-dir", str(tmp_path)])
        assert code == 1
