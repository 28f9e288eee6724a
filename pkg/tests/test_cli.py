import filecmp
import io
import math
from pathlib import Path

import pytest

from cyclogear.cli import RunConfig, main, parse_args, run
from cyclogear.errors import PinionLargerThanWheel
from cyclogear.geometry import Mode
from cyclogear.tessellate import Method

REFERENCE_ARGS = ["--wheel-teeth", "16", "--pinion-teeth", "6", "--mode", "single",
              "--svg-width", "750", "--svg-height", "750"]


def test_parse_reference_configuration():
    cfg = parse_args(REFERENCE_ARGS)
    s = cfg.spec
    assert (s.wheel_teeth, s.pinion_teeth, s.svg_width, s.svg_height) == (16, 6, 750, 750)
    assert s.mode is Mode.SINGLE_MESH
    assert s.clip_dedenda is True
    assert cfg.method is Method.PRIORITY_QUEUE
    assert cfg.formats == {"svg", "scad"}


@pytest.mark.parametrize(
    "extra, expected",
    [
        (["--no-clip-dedenda"], False),
        (["--clip-dedenda", "0"], False),
        (["--clip-dedenda"], True),
    ],
)
def test_clip_flags(extra, expected):
    assert parse_args(REFERENCE_ARGS + extra).spec.clip_dedenda is expected


def test_invalid_clip_value(capsys):
    with pytest.raises(SystemExit) as e:
        parse_args(REFERENCE_ARGS + ["--clip-dedenda", "2"])
    assert e.value.code != 0
    assert "Invalid value given for clip_dedenda" in capsys.readouterr().err


def test_invalid_mode(capsys):
    with pytest.raises(SystemExit):
        parse_args(["--wheel-teeth", "16", "--pinion-teeth", "6", "--mode", "3"])
    assert "Invalid value given for simulate_meshing" in capsys.readouterr().err


def test_frames_without_animation():
    with pytest.raises(SystemExit):
        parse_args(REFERENCE_ARGS + ["--frames", "5"])


def test_pinion_larger_than_wheel(capsys):
    code = main(["--pinion-teeth", "20", "--wheel-teeth", "16"])
    assert code == PinionLargerThanWheel.exit_code != 0
    assert "pinion cannot have more teeth than wheel" in capsys.readouterr().err


def test_no_arguments(capsys):
    with pytest.raises(SystemExit) as e:
        main([])
    assert e.value.code != 0
    assert "usage" in capsys.readouterr().err


def _run(tmp_path, *extra):
    cfg = parse_args(REFERENCE_ARGS + ["--out", str(tmp_path), "-v", *extra])
    buf = io.StringIO()
    code = run(cfg, buf)
    return code, buf.getvalue()


def test_run_log_matches_console(tmp_path):
    code, log = _run(tmp_path, "--legacy-scan")
    assert code == 0
    for line in [
        "Wheel GCR: 1.50000",
        "Pinion GC one rev degrees: 480.00000",
        "pinion GC one rev degrees > 360, so cutting back to 360",
        "    Angle in degrees: 14.70086",
        "    Angle in degrees: 46.63118",
        "Wheel addendum tip height: 9.31512",
        "Pinion addendum tip height: 4.37179",
        "rightmost x: 13.14997",
        "smaller scale factor: 31.96237",
        "angle in degrees: 47.00000, grad_diff: 0.00712",
    ]:
        assert line in log.splitlines()
    lines = log.splitlines()
    assert lines.index("pinion GC one rev degrees > 360, so cutting back to 360") == (
        lines.index("Pinion GC one rev degrees: 480.00000") + 1
    )
    assert (tmp_path / "wheel_pinion_single_mesh.svg").exists()
    assert (tmp_path / "wheel.scad").exists()


def test_negative_clearance_exit_code(tmp_path):
    assert main(["--wheel-teeth", "60", "--pinion-teeth", "3", "--out", str(tmp_path)]) == 8


def test_scan_table_hidden_when_step_is_adaptive(tmp_path):
    cfg = parse_args(["--wheel-teeth", "60", "--pinion-teeth", "4", "--mode", "none",
                      "--out", str(tmp_path), "-v"])
    buf = io.StringIO()
    run(cfg, buf)
    wheel_part = buf.getvalue().split("Finding wheel GC angle\n")[1].split("Finding pinion")[0]
    assert wheel_part == ""
    cfg2 = parse_args(["--wheel-teeth", "60", "--pinion-teeth", "4", "--mode", "none",
                       "--out", str(tmp_path), "-vv"])
    buf2 = io.StringIO()
    run(cfg2, buf2)
    assert "grad_diff" in buf2.getvalue().split("Finding wheel GC angle\n")[1].split("Finding pinion")[0]


def test_mode_none_places_pinion_diagonally_apart(tmp_path):
    code, log = _run(tmp_path, "--mode", "none")
    assert code == 0
    assert "rightmost x: 16.37179" in log.splitlines()
    assert (tmp_path / "wheel_pinion_nomesh.svg").exists()


def test_legacy_phase_on_odd_pinion_fails(tmp_path, capsys):
    code = main(["--wheel-teeth", "16", "--pinion-teeth", "7", "--legacy-phase",
                 "--formats", "svg", "--out", str(tmp_path)])
    assert code == 10
    assert "overlap" in capsys.readouterr().err


def test_animation_run(tmp_path):
    code = main(["--wheel-teeth", "16", "--pinion-teeth", "6", "--mode", "animation",
                 "--frames", "3", "--formats", "svg", "--out", str(tmp_path)])
    assert code == 0
    assert sorted(p.name for p in tmp_path.iterdir()) == [
        "convert_script", "frame00001.svg", "frame00002.svg", "frame00003.svg", "frame_log.txt"
    ]


def test_runs_are_byte_identical(tmp_path):
    args = ["--wheel-teeth", "16", "--pinion-teeth", "7", "--mode", "animation", "--frames", "4",
            "--method", "equal_arc"]
    assert main(args + ["--out", str(tmp_path / "a")]) == 0
    assert main(args + ["--out", str(tmp_path / "b")]) == 0
    cmp = filecmp.dircmp(tmp_path / "a", tmp_path / "b")
    assert cmp.left_only == cmp.right_only == cmp.diff_files == []
    _, mismatch, errors = filecmp.cmpfiles(tmp_path / "a", tmp_path / "b", cmp.common_files, shallow=False)
    assert mismatch == errors == []
