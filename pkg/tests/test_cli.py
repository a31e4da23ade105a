from __future__ import annotations

import json

from palatogram.cli import run


def test_epg_txt_a_is_empty(capsys):
    assert run(["epg", "--sound", "a:", "--model", "cosine", "--format", "txt"]) == 0
    out = capsys.readouterr().out
    assert out == ("." * 8 + "\n") * 8


def test_epg_txt_t_anterior_closure(capsys):
    assert run(["epg", "--sound", "t", "--format", "txt"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 8
    assert lines[0] == "########"


def test_list_sounds(capsys):
    assert run(["list-sounds"]) == 0
    names = capsys.readouterr().out.splitlines()
    assert len(names) == 12
    assert "t" in names and "θ" in names


def test_sound_flag_repeated_is_usage_error(capsys):
    assert run(["epg", "--sound", "t", "--sound", "i:"]) == 1
    assert capsys.readouterr().err.startswith("error: usage:")


def test_sound_and_contour_conflict(tmp_path, capsys):
    contour = tmp_path / "c.json"
    contour.write_text("[[0, 1], [40, 1]]", encoding="utf-8")
    assert run(["epg", "--sound", "t", "--contour", str(contour)]) == 1
    assert run(["epg"]) == 1


def test_unknown_flag_is_usage_error(capsys):
    assert run(["epg", "--sound", "t", "--frobnicate"]) == 1
    assert capsys.readouterr().err.startswith("error: usage:")


def test_unknown_sound_is_validation_error(capsys):
    assert run(["epg", "--sound", "zz"]) == 2
    err = capsys.readouterr().err
    assert err.startswith("error: config:")
    assert err.count("\n") == 1


def test_missing_palate_file(capsys):
    assert run(["epg", "--sound", "t", "--palate", "/nonexistent/p.json"]) == 2
    assert capsys.readouterr().err.startswith("error: io:")


def test_invalid_palate_json(tmp_path, capsys):
    bad = tmp_path / "p.json"
    bad.write_text("{not json", encoding="utf-8")
    assert run(["epg", "--sound", "t", "--palate", str(bad)]) == 2
    assert capsys.readouterr().err.startswith("error: config:")


def test_model_override_changes_pattern(capsys):
    run(["epg", "--sound", "i:", "--model", "cosine", "--format", "txt"])
    cosine = capsys.readouterr().out
    run(["epg", "--sound", "i:", "--model", "half_ellipse", "--format", "txt"])
    ellipse = capsys.readouterr().out
    assert cosine != ellipse


def test_contour_file_bare_array(tmp_path, capsys):
    contour = tmp_path / "c.json"
    contour.write_text("[[0, 50], [40, 50]]", encoding="utf-8")
    assert run(["epg", "--contour", str(contour), "--format", "txt"]) == 0
    assert capsys.readouterr().out == ("#" * 8 + "\n") * 8


def test_epg_svg_idempotent(tmp_path):
    out1, out2 = tmp_path / "a.svg", tmp_path / "b.svg"
    assert run(["epg", "--sound", "s", "--format", "svg", "--out", str(out1)]) == 0
    assert run(["epg", "--sound", "s", "--format", "svg", "--out", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_epg_json_structure(tmp_path):
    out = tmp_path / "f.json"
    assert run(["epg", "--sound", "k", "--rows", "4", "--cols", "6", "--out", str(out),
                "--format", "json"]) == 0
    doc = json.loads(out.read_text(encoding="utf-8"))
    assert doc["rows"] == 4 and doc["cols"] == 6
    assert len(doc["cells"]) == 4


def test_slice_classification_json(capsys):
    assert run(["slice", "--x", "6", "--sound", "t", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc == {"case": "full", "z_apex": 0.0}


def test_slice_svg_out(tmp_path):
    out = tmp_path / "s.svg"
    assert run(["slice", "--x", "25", "--sound", "i:", "--format", "svg",
                "--out", str(out)]) == 0
    assert out.read_bytes().startswith(b"<?xml")


def test_slice_outside_palate(capsys):
    assert run(["slice", "--x", "99", "--sound", "t", "--format", "json"]) == 2
    assert capsys.readouterr().err.startswith("error: domain:")


def test_mesh_counts(tmp_path):
    out = tmp_path / "m.obj"
    assert run(["mesh", "--nx", "4", "--nz", "8", "--out", str(out)]) == 0
    text = out.read_text(encoding="utf-8")
    assert sum(1 for l in text.splitlines() if l.startswith("v ")) == 45
    assert sum(1 for l in text.splitlines() if l.startswith("f ")) == 64


def test_mesh_with_sound_markers(tmp_path):
    out = tmp_path / "m.obj"
    assert run(["mesh", "--sound", "t", "--nx", "10", "--nz", "8", "--out", str(out)]) == 0
    text = out.read_text(encoding="utf-8")
    assert "g full_contact" in text
    assert "g no_contact" in text


def test_animate_frames(tmp_path):
    spec = tmp_path / "anim.json"
    spec.write_text(
        json.dumps(
            {"targets": ["a:", "t"], "hold_ms": 100, "transition_ms": 100, "fps": 10}
        ),
        encoding="utf-8",
    )
    outdir = tmp_path / "frames"
    assert run(["animate", "--spec", str(spec), "--format", "txt",
                "--outdir", str(outdir)]) == 0
    files = sorted(p.name for p in outdir.iterdir())
    assert files == ["frame_00000.txt", "frame_00001.txt", "frame_00002.txt"]
    assert (outdir / "frame_00000.txt").read_text() == ("." * 8 + "\n") * 8


def test_animate_rejects_bad_spec(tmp_path, capsys):
    spec = tmp_path / "anim.json"
    spec.write_text(json.dumps({"targets": [], "fps": 10}), encoding="utf-8")
    assert run(["animate", "--spec", str(spec), "--outdir", str(tmp_path / "o")]) == 2
    assert capsys.readouterr().err.startswith("error: config:")


def test_help_exits_zero():
    assert run(["--help"]) == 0


def test_no_command_is_usage_error():
    assert run([]) == 1
