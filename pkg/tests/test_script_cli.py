import json

import pytest

from surfclass.cli import main
from surfclass.lattice import BaseSurface, make_base
from surfclass.script import (
    ScriptError,
    parse_class_expr,
    render_reduction,
    run_script,
)
from surfclass.minimal import minimal_model


# ---------------------------------------------------------------------------
# script parsing and execution
# ---------------------------------------------------------------------------


def test_class_expr_forms():
    surf = make_base(BaseSurface.hirzebruch(2))
    assert parse_class_expr("2S + 3F", surf, 1).coords == (2, 3)
    assert parse_class_expr("2*S+3*F", surf, 1).coords == (2, 3)
    assert parse_class_expr("-S", surf, 1).coords == (-1, 0)
    assert parse_class_expr("F - S + F", surf, 1).coords == (-1, 2)


def test_class_expr_errors():
    surf = make_base(BaseSurface.cp2())
    with pytest.raises(ScriptError, match="unknown basis name 'Q'"):
        parse_class_expr("H + Q", surf, 4)
    with pytest.raises(ScriptError, match="line 4"):
        parse_class_expr("H + Q", surf, 4)
    with pytest.raises(ScriptError, match="empty class expression"):
        parse_class_expr("   ", surf, 2)
    with pytest.raises(ScriptError, match="missing"):
        parse_class_expr("H E1", make_base(BaseSurface.cp2()), 1)


TWO_POINTS = """\
# blow up two points of the plane, then contract the line through them
base cp2
blowup
blowup
line L = H - E1 - E2
blowdown L
report
"""


def test_two_points_script():
    out = run_script(TWO_POINTS)
    surf = out.surface
    assert surf.gram == ((0, 1), (1, 0))
    assert surf.canonical.coords == (-2, -2)
    assert surf.k_squared == 8
    # pushed-forward names survive as tracked lines in the new basis
    tracked = dict(surf.tracked)
    assert tracked["E1"].coords == (0, 1)
    assert tracked["E2"].coords == (1, 0)
    assert tracked["H"].coords == (1, 1)
    report = out.reports[0]
    assert "K^2 = 8  chi = 4  b2 = 2" in report
    assert "E1 = B2  (self-intersection 0)" in report


def test_script_minimal_model_replaces_surface():
    out = run_script("base cp2\nblowup\nblowup\nminimal-model\nreport\n")
    assert out.surface.rank == 1
    assert len(out.reductions) == 1
    assert str(out.reductions[0].final) == "CP2"
    assert "b2 = 1" in out.reports[0]


def test_script_reduction_render():
    out = run_script("base cp2\nblowup\nminimal-model\n")
    text = render_reduction(out.reductions[0])
    assert "contract E1 (class at contraction: (0, 1))" in text
    assert "minimal model: CP2" in text
    already = minimal_model(make_base(BaseSurface.hirzebruch(4)))
    assert render_reduction(already).splitlines() == [
        "already minimal: nothing to contract",
        "minimal model: Hirzebruch(4)",
    ]


def test_script_blowup_on_tracked_line():
    out = run_script(
        "base cp2\nline L = H\nblowup on L\nblowup on L\nblowdown L\n"
    )
    # L = H - E1 - E2 after the two constrained blow-ups, so it contracts
    assert out.surface.rank == 2


@pytest.mark.parametrize(
    "script, line_no, fragment",
    [
        ("blowup\n", 1, "start with a base"),
        ("base cp2\nbase cp2\n", 2, "already set"),
        ("base dp6\n", 1, "expected 'base cp2'"),
        ("base hirzebruch x\n", 1, "bad Hirzebruch index"),
        ("base cp2\nfrobnicate\n", 2, "unknown statement 'frobnicate'"),
        ("base cp2\nblowup on\n", 2, "at least one line name"),
        ("base cp2\nblowup unknowable\n", 2, "expected 'blowup'"),
        ("base cp2\nline L = H\nline L = H\n", 3, "already tracked"),
        ("base cp2\nblowdown\n", 2, "expected 'blowdown <name>'"),
        ("base cp2\nblowdown Z\n", 2, "unknown line name 'Z'"),
        ("base cp2\nminimal-model now\n", 2, "takes no arguments"),
        ("# nothing\n\n", 3, "script is empty"),
    ],
)
def test_script_errors_carry_line_numbers(script, line_no, fragment):
    with pytest.raises(ScriptError) as exc:
        run_script(script)
    assert exc.value.line_no == line_no
    assert fragment in str(exc.value)
    assert str(exc.value).startswith(f"line {line_no}:")


def test_script_rejects_contracting_plus_one_line():
    with pytest.raises(ScriptError) as exc:
        run_script("base cp2\nline L = H\nblowdown L\n")
    assert exc.value.bare_message == (
        "L is a +1 line, not -1 (self-intersection 1, K-degree -3)"
    )


# ---------------------------------------------------------------------------
# command line
# ---------------------------------------------------------------------------


def test_cli_classify_human(capsys):
    assert main(["classify", "a b a' b'"]) == 0
    out = capsys.readouterr().out
    assert "word: a b a' b'" in out
    assert "type: orientable genus 1 (torus), χ=0" in out
    assert "canonical: a1 b1 a1' b1'" in out


def test_cli_classify_json(capsys):
    assert main(["classify", "a a b b", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload == {
        "type": "NonOrientable(2)",
        "genus": 0,
        "crosscaps": 2,
        "euler": 0,
        "canonical": "a1 a1 a2 a2",
    }


def test_cli_classify_rejects_bad_word(capsys):
    assert main(["classify", "a b"]) == 1
    assert "symbol a occurs once" in capsys.readouterr().err


def test_cli_normalize_plain(capsys):
    assert main(["normalize", "a b b' a'"]) == 0
    out = capsys.readouterr().out
    assert "type: sphere, χ=2" in out
    assert "moves:" in out


def test_cli_normalize_trace_roundtrip(capsys, tmp_path):
    assert main(["normalize", "a a b b c c'", "--trace"]) == 0
    lines = capsys.readouterr().out.splitlines()
    header = [l for l in lines if l.startswith("#")]
    assert any(l.startswith("# initial: a a b b c c'") for l in header)
    assert any(l.startswith("# type: non-orientable, 2 cross-caps") for l in header)
    tracefile = tmp_path / "moves.txt"
    tracefile.write_text("\n".join(lines) + "\n", encoding="utf-8")
    # the emitted document replays against the initial word as-is
    assert main(["replay", "a a b b c c'", str(tracefile), "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["type"] == "NonOrientable(2)"
    assert payload["canonical"] == "a1 a1 a2 a2"


def test_cli_normalize_trace_json(capsys):
    assert main(["normalize", "a a'", "--trace", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["type"] == "Sphere"
    assert isinstance(payload["trace"], list)


def test_cli_sum(capsys):
    assert main(["sum", "a a", "b b"]) == 0
    out = capsys.readouterr().out
    assert "type: non-orientable, 2 cross-caps (Klein bottle), χ=0" in out


def test_cli_glue(capsys, tmp_path):
    f = tmp_path / "polys.txt"
    f.write_text("# two triangles along shared edges\na b c\na' b' c'\n", encoding="utf-8")
    assert main(["glue", str(f)]) == 0
    out = capsys.readouterr().out
    assert "polygons: 2" in out
    assert "type: orientable genus 1 (torus), χ=0" in out
    assert main(["glue", str(f), "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["euler"] == 0 and payload["genus"] == 1


def test_cli_replay_exit_codes(capsys, tmp_path):
    bad_syntax = tmp_path / "bad.txt"
    bad_syntax.write_text("rotate one\n", encoding="utf-8")
    assert main(["replay", "a a'", str(bad_syntax)]) == 1
    assert "trace line 1" in capsys.readouterr().err

    corrupt = tmp_path / "corrupt.txt"
    corrupt.write_text("rename q r\n", encoding="utf-8")
    # parses fine, fails mid-replay: an internal-consistency failure, code 2
    assert main(["replay", "a a'", str(corrupt)]) == 2
    assert "step 1" in capsys.readouterr().err


def test_cli_missing_file(capsys, tmp_path):
    assert main(["glue", str(tmp_path / "nope.txt")]) == 1
    assert "error:" in capsys.readouterr().err


def test_cli_rational_json(capsys, tmp_path):
    f = tmp_path / "two_points.srf"
    f.write_text(TWO_POINTS, encoding="utf-8")
    assert main(["rational", str(f), "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["lattice"]["gram"] == [[0, 1], [1, 0]]
    assert payload["lattice"]["canonical"] == [-2, -2]
    assert payload["lattice"]["tracked"]["E1"] == [0, 1]
    assert payload["k_squared"] == 8
    assert payload["b2"] == 2
    assert payload["euler"] == 4
    assert "minimal" not in payload  # no minimal-model statement in script


def test_cli_rational_minimal_fields(capsys, tmp_path):
    f = tmp_path / "reduce.srf"
    f.write_text("base cp2\nblowup\nblowup\nminimal-model\n", encoding="utf-8")
    assert main(["rational", str(f), "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["minimal"] == "CP2"
    assert payload["steps"] == [
        {"line": "E1", "class": [0, 1, 0]},
        {"line": "E2", "class": [0, 1]},
    ]
    assert main(["rational", str(f)]) == 0
    human = capsys.readouterr().out
    assert "contract E1" in human and "minimal model: CP2" in human


def test_cli_rational_human_matches_json(capsys, tmp_path):
    f = tmp_path / "h3.srf"
    f.write_text("base hirzebruch 3\nblowup\nreport\n", encoding="utf-8")
    assert main(["rational", str(f)]) == 0
    human = capsys.readouterr().out
    assert main(["rational", str(f), "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert f"K^2 = {payload['k_squared']}" in human
    assert f"b2 = {payload['b2']}" in human
    assert f"chi = {payload['euler']}" in human


def test_cli_rational_error_line(capsys, tmp_path):
    f = tmp_path / "bad.srf"
    f.write_text("base cp2\nblowup\nblowdown H\n", encoding="utf-8")
    assert main(["rational", str(f)]) == 1
    err = capsys.readouterr().err
    assert "line 3:" in err
    assert "H is a +1 line, not -1" in err
