import io
import xml.etree.ElementTree as ET

import numpy as np
import pytest

from lcfrechet.cli import run_command
from lcfrechet.curves import validate_curve
from lcfrechet.fileio import (
    ParseError,
    format_matching,
    parse_curve_file,
    parse_matching,
    parse_node_path,
)
from lcfrechet.matching import ParamMatching, compute_lcfm
from lcfrechet.svg import diagram_axes, free_region, leader_indices, render_svg

SVG_NS = "{http://www.w3.org/2000/svg}"


def test_parse_two_points():
    assert parse_curve_file("0 0\n2 0\n").vertices.tolist() == [[0, 0], [2, 0]]


def test_parse_skips_comments_and_blanks():
    assert parse_curve_file("# comment\n\n1 2\n").vertices.tolist() == [[1, 2]]


@pytest.mark.parametrize("text,line", [("0 0\n0\n", 2), ("0 0\n1 x\n", 2),
                                       ("1 2 3\n", 1)])
def test_parse_errors_name_the_line(text, line):
    with pytest.raises(ParseError) as info:
        parse_curve_file(text)
    assert info.value.line == line
    assert f"line {line}" in str(info.value)


@pytest.mark.parametrize("text", ["", "# only a comment\n", "nan 0\n"])
def test_parse_rejects_empty_or_invalid(text):
    with pytest.raises(ParseError):
        parse_curve_file(text)


def test_matching_round_trip_is_exact():
    M = ParamMatching([(0, 0), (1 / 3, 0.1), (1, 1)])
    assert parse_matching(format_matching(M)) == M


def test_node_path_parse():
    assert parse_node_path("0 0\n1 1\n") == [(0, 0), (1, 1)]
    with pytest.raises(ParseError):
        parse_node_path("0 0.5\n")


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return write


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = run_command(argv, out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def parallel(files):
    return files("P.txt", "0 0\n2 0\n"), files("Q.txt", "0 1\n2 1\n")


@pytest.fixture
def spike(files):
    return (files("S1.txt", "0 0\n4 0\n"),
            files("S2.txt", "0 0\n1 0\n2 2\n3 0\n4 0\n"))


def test_distance_command(parallel):
    assert run(["distance", *parallel]) == (0, "1.00000000000\n", "")


def test_ddistance_command(parallel):
    assert run(["ddistance", *parallel])[1] == "1.00000000000\n"


def test_match_then_verify(spike, tmp_path):
    out = str(tmp_path / "m.txt")
    assert run(["match", *spike, "--out", out])[0] == 0
    code, text, _ = run(["verify", *spike, out])
    assert code == 0 and text == "locally correct\n"


def test_match_to_stdout_and_svg(parallel, tmp_path):
    svg = tmp_path / "m.svg"
    code, text, _ = run(["match", *parallel, "--svg", str(svg), "--diagram"])
    assert code == 0 and text == "0.0 0.0\n1.0 1.0\n"
    ET.fromstring(svg.read_text())


def test_dmatch_then_verify(spike, tmp_path):
    out = str(tmp_path / "d.txt")
    assert run(["dmatch", *spike, "--out", out])[0] == 0
    assert run(["verify", *spike, out, "--discrete"])[0] == 0


def test_verify_rejects_stretched_matching(spike, files):
    bad = files("bad.txt", "0 0\n0.475 0\n0.475 1\n0.5 2\n0.75 3\n1 4\n")
    code, text, _ = run(["verify", *spike, bad])
    assert code == 2
    assert text.startswith("not locally correct: witness 0 2")


def test_verify_discrete_rejects_bad_path(files):
    P = files("a.txt", "0 0\n1 0\n")
    Q = files("b.txt", "0 0\n1 5\n")
    path = files("p.txt", "0 0\n0 1\n1 1\n")
    code, text, _ = run(["verify", P, Q, path, "--discrete"])
    assert code == 2 and "witness 1 3" in text


def test_events_command(files):
    P = files("a.txt", "0 0\n2 0\n4 0\n")
    Q = files("b.txt", "0 1\n4 1\n")
    code, text, _ = run(["events", P, Q])
    assert code == 0
    assert text.splitlines()[0] == \
        "B 1.00000000000 left(1,0,0.5) left(1,0,0.5)"


def test_unknown_command_prints_usage(capsys):
    code, _, _ = run(["bogus"])
    assert code != 0
    assert "usage" in capsys.readouterr().err


def test_unknown_flag(parallel, capsys):
    assert run(["distance", *parallel, "--fast"])[0] != 0
    assert "usage" in capsys.readouterr().err


def test_missing_file_and_bad_file(files, parallel):
    code, _, err = run(["distance", "/nonexistent/p.txt", parallel[1]])
    assert code == 1 and err
    bad = files("bad.txt", "0 0\nfoo bar\n")
    code, _, err = run(["distance", bad, parallel[1]])
    assert code == 1 and "line 2" in err


def curves_of(svg_text):
    root = ET.fromstring(svg_text)
    return [el for el in root.iter(f"{SVG_NS}polyline")
            if el.get("class") == "curve"]


def leader_lengths(svg_text):
    root = ET.fromstring(svg_text)
    out = []
    for el in root.iter(f"{SVG_NS}line"):
        if el.get("class") == "leader":
            x1, y1, x2, y2 = (float(el.get(k)) for k in ("x1", "y1", "x2", "y2"))
            out.append(np.hypot(x2 - x1, y2 - y1))
    return out


def test_svg_structure():
    P = validate_curve([(0, 0), (2, 1), (4, 0)])
    Q = validate_curve([(0, 1), (3, 2), (4, 1)])
    text = render_svg(P, Q)
    assert len(curves_of(text)) == 2
    assert len(leader_lengths(text)) == 32


def test_svg_identical_curves_zero_leaders():
    c = validate_curve([(0, 0), (1, 2), (3, 1)])
    assert all(v == 0 for v in leader_lengths(render_svg(c, c)))


def test_svg_deterministic():
    P = validate_curve([(0, 0), (2, 1), (4, 0)])
    Q = validate_curve([(0, 1), (3, 2), (4, 1)])
    assert render_svg(P, Q, diagram=True) == render_svg(P, Q, diagram=True)


def test_svg_point_curve():
    P, Q = validate_curve([(1, 1)]), validate_curve([(0, 0), (2, 0)])
    text = render_svg(P, Q, diagram=True)
    assert len(curves_of(text)) == 2


def test_leader_indices_cover_ends():
    idx = leader_indices(10)
    assert len(idx) == 32 and idx[0] == 0 and idx[-1] == 9


def test_diagram_axes_scale_by_length():
    c = validate_curve([(0, 0), (1, 0), (4, 0)])
    assert diagram_axes(c).tolist() == [0.0, 0.25, 1.0]


def test_parallel_free_region_is_the_diagonal():
    P, Q = validate_curve([(0, 0), (2, 0)]), validate_curve([(0, 1), (2, 1)])
    poly = free_region(P, Q, 0, 0, 1.0)
    assert poly
    for x, y in poly:
        assert y == pytest.approx(x, abs=1e-9)
    root = ET.fromstring(render_svg(P, Q, compute_lcfm(P, Q), diagram=True))
    free = [el for el in root.iter(f"{SVG_NS}polygon") if el.get("class") == "free"]
    assert len(free) == 1
    diagram = next(el for el in root.iter(f"{SVG_NS}g") if el.get("id") == "diagram")
    assert float(diagram.get("data-eps")) == 1.0
