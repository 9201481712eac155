import json

import pytest

from lefcoin import formats
from lefcoin.cli import execute
from lefcoin.errors import ParseError, ShapeMismatch
from lefcoin.lefschetz import canonical_theta, fundamental_homology_class, thom_class


def run(capsys, *argv):
    code = execute(list(argv))
    out, err = capsys.readouterr()
    return code, (json.loads(out) if out.strip().startswith("{") else out), err


def write(tmp_path, name, data):
    p = tmp_path / name
    p.write_text(json.dumps(data))
    return str(p)


def test_complex_roundtrip(entries):
    K = entries["t2-9"].complex
    assert formats.complex_from_json(formats.complex_to_json(K)) == K


def test_map_roundtrip(entries):
    f = entries["t2-9"].maps["circle-v0"]
    cx = {"s1": entries["s1"].complex, "t2-9": entries["t2-9"].complex}
    g = formats.map_from_json(formats.map_to_json(f), cx)
    assert g.vertex_map == f.vertex_map and g.domain == f.domain


def test_theta_roundtrip(entries):
    K = entries["s2-oct"].complex
    theta = canonical_theta(K, K)
    back = formats.theta_from_json(json.loads(formats.dumps(formats.theta_to_json(theta))))
    assert back == theta


def test_class_roundtrip(entries):
    K = entries["t2-9"].complex
    x = fundamental_homology_class(K)
    assert formats.homology_class_from_json(formats.class_to_json(x), {K.name: K}) == x
    b = thom_class(K)
    assert formats.dual_class_from_json(formats.class_to_json(b), {K.name: K}) == b


@pytest.mark.parametrize("data", [{"facets": [[0]]}, {"name": "K"}, {"name": "K", "facets": [[0, "a"]]},
                                  {"name": 3, "facets": [[0]]}, [1, 2]])
def test_complex_parse_errors(data):
    with pytest.raises(ParseError):
        formats.complex_from_json(data)


def test_theta_parse_errors():
    base = {"model": "thom-diagonal", "n": 2, "shift": 0, "blocks": []}
    with pytest.raises(ParseError):
        formats.theta_from_json({**base, "model": "other"})
    with pytest.raises(ParseError):
        formats.theta_from_json({**base, "blocks": [{"degree": 2, "matrix": [["1"], ["1", "2"]]}]})
    with pytest.raises(ParseError):
        formats.theta_from_json({**base, "blocks": [{"degree": 2, "matrix": [["0.5"]]}]})
    with pytest.raises(ParseError):
        formats.theta_from_json({**base, "blocks": [{"degree": 2, "matrix": [["1"]]}] * 2})


def test_class_shape_checked(entries):
    K = entries["t2-9"].complex
    with pytest.raises(ShapeMismatch):
        formats.homology_class_from_json({"complex": "t2-9", "degree": 1, "coords": ["1"]}, {K.name: K})


def test_read_json_errors(tmp_path):
    with pytest.raises(ParseError):
        formats.read_json(tmp_path / "missing.json")
    bad = tmp_path / "bad.json"
    bad.write_text("{nope")
    with pytest.raises(ParseError):
        formats.read_json(bad)


@pytest.mark.parametrize("argv, key, value", [
    (["homology", "--corpus", "t2-9"], "betti", [1, 2, 1]),
    (["homology", "--corpus", "rp2-6"], "euler", "1"),
    (["euler", "--corpus", "s2-oct"], "euler", "2"),
    (["degree", "--corpus", "s2-oct", "--map-f", "antipodal"], "degree", "-1"),
    (["lefschetz", "--corpus", "s2-oct", "--map-f", "identity"], "L", "2"),
    (["coincidence", "--corpus", "s2-oct", "--map-f", "antipodal", "--map-g", "identity"], "L", "0"),
    (["coincidence", "--corpus", "s2-oct", "--map-f", "constant"], "L", "1"),
    (["coincidence", "--corpus", "t2-9", "--map-f", "shift"], "coincidence_free_consistent", True),
    (["theta", "--corpus", "s2-oct", "--map-f", "identity"], "L_theta", "2"),
    (["theta", "--corpus", "s2-oct", "--map-f", "identity", "--theta", "zero"], "L_theta", "0"),
    (["alphabeta", "--corpus", "s2-oct", "--map-f", "identity"], "L_alpha_beta", "2"),
    (["alphabeta", "--corpus", "s1", "--map-f", "reflection"], "L_alpha_beta", "2"),
    (["intersect", "--corpus", "t2-9", "--map-f", "circle-h1", "--sub", "h0"], "intersection_number", "0"),
    (["intersect", "--corpus", "t2-9", "--map-f", "circle-h1", "--sub", "h0"], "shriek_composite_zero", True),
    (["intersect", "--corpus", "s2-oct", "--map-f", "point", "--sub", "whole"], "intersection_number", "1"),
])
def test_cli_values(capsys, argv, key, value):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out[key] == value


def test_cli_transverse(capsys):
    code, out, _ = run(capsys, "intersect", "--corpus", "t2-9", "--map-f", "circle-v0", "--sub", "h0")
    assert code == 0
    assert out["intersection_number"] in ("1", "-1")
    assert out["L_theta"] in ("1", "-1")
    assert not out["image_disjoint"]


def test_cli_orient(capsys):
    code, out, _ = run(capsys, "orient", "--corpus", "s1")
    assert code == 0 and out["orientable"] and len(out["coefficients"]) == 3


@pytest.mark.parametrize("argv, code", [
    (["orient", "--corpus", "rp2-6"], 3),
    (["coincidence", "--corpus", "rp2-6", "--map-f", "identity"], 3),
    (["homology", "--corpus", "nope"], 2),
    (["homology"], 2),
    (["lefschetz", "--corpus", "s1"], 2),
    (["lefschetz", "--corpus", "s1", "--map-f", "missing"], 2),
    (["coincidence", "--corpus", "t2-9", "--map-f", "circle-h0", "--map-g", "circle-v0"], 4),
    (["intersect", "--corpus", "t2-9", "--map-f", "identity", "--sub", "h0"], 4),
    (["degree", "--corpus", "t2-9", "--map-f", "circle-h0"], 4),
])
def test_cli_exit_codes(capsys, argv, code):
    got, _, err = run(capsys, *argv)
    assert got == code
    assert "error" in json.loads(err)


def test_cli_files(capsys, tmp_path, entries):
    sq = write(tmp_path, "sq.json", {"name": "sq", "facets": [[0, 1], [1, 2], [2, 3], [0, 3]]})
    rot = write(tmp_path, "rot.json", {"domain": "sq", "codomain": "sq", "vertex_map": [1, 2, 3, 0]})
    code, out, _ = run(capsys, "coincidence", "-c", sq, "--map-f", rot)
    assert code == 0 and out["L"] == "0"
    code, out, _ = run(capsys, "homology", "-c", sq, "--format", "table")
    assert code == 0 and "betti" in out


def test_cli_file_theta_and_classes(capsys, tmp_path, entries):
    K = entries["s2-oct"].complex
    theta = formats.theta_to_json(canonical_theta(K, K))
    theta["blocks"][0]["matrix"] = [[str(3 * int(x)) for x in row] for row in theta["blocks"][0]["matrix"]]
    path = write(tmp_path, "theta.json", theta)
    code, out, _ = run(capsys, "theta", "--corpus", "s2-oct", "--map-f", "identity", "--theta", path)
    assert code == 0 and out["L_theta"] == "6"
    alpha = write(tmp_path, "a.json", {"complex": "s2-oct", "degree": 2,
                                        "coords": [str(-2 * fundamental_homology_class(K).coords[0])]})
    code, out, _ = run(capsys, "alphabeta", "--corpus", "s2-oct", "--map-f", "identity", "--alpha", alpha)
    assert code == 0 and out["L_alpha_beta"] == "-4"


def test_cli_subcomplex_file(capsys, tmp_path):
    sub = write(tmp_path, "q.json", {"ambient": "t2-9", "sub_facets": [[0, 3], [3, 6], [0, 6]]})
    code, out, _ = run(capsys, "intersect", "--corpus", "t2-9", "--map-f", "circle-h0", "--sub", sub)
    assert code == 0 and out["intersection_number"] in ("1", "-1")


def test_cli_corpus(capsys):
    code, out, _ = run(capsys, "corpus")
    assert code == 0
    assert out["entries"]["t2-9"]["f_vector"] == [9, 27, 18]
    assert out["entries"]["rp2-6"]["orientable"] is False


def test_cli_selftest_table(capsys):
    code, out, _ = run(capsys, "selftest", "--format", "table")
    assert code == 0
    lines = [l for l in out.splitlines() if l.startswith("[")]
    assert len(lines) == 10 and all("[PASS]" in l for l in lines)
