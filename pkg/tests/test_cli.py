"""Command-line surface and serialization."""

import json

import pytest

from genusdist.cli import emit, run
from genusdist.polyalg import LaurentPoly, parse_poly
from genusdist.serialize import (
    FormatError,
    gf_from_json_dict,
    gf_to_json_dict,
    graph_to_json_dict,
    load_graph,
    parse_graph_text,
    poly_from_json_dict,
    poly_to_json_dict,
)


def _write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def test_graph_text_roundtrip():
    text = "# doubled cycle on two vertices\nv 2\ne 0 1\ne 0 1\ne 0 1\ne 0 1\n"
    g = parse_graph_text(text)
    assert g.vertex_count == 2 and g.edge_count == 4
    from genusdist.serialize import emit_graph_text

    again = parse_graph_text(emit_graph_text(g))
    assert again.edges == g.edges


def test_graph_json_roundtrip():
    g = parse_graph_text("v 3\ne 0 1\ne 1 2\n")
    data = graph_to_json_dict(g)
    g2 = load_graph(json.dumps(data))
    assert g2.edges == g.edges


def test_graph_format_errors():
    with pytest.raises(FormatError):
        parse_graph_text("e 0 1\n")
    with pytest.raises(FormatError):
        parse_graph_text("v 2\nq 0 1\n")


def test_poly_json_roundtrip():
    p = parse_poly("4 + 2*x - 1/3*x^5")
    assert poly_from_json_dict(poly_to_json_dict(p)) == p
    data = poly_to_json_dict(parse_poly("4 + 2*x"))
    assert data["terms"] == [[0, "4"], [1, "2"]]


def test_gf_json_roundtrip():
    from genusdist import refdata
    from genusdist.polyalg import RationalGF

    num, den = refdata.cn2_genus_gf_printed()
    gf = RationalGF(num, den)
    again = gf_from_json_dict(gf_to_json_dict(gf))
    assert again.equal_cross_mult(gf)
    assert again.num == gf.num and again.den == gf.den


def test_emit_text_format():
    assert emit(parse_poly("6 + 30*x"), "text") == "6 + 30*x"
    assert json.loads(emit(parse_poly("4 + 2*x"), "json")) == {
        "var": "x",
        "terms": [[0, "4"], [1, "2"]],
    }


def test_emit_rejects_zero_distribution():
    with pytest.raises(ValueError):
        emit(LaurentPoly(), "text")


def test_cli_genus_c22(tmp_path, capsys):
    path = _write(tmp_path, "c22.txt", "v 2\ne 0 1\ne 0 1\ne 0 1\ne 0 1\n")
    assert run(["genus", path]) == 0
    assert capsys.readouterr().out.strip() == "6 + 30*x"


def test_cli_euler_with_crosscap(tmp_path, capsys):
    path = _write(tmp_path, "b1.txt", "v 1\ne 0 0\n")
    assert run(["euler", path, "--crosscap"]) == 0
    out = capsys.readouterr().out.strip().splitlines()
    assert out[0] == "1 + x"
    assert out[1] == "x"


def test_cli_family_series(capsys):
    assert run(["family", "cn2", "--series", "3"]) == 0
    out = capsys.readouterr().out
    assert "4 + 2*x" in out and "6 + 30*x" in out


def test_cli_family_spec_file(tmp_path, capsys):
    spec = {
        "h": {"vertices": 2, "edges": [[0, 1], [0, 1]]},
        "glue": "0>1",
        "kind": "circular",
        "mode": "genus",
    }
    path = _write(tmp_path, "fam.json", json.dumps(spec))
    assert run(["family", path, "--series", "2"]) == 0
    out = capsys.readouterr().out
    assert "4 + 2*x" in out


def test_cli_partials(tmp_path, capsys):
    path = _write(tmp_path, "p4.txt", "v 4\ne 0 2\ne 2 3\ne 3 1\n")
    assert run(["partials", path, "0", "1"]) == 0
    out = capsys.readouterr().out
    assert "S: 1" in out


def test_cli_ped(tmp_path, capsys):
    path = _write(tmp_path, "p22.txt", "v 2\ne 0 1\ne 0 1\n")
    assert run(["ped", path, "0", "1"]) == 0
    out = capsys.readouterr().out
    assert "ddpp: 1" in out and "ss2: x" in out


def test_cli_tables_diff(capsys):
    assert run(["tables", "--diff"]) == 0
    assert "differing entries" in capsys.readouterr().out


def test_cli_asympt(tmp_path, capsys):
    from genusdist import refdata
    from genusdist.polyalg import RationalGF

    num, den = refdata.cn2_genus_gf_printed()
    path = _write(tmp_path, "gf.json", json.dumps(gf_to_json_dict(RationalGF(num, den))))
    assert run(["asympt", path, "--at", "1"]) == 0
    out = capsys.readouterr().out
    assert "1/4" in out and "3/32" in out and "1/6" in out


def test_cli_normality(capsys):
    assert run(["--format", "tsv", "normality", "cn2-genus", "--ns", "20", "40"]) == 0
    out = capsys.readouterr().out
    lines = out.strip().splitlines()
    assert lines[0] == "n\tmean\tvariance\tks"
    assert len(lines) == 3


def test_cli_budget_exceeded(tmp_path, capsys):
    path = _write(tmp_path, "grid.txt", "\n".join(
        ["v 16"] + [f"e {a} {b}" for a, b in
         [(i + 4 * j, i + 4 * j + 1) for j in range(4) for i in range(3)] +
         [(i + 4 * j, i + 4 * j + 4) for j in range(3) for i in range(4)]]
    ))
    assert run(["--budget", "10", "genus", path]) == 1
    err = capsys.readouterr().err
    assert "budget exceeded" in err


def test_cli_missing_file(capsys):
    assert run(["genus", "/nonexistent/graph.txt"]) == 1


def test_cli_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        run(["family"])
    assert exc.value.code == 2


def test_cli_unknown_subcommand():
    with pytest.raises(SystemExit) as exc:
        run(["spectral"])
    assert exc.value.code == 2


def test_env_override(monkeypatch, tmp_path, capsys):
    monkeypatch.setenv("GENUSDIST_BUDGET", "10")
    path = _write(tmp_path, "c32.txt", "v 3\n" + "e 0 1\ne 0 1\ne 1 2\ne 1 2\ne 2 0\ne 2 0\n")
    assert run(["genus", path]) == 1
    assert "budget exceeded" in capsys.readouterr().err
