"""Text and JSON formats for graphs, gluings, polynomials, and family specs."""

from __future__ import annotations

import json
from fractions import Fraction

from .graphcore import Graph, GluingSpec
from .polyalg import BivarPoly, LaurentPoly, RationalGF


class FormatError(ValueError):
    pass


# -- graphs -----------------------------------------------------------------


def parse_graph_text(text: str) -> Graph:
    """Parse the line format: 'v N' then 'e U W' lines; '#' starts a comment."""
    vertices = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "v" and len(parts) == 2:
            if vertices is not None:
                raise FormatError(f"line {lineno}: duplicate vertex count")
            vertices = int(parts[1])
        elif parts[0] == "e" and len(parts) == 3:
            edges.append((int(parts[1]), int(parts[2])))
        else:
            raise FormatError(f"line {lineno}: cannot parse {raw!r}")
    if vertices is None:
        raise FormatError("missing 'v N' line")
    return Graph(vertices, edges)


def emit_graph_text(graph: Graph) -> str:
    lines = [f"v {graph.vertex_count}"]
    lines.extend(f"e {u} {w}" for u, w in graph.edges)
    return "\n".join(lines) + "\n"


def graph_to_json_dict(graph: Graph) -> dict:
    return {"vertices": graph.vertex_count, "edges": [[u, w] for u, w in graph.edges]}


def graph_from_json_dict(data: dict) -> Graph:
    try:
        return Graph(int(data["vertices"]), [tuple(e) for e in data["edges"]])
    except (KeyError, TypeError) as exc:
        raise FormatError(f"bad graph JSON: {exc}") from exc


def load_graph(text: str) -> Graph:
    """Accept either the JSON or the line format."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return graph_from_json_dict(json.loads(text))
    return parse_graph_text(text)


# -- polynomials --------------------------------------------------------------


def _frac_str(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def poly_to_json_dict(poly: LaurentPoly, var: str = "x") -> dict:
    return {"var": var, "terms": [[e, _frac_str(poly.terms[e])] for e in sorted(poly.terms)]}


def poly_from_json_dict(data: dict) -> LaurentPoly:
    try:
        return LaurentPoly({int(e): Fraction(c) for e, c in data["terms"]})
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad polynomial JSON: {exc}") from exc


def bivar_to_json_dict(p: BivarPoly, tvar: str = "t", xvar: str = "x") -> dict:
    terms = []
    for k, c in enumerate(p.coeffs):
        if not c.is_zero():
            terms.append([k, [[e, _frac_str(c.terms[e])] for e in sorted(c.terms)]])
    return {"vars": [tvar, xvar], "terms": terms}


def bivar_from_json_dict(data: dict) -> BivarPoly:
    try:
        return BivarPoly.from_terms(
            (int(k), LaurentPoly({int(e): Fraction(c) for e, c in inner}))
            for k, inner in data["terms"]
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad bivariate JSON: {exc}") from exc


def gf_to_json_dict(gf: RationalGF) -> dict:
    return {"num": bivar_to_json_dict(gf.num), "den": bivar_to_json_dict(gf.den)}


def gf_from_json_dict(data: dict) -> RationalGF:
    return RationalGF(bivar_from_json_dict(data["num"]), bivar_from_json_dict(data["den"]))


# -- family specs --------------------------------------------------------------


def family_from_json_dict(data: dict, mode_override: str | None = None):
    """Family spec file: {h, glue, kind, mode, cap: {graph, glue, side}}."""
    from .transfer import make_family

    try:
        h = graph_from_json_dict(data["h"])
        glue = GluingSpec.parse(data["glue"])
        kind = data.get("kind", "linear")
        mode = mode_override or data.get("mode", "genus")
        cap_graph = cap_glue = None
        cap_side = "left"
        if "cap" in data and data["cap"]:
            cap_graph = graph_from_json_dict(data["cap"]["graph"])
            cap_glue = GluingSpec.parse(data["cap"]["glue"])
            cap_side = data["cap"].get("side", "left")
    except (KeyError, TypeError) as exc:
        raise FormatError(f"bad family JSON: {exc}") from exc
    return make_family(h, glue, kind=kind, mode=mode,
                       cap_graph=cap_graph, cap_glue=cap_glue, cap_side=cap_side)
