"""Transfer-operator engine: families, states, series, matrices."""

import random

import pytest

from genusdist.distributions import cn2_recurrences
from genusdist.graphcore import (
    BudgetExceeded,
    GluingSpec,
    build_named,
    euler_distribution_oracle,
    genus_distribution_oracle,
)
from genusdist.polyalg import BivarPoly, LaurentPoly, matrix_charpoly, poly_divides
from genusdist.transfer import (
    TransferState,
    build_family_graph,
    cn2_family,
    cn3_family,
    family_genus_poly,
    family_series,
    grid3_family,
    initial_state,
    make_family,
    step_state,
    transfer_matrix,
)


def test_make_family_rejects_overlapping_gluing():
    d2 = build_named("dipole", [2])
    with pytest.raises(ValueError):
        make_family(d2, GluingSpec([(0, 0)]), "linear", "genus")
    with pytest.raises(ValueError):
        make_family(d2, GluingSpec([]), "linear", "genus")


def test_initial_state_support():
    fam = cn2_family("circular", "genus")
    state = initial_state(fam)
    assert state.index == 1
    assert len(state.elem.support) == 4  # two boundary darts per side


def test_initial_state_completes_to_first_member():
    fam = cn2_family("linear", "genus")
    assert family_genus_poly(fam, 1) == LaurentPoly.const(1)  # doubled edge is planar


def test_step_linearity():
    fam = cn2_family("circular", "genus")
    engine = fam.engine()
    rng = random.Random(8)
    keys = list(engine.a1.terms)
    from genusdist.groupring import GroupRingElem

    a = GroupRingElem(engine.state_support, engine.signed, {keys[0]: LaurentPoly.x()})
    b = engine.step(engine.a1)
    lhs = engine.step(a + b)
    rhs = engine.step(a) + engine.step(b)
    assert lhs == rhs


def test_step_state_increments_index():
    fam = cn2_family("circular", "genus")
    s1 = initial_state(fam)
    s2 = step_state(fam, s1)
    assert s2.index == 2


def test_circular_engine_vs_oracle_both_modes():
    for mode, oracle in (("genus", genus_distribution_oracle), ("euler", euler_distribution_oracle)):
        fam = cn2_family("circular", mode)
        for n in range(1, 5):
            g = build_family_graph(fam, n)
            assert family_genus_poly(fam, n) == oracle(g).poly(), (mode, n)


def test_circular_engine_vs_recurrences_to_30():
    for mode in ("genus", "euler"):
        fam = cn2_family("circular", mode)
        series = family_series(fam, 30)
        expected = cn2_recurrences(mode, 30)
        assert list(series) == list(expected)


def test_linear_engine_vs_oracle():
    for mode, oracle in (("genus", genus_distribution_oracle), ("euler", euler_distribution_oracle)):
        fam = cn2_family("linear", mode)
        for n in range(1, 4):
            g = build_family_graph(fam, n)
            assert g.vertex_count == n + 1 and g.edge_count == 2 * n
            assert family_genus_poly(fam, n) == oracle(g).poly(), (mode, n)


def test_cn3_engine_vs_oracle_small():
    fam = cn3_family("circular", "genus")
    for n in (1, 2):
        g = build_family_graph(fam, n)
        assert family_genus_poly(fam, n) == genus_distribution_oracle(g).poly()


@pytest.mark.slow
def test_cn3_engine_vs_oracle_n3():
    fam = cn3_family("circular", "genus")
    g = build_family_graph(fam, 3)
    assert family_genus_poly(fam, 3) == genus_distribution_oracle(g).poly()


def test_series_total_count_identity():
    fam = cn2_family("circular", "genus")
    series = family_series(fam, 8)
    for n in range(1, 9):
        assert series[n].eval(1) == 6**n
    fam3 = cn3_family("circular", "genus")
    for n in range(1, 4):
        assert family_genus_poly(fam3, n).eval(1) == 120**n


def test_grid_family_members():
    fam = grid3_family()
    g1 = build_family_graph(fam, 1)
    assert g1.vertex_count == 9 and g1.edge_count == 12
    assert family_genus_poly(fam, 1) == genus_distribution_oracle(g1).poly()
    g2 = build_family_graph(fam, 2)
    assert g2.vertex_count == 12 and g2.edge_count == 17
    assert family_genus_poly(fam, 2) == genus_distribution_oracle(g2).poly()


def test_grid_index_description():
    fam = grid3_family()
    v, e = fam.index_graph_counts(1)
    assert (v, e) == (9, 12)
    assert "t^1" in fam.index_description(1)


def test_capped_trivial_cap_equals_linear():
    from genusdist.graphcore import Graph

    d2 = build_named("dipole", [2])
    glue = GluingSpec([(0, 1)])
    linear = make_family(d2, glue, "linear", "genus")
    # cap with a single vertex glued onto the left boundary vertex: amounts
    # to renaming, so the polynomials agree
    cap = Graph(1, [])
    capped = make_family(d2, glue, "capped", "genus",
                         cap_graph=cap, cap_glue=GluingSpec([(1, 0)]), cap_side="left")
    for n in range(1, 5):
        assert family_genus_poly(capped, n) == family_genus_poly(linear, n)


def test_transfer_matrix_cn2_genus():
    fam = cn2_family("circular", "genus")
    result = transfer_matrix(fam)
    basis, matrix = result["basis"], result["matrix"]
    assert len(basis) <= 24  # permutations of four boundary darts
    report = result["primitivity"]
    assert "primitive" in report
    # The boundary states carry the face-count variable before the final
    # exponent shift, so the reconstructed denominator divides the
    # root-substituted determinant det(1 - t*u*T) at z = 1/u (u^2 = x).
    size = len(basis)
    cp = matrix_charpoly(matrix)
    det = BivarPoly([cp.coeff_t(size - k) for k in range(size + 1)])
    det_sub = BivarPoly(
        [LaurentPoly({k - e: v for e, v in c.terms.items()}) for k, c in enumerate(det.coeffs)]
    )
    from genusdist.transfer import family_rational_gf

    gf = family_rational_gf(fam, p_max=6, q_max=6)
    den_u = BivarPoly([c.stretch(2) for c in gf.den.coeffs])
    assert poly_divides(den_u, det_sub)


def test_transfer_matrix_euler_basis():
    fam = cn2_family("circular", "euler")
    result = transfer_matrix(fam)
    assert len(result["basis"]) >= 10
    assert "primitive" in result["primitivity"]


def test_transfer_matrix_budget():
    fam = cn2_family("circular", "euler")
    with pytest.raises(BudgetExceeded):
        transfer_matrix(fam, max_basis=2)
