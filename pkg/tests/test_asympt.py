"""Singularity analysis, distribution statistics, and limit checks."""

import math
from fractions import Fraction

import pytest

from genusdist import refdata
from genusdist.asympt import (
    SingularityError,
    dist_stats,
    dominant_root,
    ks_to_normal,
    local_limit_estimate,
    local_limit_relative_error,
    mean_variance_at,
    normality_report,
    tv_distance,
)
from genusdist.distributions import cn2_recurrences
from genusdist.polyalg import BivarPoly, LaurentPoly, parse_poly


def test_dominant_root_genus():
    _, den = refdata.cn2_genus_gf_printed()
    report = dominant_root(den, 1)
    assert report.exact and report.root == Fraction(1, 6)
    assert report.simple and report.unique_minimum


def test_dominant_root_euler():
    report = dominant_root(refdata.cn2_euler_reduced_denominator(), 1)
    assert report.exact and report.root == Fraction(1, 12)


def test_dominant_root_linear():
    den = BivarPoly.from_terms([(0, 1), (1, -2)])
    assert dominant_root(den, 1).root == Fraction(1, 2)


def test_dominant_root_tie_raises():
    # 1 - 4 t^2 has roots +-1/2 of equal modulus
    den = BivarPoly.from_terms([(0, 1), (2, -4)])
    with pytest.raises(SingularityError):
        dominant_root(den, 1)


def test_mean_variance_genus_exact():
    _, den = refdata.cn2_genus_gf_printed()
    report = mean_variance_at(den, 1)
    assert report.mean == Fraction(1, 4)
    assert report.variance == Fraction(3, 32)


def test_mean_variance_euler_exact():
    report = mean_variance_at(refdata.cn2_euler_reduced_denominator(), 1)
    assert report.mean == Fraction(5, 7)
    assert report.variance == Fraction(78, 343)


def test_mean_variance_constant_root():
    den = BivarPoly.from_terms([(0, 1), (1, -2)])
    report = mean_variance_at(den, 1)
    assert report.mean == 0 and report.variance == 0


def test_mean_variance_grid_denominator():
    _, den = refdata.grid3_gf_printed()
    report = mean_variance_at(den, 1)  # finite-difference cross-check is built in
    assert report.mean > 0 and report.variance > 0


def test_mean_variance_at_other_points():
    _, den = refdata.cn2_genus_gf_printed()
    report = mean_variance_at(den, 2)
    # mu(x) = 1/2 - 1/(2 sqrt(1+3x)): at x=2, sqrt(7) is irrational
    expected = 0.5 - 0.5 / math.sqrt(7.0)
    assert not report.exact
    assert abs(float(report.mean) - expected) < 1e-12
    expected_var = 2 * 3 / 4 * (1 + 6) ** -1.5
    assert abs(float(report.variance) - expected_var) < 1e-12


def test_dist_stats_fixture():
    st = dist_stats(parse_poly("4 + 2*x"))
    assert st.mean == Fraction(1, 3) and st.variance == Fraction(2, 9)


def test_dist_stats_point_mass():
    st = dist_stats(LaurentPoly.x(5, 3))
    assert st.mean == 5 and st.variance == 0


def test_dist_stats_rejects_negative():
    with pytest.raises(ValueError):
        dist_stats(parse_poly("1 - x"))
    with pytest.raises(ValueError):
        dist_stats(LaurentPoly())


def test_ks_point_mass():
    # a point mass is far from any normal centered away from it; at the
    # matching mean the continuity-corrected distance is 1 - Phi(1/(2 sd))
    assert ks_to_normal(LaurentPoly.x(0, 1), 2.0, 1.0) >= 0.5
    at_mean = ks_to_normal(LaurentPoly.x(0, 1), 0.0, 1.0)
    assert 0.30 < at_mean < 0.31


def test_ks_binomial():
    binom = LaurentPoly.const(1)
    step = LaurentPoly({0: 1, 1: 1})
    for _ in range(64):
        binom = binom * step
    assert ks_to_normal(binom, 32.0, 16.0) < 0.06


def test_tv_distance_basic():
    p = parse_poly("1 + 2*x")
    assert tv_distance(p, p) == 0
    assert tv_distance(LaurentPoly.x(0), LaurentPoly.x(3)) == 1


def test_local_limit_t_value():
    assert local_limit_estimate(400, 100)["t"] == pytest.approx(2.0)


def test_local_limit_rejects_boundary():
    with pytest.raises(ValueError):
        local_limit_estimate(400, 0)
    with pytest.raises(ValueError):
        local_limit_estimate(400, 200)


def test_local_limit_accuracy():
    series = cn2_recurrences("genus", 400)
    exact = int(series[400].coeff(100))
    assert local_limit_relative_error(400, 100, exact) < 0.05


def test_normality_report_trend():
    series = cn2_recurrences("genus", 200)
    rows = normality_report(series, [50, 100, 200], 0.25, 3 / 32)
    ks = [r["ks"] for r in rows]
    assert ks[0] > ks[1] > ks[2]


def test_normality_exact_parameters():
    """The laws are normal to high accuracy against their exact moments."""
    series = cn2_recurrences("genus", 150)
    e_series = cn2_recurrences("euler", 150)
    for n in (75, 150):
        st = dist_stats(series[n])
        assert ks_to_normal(series[n], float(st.mean), float(st.variance)) < 0.01
        st_e = dist_stats(e_series[n])
        assert ks_to_normal(e_series[n], float(st_e.mean), float(st_e.variance)) < 0.01


def test_tree_like_normality():
    """Convolution powers of a fixed distribution approach the normal law."""
    b2_gamma = parse_poly("4 + 2*x")
    product = LaurentPoly.const(1)
    for _ in range(200):
        product = product * b2_gamma
    st = dist_stats(product)
    assert ks_to_normal(product, float(st.mean), float(st.variance)) < 0.05
