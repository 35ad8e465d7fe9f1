"""Exact arithmetic, series reconstruction, and matrix utilities."""

import random
from fractions import Fraction

import pytest

from genusdist import refdata
from genusdist.polyalg import (
    BivarPoly,
    LaurentPoly,
    RationalGF,
    ReconstructionError,
    SeriesPrefix,
    extend_series,
    matrix_charpoly,
    parse_poly,
    poly_arith,
    poly_divides,
    primitivity_check,
    reconstruct_rational_gf,
    recurrence_from_denominator,
)


def test_poly_basic_arithmetic():
    a = parse_poly("4 + 2*x")
    b = parse_poly("6 + 30*x")
    assert poly_arith(a, b, "mul").eval(1) == 216
    assert poly_arith(a, a, "sub") == LaurentPoly()
    assert (a - a).is_zero()
    e2 = refdata.CN2_EULER_INITIAL[2]
    assert poly_arith(e2, Fraction(1), "eval_at") == 288


def test_poly_laurent_exponents():
    p = LaurentPoly({-2: Fraction(1, 3), 1: 2})
    assert p.eval(Fraction(1, 2)) == Fraction(4, 3) + 1
    assert (p * p).coeff(-4) == Fraction(1, 9)
    assert p.shift(2).low() == 0


def test_parse_pretty_roundtrip():
    for text in ("0", "4 + 2*x", "-8 + 28*x", "1/2 - 3*x^4", "x^-2 + 5"):
        p = parse_poly(text)
        assert parse_poly(p.pretty()) == p


def test_bivar_mul_and_series():
    # geometric series: x*t / (1 - x*t)
    num = BivarPoly.from_terms([(1, LaurentPoly.x())])
    den = BivarPoly.from_terms([(0, 1), (1, LaurentPoly.x(1, -1))])
    gf = RationalGF(num, den)
    series = gf.series(5)
    for n in range(1, 6):
        assert series[n] == LaurentPoly.x(n)


def test_reconstruct_geometric():
    prefix = SeriesPrefix([LaurentPoly.x(n) for n in range(1, 9)])
    gf = reconstruct_rational_gf(prefix, p_max=2, q_max=2, guard=3)
    assert gf.den.deg_t() == 1
    assert gf.num == BivarPoly.from_terms([(1, LaurentPoly.x())])
    assert gf.den == BivarPoly.from_terms([(0, 1), (1, LaurentPoly.x(1, -1))])


def test_reconstruct_needs_enough_terms():
    prefix = SeriesPrefix([LaurentPoly.x(n) for n in range(1, 4)])
    with pytest.raises(ReconstructionError):
        reconstruct_rational_gf(prefix, p_max=3, q_max=3, guard=3)


def test_reconstruct_roundtrip_random_rational():
    rng = random.Random(7)
    num = BivarPoly.from_terms(
        [(k, LaurentPoly({e: rng.randint(-3, 3) for e in range(2)})) for k in range(1, 4)]
    )
    den_terms = [(0, LaurentPoly.const(1))]
    den_terms += [(k, LaurentPoly({e: rng.randint(-2, 2) for e in range(2)})) for k in (1, 2)]
    den = BivarPoly.from_terms(den_terms)
    gf = RationalGF(num, den)
    prefix = gf.series(12)
    rec = reconstruct_rational_gf(prefix, p_max=4, q_max=4, guard=3)
    assert rec.series(12) == prefix
    assert rec.equal_cross_mult(gf)


def test_recurrence_from_denominator_genus():
    num, den = refdata.cn2_genus_gf_printed()
    rec = recurrence_from_denominator(RationalGF(num, den))
    assert rec == refdata.CN2_GENUS_RECURRENCE


def test_recurrence_from_denominator_euler_reduced():
    den = refdata.cn2_euler_reduced_denominator()
    rec = recurrence_from_denominator(RationalGF(BivarPoly.one(), den))
    assert rec[0] == parse_poly("6 + 14*x")
    assert rec[1] == parse_poly("-8 - 48*x - 4*x^2")
    assert rec[5] == parse_poly("4608*x^6")
    assert rec == refdata.CN2_EULER_RECURRENCE_ORDER6


def test_recurrence_trivial():
    den = BivarPoly.from_terms([(0, 1), (1, -1)])
    assert recurrence_from_denominator(RationalGF(BivarPoly.one(), den)) == [LaurentPoly.const(1)]


def test_extend_series_total_counts():
    series = extend_series(refdata.CN2_GENUS_RECURRENCE, refdata.CN2_GENUS_INITIAL, 7)
    assert series[7].eval(1) == 6**7
    e_series = extend_series(refdata.CN2_EULER_RECURRENCE_ORDER10, refdata.CN2_EULER_INITIAL, 11)
    assert e_series[11].eval(1) == 2**12 * 6**11


def test_reduced_recurrence_reproduces_tail():
    init6 = SeriesPrefix(list(refdata.CN2_EULER_INITIAL)[:6])
    series = extend_series(refdata.CN2_EULER_RECURRENCE_ORDER6, init6, 10)
    for n in range(7, 11):
        assert series[n] == refdata.CN2_EULER_INITIAL[n]


def test_matrix_charpoly_identity():
    ident = [[LaurentPoly.const(1 if i == j else 0) for j in range(2)] for i in range(2)]
    cp = matrix_charpoly(ident)
    # (lambda - 1)^2 = lambda^2 - 2 lambda + 1
    assert cp == BivarPoly.from_terms([(2, 1), (1, -2), (0, 1)])


def test_matrix_charpoly_cayley_hamilton():
    rng = random.Random(11)
    for _ in range(3):
        m = [[LaurentPoly.const(rng.randint(-4, 4)) for _ in range(4)] for _ in range(4)]
        cp = matrix_charpoly(m)
        # evaluate cp at the matrix itself
        acc = [[LaurentPoly() for _ in range(4)] for _ in range(4)]
        power = [[LaurentPoly.const(1 if i == j else 0) for j in range(4)] for i in range(4)]
        from genusdist.polyalg import mat_mul

        for k in range(len(cp.coeffs)):
            c = cp.coeff_t(k)
            for i in range(4):
                for j in range(4):
                    acc[i][j] = acc[i][j] + power[i][j] * c
            power = mat_mul(power, m)
        assert all(cell.is_zero() for row in acc for cell in row)


def test_charpoly_production_matrix_trace_coefficient():
    cp = matrix_charpoly(refdata.production_matrix_printed())
    assert cp.coeff_t(9) == parse_poly("-12 - 26*x")


def test_charpoly_production_matrix_eigenvalue_12_double():
    cp = matrix_charpoly(refdata.production_matrix_printed())
    coeffs = [c.eval(1) for c in cp.coeffs]
    for _ in range(2):
        acc = Fraction(0)
        quotient = []
        for c in reversed(coeffs):
            acc = acc * 12 + c
            quotient.append(acc)
        assert acc == 0
        coeffs = list(reversed(quotient[:-1]))
    # not divisible a third time
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * 12 + c
    assert acc != 0


def test_charpoly_matches_published_recurrence():
    """The production-matrix charpoly encodes the order-10 recurrence."""
    cp = matrix_charpoly(refdata.production_matrix_printed())
    for j, b in enumerate(refdata.CN2_EULER_RECURRENCE_ORDER10, start=1):
        assert cp.coeff_t(10 - j) == -b


def test_primitivity_all_ones():
    report = primitivity_check([[1, 1], [1, 1]])
    assert report["primitive"] and report["witness_power"] == 1


def test_primitivity_production_matrix_not_primitive():
    m1 = [[c.eval(1) / 12 for c in row] for row in refdata.production_matrix_printed()]
    report = primitivity_check(m1)
    assert not report["primitive"]
    assert report["witness_power"] == (10 - 1) ** 2 + 1
    assert report["zero_pattern"]


def test_primitivity_rejects_negative_companion():
    """The literal reduced-recurrence companion has negative entries."""
    betas = [b.eval(1) for b in refdata.CN2_EULER_RECURRENCE_ORDER6]
    companion = [betas] + [
        [Fraction(1 if j == i else 0) for j in range(6)] for i in range(5)
    ]
    with pytest.raises(ValueError):
        primitivity_check(companion)


def test_primitivity_absolute_companion_is_primitive():
    betas = [abs(b.eval(1)) for b in refdata.CN2_EULER_RECURRENCE_ORDER6]
    total = sum(betas)
    companion = [[b / total for b in betas]] + [
        [Fraction(1 if j == i else 0) for j in range(6)] for i in range(5)
    ]
    report = primitivity_check(companion)
    assert report["primitive"]


def test_primitivity_cycle_not_primitive():
    cycle = [[1 if j == (i + 1) % 3 else 0 for j in range(3)] for i in range(3)]
    assert not primitivity_check(cycle)["primitive"]


def test_poly_divides():
    num, den = refdata.cn2_genus_gf_printed()
    f1 = BivarPoly.from_terms([(0, 1), (2, LaurentPoly.x(1, -4))])
    assert poly_divides(f1, den)
    assert not poly_divides(BivarPoly.from_terms([(0, 1), (1, 5)]), den)
