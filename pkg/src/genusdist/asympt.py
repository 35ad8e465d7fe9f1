"""Singularity analysis of rational generating functions (dominant root in t,
drift and diffusivity of the coefficient law), distribution statistics, and
normality / local-limit checks.

Exact rational arithmetic is used whenever the dominant root is rational at
the evaluation point; elsewhere mpmath with at least 30 significant digits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .polyalg import BivarPoly, LaurentPoly

MP_DPS = 40
TIE_TOLERANCE = mpmath.mpf("1e-12")


class SingularityError(ValueError):
    pass


@dataclass
class SingularityReport:
    x0: Fraction
    root: object  # Fraction when exact, else mpmath.mpf
    exact: bool
    simple: bool
    unique_minimum: bool
    separation: float
    mean: object | None = None
    variance: object | None = None


def _poly_coeffs_at(den: BivarPoly, x0: Fraction) -> list[Fraction]:
    coeffs = den.eval_x(x0)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if len(coeffs) <= 1:
        raise SingularityError("denominator is constant in t at this point")
    return coeffs


def _rational_roots(coeffs: list[Fraction]) -> list[tuple[Fraction, int]]:
    """Rational roots with multiplicities; factors them out of coeffs in place."""
    lcm = 1
    for c in coeffs:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in coeffs]
    while ints and ints[-1] == 0:
        ints.pop()
    roots: list[tuple[Fraction, int]] = []
    shift = 0
    while ints and ints[0] == 0:
        ints = ints[1:]
        shift += 1
    if shift:
        roots.append((Fraction(0), shift))

    def divisors(n):
        n = abs(n)
        out = set()
        d = 1
        while d * d <= n:
            if n % d == 0:
                out.add(d)
                out.add(n // d)
            d += 1
        return out

    changed = True
    while changed and len(ints) > 1:
        changed = False
        a0, ak = ints[0], ints[-1]
        for p in sorted(divisors(a0)):
            for q in sorted(divisors(ak)):
                for sign in (1, -1):
                    cand = Fraction(sign * p, q)
                    value = Fraction(0)
                    for c in reversed(ints):
                        value = value * cand + c
                    if value == 0:
                        mult = 0
                        while True:
                            quot, rem = _divide_linear(ints, cand)
                            if rem != 0:
                                break
                            ints = quot
                            mult += 1
                            if len(ints) <= 1:
                                break
                        roots.append((cand, mult))
                        changed = True
                        break
                if changed:
                    break
            if changed:
                break
    # return remaining polynomial too
    return roots, ints


def _divide_linear(int_coeffs: list[int], root: Fraction):
    """Divide sum c_k t^k by (t - root); returns (quotient_coeffs, remainder)."""
    p, q = root.numerator, root.denominator
    # synthetic division over rationals, keep exact
    coeffs = [Fraction(c) for c in int_coeffs]
    n = len(coeffs) - 1
    out = [Fraction(0)] * n
    acc = coeffs[n]
    for k in range(n - 1, -1, -1):
        out[k] = acc
        acc = coeffs[k] + acc * root
    rem = acc
    if rem != 0:
        return None, rem
    # clear denominators back to integers when possible
    lcm = 1
    for c in out:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    return [int(c * lcm) for c in out], Fraction(0)


def _all_roots(coeffs: list[Fraction]):
    """All roots in t: exact rationals first, then certified numerics."""
    rational, remaining = _rational_roots(list(coeffs))
    numeric = []
    if len(remaining) > 1:
        with mpmath.workdps(MP_DPS):
            poly = [mpmath.mpf(c) for c in reversed(remaining)]
            numeric = mpmath.polyroots(poly, maxsteps=200, extraprec=120)
    return rational, list(numeric)


def dominant_root(den: BivarPoly, x0) -> SingularityReport:
    """Minimum-modulus root in t of the denominator at x = x0."""
    x0 = Fraction(x0)
    if x0 <= 0:
        raise SingularityError("evaluation point must be positive")
    coeffs = _poly_coeffs_at(den, x0)
    rational, numeric = _all_roots(coeffs)
    entries = []
    for r, mult in rational:
        entries.append((abs(mpmath.mpf(r.numerator) / r.denominator), r, True, mult))
    for z in numeric:
        entries.append((abs(z), z, False, 1))
    if not entries:
        raise SingularityError("no roots in t")
    entries.sort(key=lambda e: e[0])
    best = entries[0]
    if len(entries) > 1:
        gap = entries[1][0] - best[0]
        separation = float(gap / max(best[0], mpmath.mpf(1)))
        unique = gap > TIE_TOLERANCE * max(best[0], mpmath.mpf(1))
    else:
        separation = float("inf")
        unique = True
    if not unique:
        raise SingularityError(
            f"tie in minimum modulus within tolerance: |r1|={best[0]}, |r2|={entries[1][0]}"
        )
    simple = best[3] == 1
    root = best[1] if best[2] else +best[1]
    return SingularityReport(
        x0=x0, root=root, exact=best[2], simple=simple,
        unique_minimum=unique, separation=separation,
    )


def _partials(den: BivarPoly):
    """First and second partial derivative polynomials of B(t, x)."""
    coeffs = den.coeffs
    b_t = BivarPoly([coeffs[k] * k for k in range(1, len(coeffs))])
    b_x = BivarPoly([c.derivative() for c in coeffs])
    b_tt = BivarPoly([b_t.coeffs[k] * k for k in range(1, len(b_t.coeffs))]) if b_t.coeffs else BivarPoly()
    b_tx = BivarPoly([c.derivative() for c in b_t.coeffs])
    b_xx = BivarPoly([c.derivative() for c in b_x.coeffs])
    return b_t, b_x, b_tt, b_tx, b_xx


def _eval_bivar(p: BivarPoly, t, x):
    total = None
    for k, c in enumerate(p.coeffs):
        cx = c.eval(x) if isinstance(x, Fraction) and isinstance(t, Fraction) else _eval_laurent_mp(c, x)
        term = cx * t**k
        total = term if total is None else total + term
    if total is None:
        return Fraction(0) if isinstance(t, Fraction) else mpmath.mpf(0)
    return total


def _eval_laurent_mp(c: LaurentPoly, x):
    total = mpmath.mpf(0)
    for e, v in c.terms.items():
        total += mpmath.mpf(v.numerator) / v.denominator * mpmath.power(x, e)
    return total


def mean_variance_at(den: BivarPoly, x0) -> SingularityReport:
    """Drift and diffusivity of the coefficient law at x = x0.

    With r(x) the dominant root of the denominator, mu = -x (ln r)'(x) and
    sigma^2 = x mu'(x), computed by implicit differentiation:
        r'  = -B_x / B_t
        r'' = -(B_tt r'^2 + 2 B_tx r' + B_xx) / B_t
    evaluated at (r(x0), x0).  Exact when r(x0) is rational.  A central
    finite-difference cross-check must agree to 1e-8 relative.
    """
    report = dominant_root(den, x0)
    if not report.simple:
        raise SingularityError("dominant root is not simple")
    x0 = report.x0
    b_t, b_x, b_tt, b_tx, b_xx = _partials(den)
    if report.exact:
        r = report.root
        bt = _eval_bivar(b_t, r, x0)
        if bt == 0:
            raise SingularityError("B_t vanishes at the dominant root")
        bx = _eval_bivar(b_x, r, x0)
        rp = -bx / bt
        btt = _eval_bivar(b_tt, r, x0)
        btx = _eval_bivar(b_tx, r, x0)
        bxx = _eval_bivar(b_xx, r, x0)
        rpp = -(btt * rp * rp + 2 * btx * rp + bxx) / bt
        mean = -x0 * rp / r
        variance = -x0 * rp / r - x0 * x0 * (rpp * r - rp * rp) / (r * r)
    else:
        with mpmath.workdps(MP_DPS):
            r = report.root
            x = mpmath.mpf(x0.numerator) / x0.denominator
            bt = _eval_bivar(b_t, r, x)
            if abs(bt) < mpmath.mpf("1e-30"):
                raise SingularityError("B_t vanishes at the dominant root")
            bx = _eval_bivar(b_x, r, x)
            rp = -bx / bt
            btt = _eval_bivar(b_tt, r, x)
            btx = _eval_bivar(b_tx, r, x)
            bxx = _eval_bivar(b_xx, r, x)
            rpp = -(btt * rp * rp + 2 * btx * rp + bxx) / bt
            mean = -x * rp / r
            variance = -x * rp / r - x * x * (rpp * r - rp * rp) / (r * r)
    numeric_mu, numeric_var = _finite_difference_check(den, x0)
    mu_f = float(mean)
    var_f = float(variance)
    if abs(numeric_mu - mu_f) > 1e-8 * max(1.0, abs(mu_f)):
        raise SingularityError(f"finite-difference mean check failed: {numeric_mu} vs {mu_f}")
    if abs(numeric_var - var_f) > 1e-8 * max(1.0, abs(var_f)):
        raise SingularityError(f"finite-difference variance check failed: {numeric_var} vs {var_f}")
    report.mean = mean
    report.variance = variance
    return report


def _root_near(den: BivarPoly, x, near):
    coeffs = [_eval_laurent_mp(c, x) for c in den.coeffs]
    while coeffs and abs(coeffs[-1]) == 0:
        coeffs.pop()
    roots = mpmath.polyroots([c for c in reversed(coeffs)], maxsteps=200, extraprec=120)
    return min(roots, key=lambda z: abs(z - near))


def _finite_difference_check(den: BivarPoly, x0: Fraction):
    """Central-difference mu and sigma^2 at x0 from direct root tracking."""
    with mpmath.workdps(MP_DPS):
        x = mpmath.mpf(x0.numerator) / x0.denominator
        h = mpmath.mpf("1e-9") * max(1, abs(x))

        def mu_at(xx):
            base = dominant_root(den, x0).root
            base = mpmath.mpf(base.numerator) / base.denominator if isinstance(base, Fraction) else base
            r_p = _root_near(den, xx + h, base)
            r_m = _root_near(den, xx - h, base)
            return -xx * (mpmath.log(abs(r_p)) - mpmath.log(abs(r_m))) / (2 * h)

        mu = mu_at(x)
        h2 = mpmath.mpf("1e-7") * max(1, abs(x))
        base = dominant_root(den, x0).root
        base = mpmath.mpf(base.numerator) / base.denominator if isinstance(base, Fraction) else base

        def mu_near(xx):
            rr_p = _root_near(den, xx + h, base)
            rr_m = _root_near(den, xx - h, base)
            return -xx * (mpmath.log(abs(rr_p)) - mpmath.log(abs(rr_m))) / (2 * h)

        var = x * (mu_near(x + h2) - mu_near(x - h2)) / (2 * h2)
        return float(mu), float(var)


# ---------------------------------------------------------------------------
# Distribution statistics
# ---------------------------------------------------------------------------


@dataclass
class DistStats:
    total: Fraction
    mean: Fraction
    variance: Fraction
    support_min: int
    support_max: int

    def normalized(self, poly: LaurentPoly) -> dict[int, Fraction]:
        return {e: c / self.total for e, c in sorted(poly.terms.items())}


def dist_stats(poly: LaurentPoly) -> DistStats:
    """Mean and variance of the normalized coefficient distribution."""
    if poly.is_zero():
        raise ValueError("zero polynomial has no distribution")
    if any(c < 0 for c in poly.terms.values()):
        raise ValueError("negative coefficient in a distribution polynomial")
    total = poly.eval(1)
    mean = Fraction(sum(Fraction(e) * c for e, c in poly.terms.items()), 1) / total
    second = sum(Fraction(e * e) * c for e, c in poly.terms.items()) / total
    return DistStats(
        total=total,
        mean=mean,
        variance=second - mean * mean,
        support_min=poly.low(),
        support_max=poly.degree(),
    )


def _normal_cdf(z: float) -> float:
    return 0.5 * (1.0 + math.erf(z / math.sqrt(2.0)))


def ks_to_normal(poly: LaurentPoly, mean: float, variance: float) -> float:
    """Sup distance between the coefficient CDF and a normal CDF.

    The cumulative weight up to k is compared against the normal CDF at the
    continuity-corrected point k + 1/2.
    """
    if variance <= 0:
        raise ValueError("variance must be positive")
    sd = math.sqrt(variance)
    total = poly.eval(1)
    acc = Fraction(0)
    worst = 0.0
    for e in sorted(poly.terms):
        acc += poly.terms[e]
        emp = float(acc / total)
        ref = _normal_cdf((e + 0.5 - mean) / sd)
        worst = max(worst, abs(emp - ref))
    return worst


def tv_distance(p: LaurentPoly, q: LaurentPoly) -> Fraction:
    """Total-variation distance between two normalized coefficient laws."""
    for poly in (p, q):
        if poly.is_zero():
            raise ValueError("zero polynomial has no distribution")
        if any(c < 0 for c in poly.terms.values()):
            raise ValueError("negative coefficient in a distribution polynomial")
    tp, tq = p.eval(1), q.eval(1)
    exps = set(p.terms) | set(q.terms)
    return sum(abs(p.coeff(e) / tp - q.coeff(e) / tq) for e in exps) / 2


def local_limit_estimate(n: int, g: int) -> dict:
    """Saddle-point estimate of the genus-g count for the doubled cycle on n
    vertices, evaluated in log space.

    With t = 1/(1 - 2g/n):
        count ~ (t/3) * sqrt(2 t (t^2-1) / (pi n)) * (3/(t^2-1))^g * (2(1+t))^n
    Valid for g/n strictly inside (0, 1/2).
    """
    if n <= 0:
        raise ValueError("n must be positive")
    ratio = Fraction(g, n)
    if not Fraction(0) < ratio < Fraction(1, 2):
        raise ValueError("g/n must lie strictly inside (0, 1/2)")
    t = 1.0 / (1.0 - 2.0 * g / n)
    log_value = (
        math.log(t / 3.0)
        + 0.5 * (math.log(2.0 * t * (t * t - 1.0)) - math.log(math.pi * n))
        + g * (math.log(3.0) - math.log(t * t - 1.0))
        + n * math.log(2.0 * (1.0 + t))
    )
    return {"t": t, "log_value": log_value}


def local_limit_relative_error(n: int, g: int, exact_count: int) -> float:
    """|estimate/exact - 1| computed in log space for big integer counts."""
    est = local_limit_estimate(n, g)
    log_exact = _log_big(exact_count)
    return abs(math.expm1(est["log_value"] - log_exact))


def _log_big(n: int) -> float:
    if n <= 0:
        raise ValueError("count must be positive")
    bits = n.bit_length()
    if bits <= 900:
        return math.log(n)
    shift = bits - 900
    return math.log(n >> shift) + shift * math.log(2.0)


def normality_report(terms, ns, mu: float, sigma2: float) -> list[dict]:
    """Per-n statistics and KS distances against N(mu*n, sigma2*n).

    terms: 1-based indexable of LaurentPoly (series prefix or list).
    """
    rows = []
    for n in ns:
        poly = terms[n] if not isinstance(terms, list) else terms[n - 1]
        stats = dist_stats(poly)
        ks = ks_to_normal(poly, mu * n, sigma2 * n)
        rows.append(
            {
                "n": n,
                "mean": float(stats.mean),
                "variance": float(stats.variance),
                "ks": ks,
            }
        )
    return rows
