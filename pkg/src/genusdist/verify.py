"""Self-contained fixture battery behind the `verify` CLI subcommand.

Each check recomputes a published or derived value from scratch and compares
exactly.  Checks tagged "defect" compare against published values that fail
three independent computations; they are expected to differ and are reported
as informational, not as failures.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction

from . import refdata
from .asympt import dominant_root, local_limit_relative_error, mean_variance_at, ks_to_normal
from .distributions import (
    cn2_euler_from_tables,
    cn2_recurrences,
    diff_tables_report,
    transition_tables,
)
from .graphcore import (
    GluingSpec,
    build_named,
    euler_distribution_oracle,
    genus_distribution_oracle,
)
from .polyalg import matrix_charpoly, primitivity_check, parse_poly
from .transfer import build_family_graph, family_genus_poly, make_family


@dataclass
class CheckResult:
    name: str
    ok: bool
    informational: bool
    detail: str
    seconds: float


def _run(name, fn, informational=False):
    start = time.time()
    try:
        ok, detail = fn()
    except Exception as exc:  # pragma: no cover - surfaced in the report
        ok, detail = False, f"error: {exc}"
    return CheckResult(name, ok, informational, detail, time.time() - start)


def run_verify(full: bool = False, budget: int = 10**8) -> list[CheckResult]:
    checks = []

    def check_genus_oracle():
        fam = make_family(build_named("dipole", [2]), GluingSpec([(0, 1)]), "circular", "genus")
        for n in range(1, 7):
            g = build_family_graph(fam, n)
            if genus_distribution_oracle(g, budget).poly() != refdata.CN2_GENUS_INITIAL[n]:
                return False, f"mismatch at n={n}"
        return True, "oracle == published genus values, n=1..6"

    checks.append(_run("genus oracle vs published, doubled cycles n=1..6", check_genus_oracle))

    def check_euler_oracle():
        details = []
        ok = True
        for n in range(1, 5):
            g = build_named("doubled_cycle", [n])
            mine = euler_distribution_oracle(g, budget).poly()
            published = refdata.CN2_EULER_INITIAL_PRINTED[n]
            corrected = refdata.CN2_EULER_INITIAL[n]
            if mine != corrected:
                return False, f"oracle disagrees with the regenerated value at n={n}"
            if mine != published:
                details.append(f"n={n}: published value differs (documented defect)")
        return ok, "; ".join(details) or "oracle == published, n=1..4"

    checks.append(_run("euler oracle vs published, doubled cycles n=1..4", check_euler_oracle))

    def check_recurrences():
        genus = cn2_recurrences("genus", 12)
        for n in range(1, 7):
            if genus[n] != refdata.CN2_GENUS_INITIAL[n]:
                return False, f"genus recurrence initial mismatch at n={n}"
        e10 = cn2_recurrences("euler", 30, "order10")
        e6 = cn2_recurrences("euler", 30, "order6")
        if list(e10) != list(e6):
            return False, "order-10 and reduced order-6 recurrences disagree"
        return True, "genus initials reproduced; euler order-10 == order-6 up to n=30"

    checks.append(_run("recurrence fidelity", check_recurrences))

    def check_transfer():
        d2 = build_named("dipole", [2])
        for mode in ("genus", "euler"):
            fam = make_family(d2, GluingSpec([(0, 1)]), "circular", mode)
            series = cn2_recurrences(mode, 12)
            for n in range(1, 13):
                if family_genus_poly(fam, n) != series[n]:
                    return False, f"{mode} engine vs recurrence mismatch at n={n}"
        return True, "engine == recurrences for n <= 12, both modes"

    checks.append(_run("transfer engine vs recurrences", check_transfer))

    def check_grid():
        from .transfer import grid3_family

        fam = grid3_family()
        g = build_family_graph(fam, 1)
        oracle = genus_distribution_oracle(g, budget).poly()
        want = parse_poly("2 + 58*x + 36*x^2")
        if oracle != want:
            return False, f"3x3 grid oracle {oracle.pretty()} != 2 + 58x + 36x^2"
        if family_genus_poly(fam, 1) != want:
            return False, "engine disagrees on the 3x3 grid"
        return True, "3x3 grid == 2(18x^2 + 29x + 1), oracle and engine"

    checks.append(_run("grid cross-check (3x3)", check_grid))

    def check_asympt():
        _, b_genus = refdata.cn2_genus_gf_printed()
        rep = mean_variance_at(b_genus, 1)
        if (rep.mean, rep.variance) != (Fraction(1, 4), Fraction(3, 32)):
            return False, f"genus moments {rep.mean}, {rep.variance}"
        rep2 = mean_variance_at(refdata.cn2_euler_reduced_denominator(), 1)
        if (rep2.mean, rep2.variance) != (Fraction(5, 7), Fraction(78, 343)):
            return False, f"euler moments {rep2.mean}, {rep2.variance}"
        return True, "(1/4, 3/32) and (5/7, 78/343), exact"

    checks.append(_run("asymptotic moments at x=1", check_asympt))

    def check_primitivity():
        m = refdata.production_matrix_printed()
        cp = matrix_charpoly(m)
        if cp.coeff_t(9) != parse_poly("-12 - 26*x"):
            return False, "lambda^9 coefficient mismatch"
        m1 = [[c.eval(1) for c in row] for row in m]
        coeffs = [c.eval(1) for c in cp.coeffs]
        # divisibility by (lambda - 12)^2: synthetic division twice
        for _ in range(2):
            acc = Fraction(0)
            out = []
            for c in reversed(coeffs):
                acc = acc * 12 + c
                out.append(acc)
            if acc != 0:
                return False, "(lambda - 12)^2 does not divide charpoly(M(1))"
            coeffs = list(reversed(out[:-1]))
        stochastic = [[v / 12 for v in row] for row in m1]
        report = primitivity_check(stochastic)
        if report["primitive"]:
            return False, "M(1)/12 unexpectedly primitive"
        return True, f"not primitive; zero pattern persists at power {report['witness_power']}"

    checks.append(_run("production matrix: charpoly and primitivity", check_primitivity))

    def check_tables():
        tables = transition_tables()
        for n in range(2, 11):
            if cn2_euler_from_tables(n, tables) != refdata.CN2_EULER_INITIAL[n]:
                return False, f"pipeline mismatch at n={n}"
        return True, "compose/close reproduces E_2..E_10 exactly"

    checks.append(_run("ten-type pipeline", check_tables))

    def check_diff():
        report = diff_tables_report()
        n_lines = len(report.splitlines()) - 1
        return True, f"{n_lines} published table entries differ from regenerated ones (expected)"

    checks.append(_run("published-vs-regenerated table diff", check_diff, informational=True))

    def check_local_limit():
        series = cn2_recurrences("genus", 400)
        exact = int(series[400].coeff(100))
        rel = local_limit_relative_error(400, 100, exact)
        return rel < 0.05, f"relative error {rel:.4f}"

    checks.append(_run("local limit at (n, g) = (400, 100)", check_local_limit))

    def check_normality():
        series = cn2_recurrences("genus", 300)
        ks300 = ks_to_normal(series[300], 300 / 4, 3 * 300 / 32)
        ks75 = ks_to_normal(series[75], 75 / 4, 3 * 75 / 32)
        if not (ks300 < 0.05 and ks300 < ks75):
            return False, f"genus KS {ks300:.4f} (n=300) vs {ks75:.4f} (n=75)"
        e_series = cn2_recurrences("euler", 300)
        eks300 = ks_to_normal(e_series[300], 5 * 300 / 7, 78 * 300 / 343)
        eks75 = ks_to_normal(e_series[75], 5 * 75 / 7, 78 * 75 / 343)
        if not (eks300 < 0.05 and eks300 < eks75):
            return False, f"euler KS {eks300:.4f} (n=300) vs {eks75:.4f} (n=75)"
        return True, f"genus KS {ks300:.4f}, euler KS {eks300:.4f} at n=300; both < 0.05 and decreasing"

    checks.append(_run("asymptotic normality (KS)", check_normality))

    if full:
        def check_gf_genus():
            from .transfer import family_rational_gf
            from .polyalg import RationalGF

            fam = make_family(build_named("dipole", [2]), GluingSpec([(0, 1)]), "circular", "genus")
            gf = family_rational_gf(fam, p_max=6, q_max=6)
            num, den = refdata.cn2_genus_gf_printed()
            return gf.equal_cross_mult(RationalGF(num, den)), "reconstructed == published A/B"

        checks.append(_run("genus generating function reconstruction", check_gf_genus))

    return checks


def format_report(results: list[CheckResult]) -> str:
    lines = []
    width = max(len(r.name) for r in results) + 2
    failures = 0
    for r in results:
        if r.informational:
            status = "NOTE"
        elif r.ok:
            status = "PASS"
        else:
            status = "FAIL"
            failures += 1
        lines.append(f"{status}  {r.name:<{width}} {r.seconds:6.1f}s  {r.detail}")
    lines.append(
        f"{len(results)} checks, {failures} failures"
        + ("" if failures == 0 else " (see detail column)")
    )
    return "\n".join(lines)
