"""Exact arithmetic over Q: sparse Laurent polynomials, dense polynomials in a
second variable, rational generating functions, series reconstruction, and
exact matrix utilities.

No floating point is used anywhere in this module.
"""

from __future__ import annotations

from fractions import Fraction


def _q(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cannot coerce {value!r} to a rational")


class LaurentPoly:
    """Sparse Laurent polynomial in one variable with rational coefficients.

    Exponents may be any integers; zero coefficients are never stored.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        data: dict[int, Fraction] = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for e, c in items:
                c = _q(c)
                if c:
                    e = int(e)
                    s = data.get(e, Fraction(0)) + c
                    if s:
                        data[e] = s
                    elif e in data:
                        del data[e]
        self.terms = data

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def const(cls, c) -> "LaurentPoly":
        return cls({0: _q(c)})

    @classmethod
    def x(cls, exp: int = 1, coeff=1) -> "LaurentPoly":
        return cls({exp: _q(coeff)})

    @classmethod
    def from_coeffs(cls, coeffs) -> "LaurentPoly":
        """Dense list [c0, c1, ...] -> c0 + c1*x + ..."""
        return cls({i: c for i, c in enumerate(coeffs)})

    # -- inspection ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, exp: int) -> Fraction:
        return self.terms.get(exp, Fraction(0))

    def degree(self) -> int:
        if not self.terms:
            raise ValueError("degree of zero polynomial")
        return max(self.terms)

    def low(self) -> int:
        if not self.terms:
            raise ValueError("valuation of zero polynomial")
        return min(self.terms)

    def coeffs_dense(self) -> list[Fraction]:
        """Dense coefficient list; requires nonnegative exponents."""
        if not self.terms:
            return []
        if self.low() < 0:
            raise ValueError("negative exponent in dense conversion")
        out = [Fraction(0)] * (self.degree() + 1)
        for e, c in self.terms.items():
            out[e] = c
        return out

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.terms.values())

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        data = dict(self.terms)
        for e, c in other.terms.items():
            s = data.get(e, Fraction(0)) + c
            if s:
                data[e] = s
            elif e in data:
                del data[e]
        out = LaurentPoly.__new__(LaurentPoly)
        out.terms = data
        return out

    __radd__ = __add__

    def __neg__(self):
        out = LaurentPoly.__new__(LaurentPoly)
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _q(other)
            if not c:
                return LaurentPoly()
            out = LaurentPoly.__new__(LaurentPoly)
            out.terms = {e: v * c for e, v in self.terms.items()}
            return out
        other = self._coerce(other)
        data: dict[int, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                s = data.get(e, Fraction(0)) + c1 * c2
                if s:
                    data[e] = s
                elif e in data:
                    del data[e]
        out = LaurentPoly.__new__(LaurentPoly)
        out.terms = data
        return out

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        c = _q(scalar)
        out = LaurentPoly.__new__(LaurentPoly)
        out.terms = {e: v / c for e, v in self.terms.items()}
        return out

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = LaurentPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.const(other)
        raise TypeError(f"cannot combine LaurentPoly with {type(other)!r}")

    # -- evaluation and calculus ---------------------------------------

    def eval(self, point) -> Fraction:
        point = _q(point)
        total = Fraction(0)
        for e, c in self.terms.items():
            if e >= 0:
                total += c * point**e
            else:
                total += c / point ** (-e)
        return total

    def derivative(self) -> "LaurentPoly":
        return LaurentPoly({e - 1: c * e for e, c in self.terms.items() if e})

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by x^k."""
        out = LaurentPoly.__new__(LaurentPoly)
        out.terms = {e + k: c for e, c in self.terms.items()}
        return out

    def stretch(self, k: int) -> "LaurentPoly":
        """Substitute x -> x^k for a nonzero integer k."""
        if k == 0:
            raise ValueError("stretch factor must be nonzero")
        out = LaurentPoly.__new__(LaurentPoly)
        out.terms = {e * k: c for e, c in self.terms.items()}
        return out

    # -- formatting -----------------------------------------------------

    def __repr__(self):
        return f"LaurentPoly({self.pretty()!r})"

    def pretty(self, var: str = "x") -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms):
            c = self.terms[e]
            if e == 0:
                part = str(c)
            else:
                xs = var if e == 1 else f"{var}^{e}"
                if c == 1:
                    part = xs
                elif c == -1:
                    part = f"-{xs}"
                else:
                    part = f"{c}*{xs}"
            parts.append(part)
        text = " + ".join(parts)
        return text.replace("+ -", "- ")


def parse_poly(text: str, var: str = "x") -> LaurentPoly:
    """Parse the pretty() format back into a polynomial."""
    text = text.strip().replace("- ", "+ -").replace("-" + var, "-1*" + var)
    if text in ("", "0"):
        return LaurentPoly()
    result = LaurentPoly()
    for chunk in text.split("+"):
        chunk = chunk.strip()
        if not chunk:
            continue
        if var in chunk:
            coeff_part, _, exp_part = chunk.partition(var)
            coeff_part = coeff_part.rstrip("*").strip()
            coeff = Fraction(coeff_part) if coeff_part else Fraction(1)
            exp_part = exp_part.lstrip("^").strip()
            exp = int(exp_part) if exp_part else 1
        else:
            coeff = Fraction(chunk)
            exp = 0
        result = result + LaurentPoly({exp: coeff})
    return result


class BivarPoly:
    """Polynomial in t with LaurentPoly (in x) coefficients, dense in t."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        coeffs = [c if isinstance(c, LaurentPoly) else LaurentPoly.const(c) for c in (coeffs or [])]
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        self.coeffs = coeffs

    @classmethod
    def zero(cls) -> "BivarPoly":
        return cls([])

    @classmethod
    def one(cls) -> "BivarPoly":
        return cls([LaurentPoly.const(1)])

    @classmethod
    def from_terms(cls, terms) -> "BivarPoly":
        """terms: iterable of (t_exponent, LaurentPoly-or-scalar)."""
        out: list[LaurentPoly] = []
        for te, c in terms:
            if te >= len(out):
                out.extend(LaurentPoly() for _ in range(te - len(out) + 1))
            out[te] = out[te] + (c if isinstance(c, LaurentPoly) else LaurentPoly.const(c))
        return cls(out)

    def is_zero(self) -> bool:
        return not self.coeffs

    def deg_t(self) -> int:
        if not self.coeffs:
            raise ValueError("degree of zero polynomial")
        return len(self.coeffs) - 1

    def coeff_t(self, k: int) -> LaurentPoly:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return LaurentPoly()

    def __add__(self, other):
        if not isinstance(other, BivarPoly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return BivarPoly([self.coeff_t(k) + other.coeff_t(k) for k in range(n)])

    def __sub__(self, other):
        if not isinstance(other, BivarPoly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return BivarPoly([self.coeff_t(k) - other.coeff_t(k) for k in range(n)])

    def __neg__(self):
        return BivarPoly([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, LaurentPoly)):
            return BivarPoly([c * other for c in self.coeffs])
        if not isinstance(other, BivarPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return BivarPoly()
        out = [LaurentPoly() for _ in range(len(self.coeffs) + len(other.coeffs) - 1)]
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return BivarPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, BivarPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def eval_x(self, x0) -> list[Fraction]:
        """Specialize x to a rational; returns dense t-coefficients."""
        return [c.eval(x0) for c in self.coeffs]

    def pretty(self, tvar: str = "t", xvar: str = "x") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            cs = c.pretty(xvar)
            if k == 0:
                parts.append(cs)
            else:
                ts = tvar if k == 1 else f"{tvar}^{k}"
                parts.append(f"({cs})*{ts}")
        return " + ".join(parts)

    def __repr__(self):
        return f"BivarPoly({self.pretty()!r})"


class SeriesPrefix:
    """Coefficients of t^1..t^N of a power series with LaurentPoly entries."""

    __slots__ = ("terms",)

    def __init__(self, terms):
        self.terms = [t if isinstance(t, LaurentPoly) else LaurentPoly.const(t) for t in terms]

    def __len__(self):
        return len(self.terms)

    def __getitem__(self, n: int) -> LaurentPoly:
        """Coefficient of t^n (1-based)."""
        if not 1 <= n <= len(self.terms):
            raise IndexError(f"series prefix has no term t^{n}")
        return self.terms[n - 1]

    def __iter__(self):
        return iter(self.terms)

    def __eq__(self, other):
        if not isinstance(other, SeriesPrefix):
            return NotImplemented
        return self.terms == other.terms


class RationalGF:
    """Quotient of two bivariate polynomials, denominator constant term 1."""

    __slots__ = ("num", "den")

    def __init__(self, num: BivarPoly, den: BivarPoly):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        c0 = den.coeff_t(0)
        if c0.terms.keys() == {0}:
            scale = c0.coeff(0)
            if scale != 1:
                num = num * Fraction(1, 1) * (Fraction(1) / scale)
                den = den * (Fraction(1) / scale)
        self.num = num
        self.den = den

    def series(self, n_terms: int) -> SeriesPrefix:
        """Expand to the coefficients of t^1..t^n_terms.

        Requires denominator constant term 1 (in t).
        """
        den0 = self.den.coeff_t(0)
        if den0 != LaurentPoly.const(1):
            raise ValueError("denominator constant term must be 1 for expansion")
        coeffs: list[LaurentPoly] = [LaurentPoly() for _ in range(n_terms + 1)]
        for n in range(n_terms + 1):
            acc = self.num.coeff_t(n)
            for j in range(1, min(n, self.den.deg_t()) + 1):
                acc = acc - self.den.coeff_t(j) * coeffs[n - j]
            coeffs[n] = acc
        if not coeffs[0].is_zero():
            raise ValueError("series has a nonzero constant term; prefix starts at t^1")
        return SeriesPrefix(coeffs[1:])

    def equal_cross_mult(self, other: "RationalGF") -> bool:
        return self.num * other.den == other.num * self.den

    def __repr__(self):
        return f"RationalGF(({self.num.pretty()}) / ({self.den.pretty()}))"


def poly_arith(a: LaurentPoly, b, op: str):
    """Dispatch basic polynomial arithmetic by name (CLI surface)."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "eval_at":
        return a.eval(b)
    raise ValueError(f"unknown op {op!r}")


# ---------------------------------------------------------------------------
# Linear algebra over Q (dense, exact)
# ---------------------------------------------------------------------------


def solve_exact(rows: list[list[Fraction]], rhs: list[Fraction]):
    """Solve an (overdetermined) linear system exactly by Gaussian elimination.

    Returns the solution vector if the system is consistent and has a unique
    solution, the string "inconsistent" if no solution exists, and
    "underdetermined" if solutions exist but are not unique.
    """
    m = len(rows)
    if m == 0:
        return []
    n = len(rows[0])
    aug = [list(row) + [r] for row, r in zip(rows, rhs)]
    pivots: list[int] = []
    r = 0
    for col in range(n):
        pivot_row = None
        for i in range(r, m):
            if aug[i][col]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        aug[r], aug[pivot_row] = aug[pivot_row], aug[r]
        row_r = aug[r]
        pv = row_r[col]
        if pv != 1:
            for k in range(col, n + 1):
                if row_r[k]:
                    row_r[k] /= pv
        for i in range(m):
            row_i = aug[i]
            if i != r and row_i[col]:
                factor = row_i[col]
                for k in range(col, n + 1):
                    v = row_r[k]
                    if v:
                        row_i[k] -= factor * v
        pivots.append(col)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if aug[i][n]:
            return "inconsistent"
    if len(pivots) < n:
        return "underdetermined"
    sol = [Fraction(0)] * n
    for i, col in enumerate(pivots):
        sol[col] = aug[i][n]
    return sol


def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = a[i][0] * b[0][j]
            for p in range(1, k):
                acc = acc + a[i][p] * b[p][j]
            row.append(acc)
        out.append(row)
    return out


def matrix_charpoly(matrix: list[list[LaurentPoly]]) -> BivarPoly:
    """Characteristic polynomial det(lambda*I - M) of a square matrix over Q[x].

    Returned as a BivarPoly whose t-variable plays the role of lambda.
    Computed by the Faddeev-LeVerrier recursion, which is exact over Q[x].
    """
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("matrix must be square")
    a = [[c if isinstance(c, LaurentPoly) else LaurentPoly.const(c) for c in row] for row in matrix]
    coeffs = [LaurentPoly() for _ in range(n + 1)]
    coeffs[n] = LaurentPoly.const(1)
    m_k = [[LaurentPoly() for _ in range(n)] for _ in range(n)]
    for k in range(1, n + 1):
        if k == 1:
            m_k = [row[:] for row in a]
        else:
            for i in range(n):
                m_k[i][i] = m_k[i][i] + coeffs[n - k + 1]
            m_k = mat_mul(a, m_k)
        trace = LaurentPoly()
        for i in range(n):
            trace = trace + m_k[i][i]
        coeffs[n - k] = trace * Fraction(-1, k)
    return BivarPoly(coeffs)


def poly_divides(d: BivarPoly, p: BivarPoly) -> bool:
    """Exact divisibility test of p by d in (Q[x])[t].

    Uses pseudo-division in t; requires the leading t-coefficient of d to be
    a nonzero constant or handles general leading coefficients by clearing.
    """
    if d.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if p.is_zero():
        return True
    if p.deg_t() < d.deg_t():
        return False
    rem = [c for c in p.coeffs]
    lead = d.coeffs[-1]
    dd = d.deg_t()
    while len(rem) - 1 >= dd and any(not c.is_zero() for c in rem):
        while rem and rem[-1].is_zero():
            rem.pop()
        if len(rem) - 1 < dd:
            break
        top = rem[-1]
        # divide top by lead exactly in Q[x]; fail -> not divisible
        quot = _laurent_div(top, lead)
        if quot is None:
            return False
        shift = len(rem) - 1 - dd
        for i, c in enumerate(d.coeffs):
            rem[shift + i] = rem[shift + i] - quot * c
    return all(c.is_zero() for c in rem)


def _laurent_div(a: LaurentPoly, b: LaurentPoly):
    """Exact division of Laurent polynomials; None if not divisible."""
    if b.is_zero():
        raise ZeroDivisionError
    if a.is_zero():
        return LaurentPoly()
    # long division on the polynomial parts after shifting both to valuation 0
    sa, sb = a.low(), b.low()
    da = [a.coeff(sa + i) for i in range(a.degree() - sa + 1)]
    db = [b.coeff(sb + i) for i in range(b.degree() - sb + 1)]
    if len(da) < len(db):
        return None
    out = [Fraction(0)] * (len(da) - len(db) + 1)
    rem = da[:]
    for k in range(len(out) - 1, -1, -1):
        c = rem[k + len(db) - 1] / db[-1]
        out[k] = c
        if c:
            for i, bc in enumerate(db):
                rem[k + i] -= c * bc
    if any(rem):
        return None
    return LaurentPoly({k + sa - sb: c for k, c in enumerate(out) if c})


def primitivity_check(matrix) -> dict:
    """Test primitivity of an entrywise-nonnegative square matrix.

    Tests positivity of powers up to the Wielandt bound (n-1)^2 + 1.  The
    report carries either the first all-positive power or the zero pattern
    of the bound power.  Positivity patterns are tracked as row bitmasks;
    once the pattern sequence revisits a state without reaching the all-ones
    pattern, no later power can be positive.
    """
    n = len(matrix)
    base = []
    for row in matrix:
        if len(row) != n:
            raise ValueError("matrix must be square")
        bits = 0
        for j, c in enumerate(row):
            if isinstance(c, LaurentPoly):
                raise TypeError("primitivity check expects a numeric matrix")
            value = _q(c)
            if value < 0:
                raise ValueError("negative entry in primitivity check")
            if value > 0:
                bits |= 1 << j
        base.append(bits)
    bound = (n - 1) ** 2 + 1
    full = (1 << n) - 1
    power = list(base)
    seen = {tuple(power)}
    cycled = False
    for k in range(1, bound + 1):
        if all(r == full for r in power):
            return {"primitive": True, "witness_power": k, "bound": bound}
        if k == bound:
            break
        power = _bool_mul_bits(power, base, n)
        key = tuple(power)
        if key in seen:
            cycled = True
            break
        seen.add(key)
    if not cycled:
        final = power
    else:
        # pattern at the Wielandt bound via exponentiation by squaring
        final = _bool_power_bits(base, bound, n)
    zeros = [(i, j) for i in range(n) for j in range(n) if not final[i] >> j & 1]
    return {"primitive": False, "witness_power": bound, "bound": bound, "zero_pattern": zeros}


def _bool_mul_bits(a, b, n):
    out = []
    for row in a:
        acc = 0
        r = row
        while r:
            j = (r & -r).bit_length() - 1
            acc |= b[j]
            r &= r - 1
        out.append(acc)
    return out


def _bool_power_bits(base, exponent, n):
    result = [1 << i for i in range(n)]
    power = list(base)
    e = exponent
    while e:
        if e & 1:
            result = _bool_mul_bits(result, power, n)
        power = _bool_mul_bits(power, power, n)
        e >>= 1
    return result


# ---------------------------------------------------------------------------
# Series reconstruction and linear recurrences
# ---------------------------------------------------------------------------


class ReconstructionError(ValueError):
    pass


def reconstruct_rational_gf(
    prefix: SeriesPrefix,
    p_max: int,
    q_max: int,
    guard: int = 3,
    x_deg_start: int = 2,
) -> RationalGF:
    """Recover P(t,x)/Q(t,x) from a series prefix by exact linear solving.

    The denominator is normalized to Q(0,x) = 1.  Degrees are searched by
    iterative deepening in the t-degree of Q, and for each candidate degree
    the x-degree cap on the unknown coefficients is raised geometrically.
    The final `guard` terms of the prefix are excluded from the solve and
    must be reproduced exactly by the result.
    """
    n_terms = len(prefix)
    if n_terms < p_max + q_max + guard:
        raise ReconstructionError(
            f"prefix of length {n_terms} too short for p_max={p_max}, q_max={q_max}, guard={guard}"
        )
    usable = n_terms - guard
    min_exp = 0
    for term in prefix:
        if term.terms:
            min_exp = min(min_exp, term.low())
    if min_exp < 0:
        raise ReconstructionError("series coefficients must have nonnegative exponents")
    x_deg_max = max(x_deg_start, max((t.degree() for t in prefix if t.terms), default=0))

    for q_deg in range(0, q_max + 1):
        p_deg = min(p_max, usable - q_deg)
        if p_deg < 0:
            continue
        if not _feasible_at_points(prefix, p_deg, q_deg, usable):
            continue
        x_cap = min(x_deg_start, x_deg_max)
        while True:
            # evaluation/interpolation candidate first (cheap), validated by
            # the guard re-expansion; exact solve as fallback
            gf = _try_interpolate(prefix, p_deg, q_deg, x_cap, usable)
            if gf is not None and _check_guard(gf, prefix):
                return gf
            if x_cap >= x_deg_max:
                gf = _try_reconstruct(prefix, p_deg, q_deg, x_cap, usable)
                if gf is not None and _check_guard(gf, prefix):
                    return gf
                break
            x_cap = min(2 * x_cap, x_deg_max)
    raise ReconstructionError(
        f"no rational form with deg_t(P) <= {p_max}, deg_t(Q) <= {q_max} matches the series"
    )


_PRESCREEN_POINTS = (Fraction(3), Fraction(-5, 2))


def _feasible_at_points(prefix, p_deg, q_deg, usable) -> bool:
    """Cheap necessary test: the Pade system must stay solvable after
    specializing x to fixed rational points."""
    for x0 in _PRESCREEN_POINTS:
        values = [term.eval(x0) for term in prefix]
        rows = []
        rhs = []
        for n in range(p_deg + 1, usable + 1):
            rows.append([values[n - 1 - j] if n - j >= 1 else Fraction(0) for j in range(1, q_deg + 1)])
            rhs.append(-values[n - 1])
        sol = solve_exact(rows, rhs)
        if sol == "inconsistent":
            return False
    return True


def _newton_interpolate(xs: list[Fraction], ys: list[Fraction]) -> list[Fraction]:
    """Exact monomial coefficients of the interpolating polynomial."""
    n = len(xs)
    coeffs = list(ys)
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            coeffs[i] = (coeffs[i] - coeffs[i - 1]) / (xs[i] - xs[i - level])
    # expand Newton form to monomials
    poly = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        carry = [Fraction(0)] * n
        for k in range(n - 1):
            carry[k + 1] += poly[k]
            carry[k] -= poly[k] * xs[i]
        poly = carry
        poly[0] += coeffs[i]
    return poly


def _try_interpolate(prefix, p_deg, q_deg, x_cap, usable):
    """Candidate denominator via pointwise solves and exact interpolation.

    Solves the specialized linear system at x_cap + 1 rational points and
    interpolates the denominator t-coefficients as polynomials in x of
    degree <= x_cap.  Returns None when any point solve fails; the caller
    validates any candidate against the full prefix and guard terms.
    """
    if q_deg == 0:
        return _try_reconstruct(prefix, p_deg, q_deg, x_cap, usable)
    points: list[Fraction] = []
    solutions: list[list[Fraction]] = []
    candidate = 1
    while len(points) < x_cap + 1:
        if candidate > 4 * (x_cap + 4):
            return None
        x0 = Fraction(candidate)
        candidate += 1
        values = [term.eval(x0) for term in prefix]
        rows = []
        rhs = []
        for n in range(p_deg + 1, usable + 1):
            rows.append([values[n - 1 - j] if n - j >= 1 else Fraction(0) for j in range(1, q_deg + 1)])
            rhs.append(-values[n - 1])
        sol = solve_exact(rows, rhs)
        if sol == "inconsistent":
            return None
        if isinstance(sol, str):
            continue  # degenerate point; take another
        points.append(x0)
        solutions.append(sol)
    den_coeffs = [LaurentPoly.const(1)]
    for j in range(q_deg):
        mono = _newton_interpolate(points, [sol[j] for sol in solutions])
        den_coeffs.append(LaurentPoly({k: c for k, c in enumerate(mono) if c}))
    den = BivarPoly(den_coeffs)
    num_coeffs = [LaurentPoly()]
    for n in range(1, p_deg + 1):
        acc = prefix[n]
        for j in range(1, min(q_deg, n - 1) + 1):
            acc = acc + den.coeff_t(j) * prefix[n - j]
        num_coeffs.append(acc)
    return RationalGF(BivarPoly(num_coeffs), den)


def _try_reconstruct(prefix, p_deg, q_deg, x_cap, usable):
    """Attempt a fixed-degree reconstruction; None on failure."""
    unknown_count = q_deg * (x_cap + 1)
    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    # equations: [t^n] (Q*C) = 0 for p_deg < n <= usable, per power of x
    for n in range(p_deg + 1, usable + 1):
        max_xdeg = 0
        involved = [prefix[n - j] for j in range(1, q_deg + 1) if n - j >= 1]
        for c in involved + [prefix[n]]:
            if c.terms:
                max_xdeg = max(max_xdeg, c.degree())
        for xe in range(0, max_xdeg + x_cap + 1):
            row = [Fraction(0)] * unknown_count
            any_nonzero = False
            for j in range(1, q_deg + 1):
                if n - j < 1:
                    continue
                c = prefix[n - j]
                for k in range(0, x_cap + 1):
                    v = c.coeff(xe - k)
                    if v:
                        row[(j - 1) * (x_cap + 1) + k] = v
                        any_nonzero = True
            target = -prefix[n].coeff(xe)
            if any_nonzero or target:
                rows.append(row)
                rhs.append(target)
    if unknown_count == 0:
        if any(v for v in rhs):
            return None
        den = BivarPoly.one()
    else:
        sol = solve_exact(rows, rhs)
        if isinstance(sol, str):
            return None
        den_coeffs = [LaurentPoly.const(1)]
        for j in range(1, q_deg + 1):
            den_coeffs.append(
                LaurentPoly({k: sol[(j - 1) * (x_cap + 1) + k] for k in range(x_cap + 1)})
            )
        den = BivarPoly(den_coeffs)
    num_coeffs = [LaurentPoly()]
    for n in range(1, p_deg + 1):
        acc = prefix[n]
        for j in range(1, min(q_deg, n - 1) + 1):
            acc = acc + den.coeff_t(j) * prefix[n - j]
        num_coeffs.append(acc)
    num = BivarPoly(num_coeffs)
    return RationalGF(num, den)


def _check_guard(gf: RationalGF, prefix: SeriesPrefix) -> bool:
    try:
        regen = gf.series(len(prefix))
    except ValueError:
        return False
    return regen == prefix


def recurrence_from_denominator(gf: RationalGF) -> list[LaurentPoly]:
    """Extract the linear recurrence encoded by the denominator.

    With Q(t,x) = 1 - sum_j b_j(x) t^j, the series coefficients satisfy
    c_n = sum_j b_j c_{n-j} for n beyond the numerator degree.
    """
    den = gf.den
    if den.coeff_t(0) != LaurentPoly.const(1):
        raise ValueError("denominator constant term must be 1")
    return [-den.coeff_t(j) for j in range(1, den.deg_t() + 1)]


def extend_series(recurrence: list[LaurentPoly], init: SeriesPrefix, n_terms: int) -> SeriesPrefix:
    """Extend initial terms t^1..t^k with c_n = sum_j b_j c_{n-j} up to t^N."""
    order = len(recurrence)
    if len(init) < order:
        raise ValueError(f"need at least {order} initial terms, got {len(init)}")
    terms = list(init.terms)
    for n in range(len(terms) + 1, n_terms + 1):
        acc = LaurentPoly()
        for j, b in enumerate(recurrence, start=1):
            acc = acc + b * terms[n - 1 - j]
        terms.append(acc)
    return SeriesPrefix(terms[:n_terms])
