"""Exact computational substrate: rationals, polynomials, rational functions.

Everything here is exact arithmetic over Q; no floating point is used
anywhere in this module.  Rationals are `fractions.Fraction` (always stored
reduced, denominator positive).  Multivariate polynomials are sparse dicts
mapping exponent tuples to nonzero Fractions, with a fixed ordered variable
tuple per polynomial; terms are ordered graded-lexicographically so printed
output is deterministic.  Univariate polynomials are dense coefficient lists
and are generic over their coefficient ring: coefficients may be Fractions
or MultiPolys, which is how resultants over a polynomial coefficient ring
are computed (Sylvester determinant, expansion by minors, no division).

Rational functions are pairs of MultiPolys reduced by rational content and
by common monomial factors only; representatives are not canonical, and
equality is decided by cross-multiplication, which keeps every check exact
without a multivariate gcd engine.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from .errors import DegreeMismatch, SingularSystem

Rational = Fraction

Scalar = Union[int, Fraction]


def rat(x) -> Fraction:
    """Coerce an int, string ("p/q") or Fraction to an exact Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def format_rational(x: Fraction) -> str:
    """Canonical "p/q" rendering (plain "p" when the denominator is 1)."""
    return str(Fraction(x))


def _grlex_key(exps: tuple) -> tuple:
    # graded lexicographic: compare total degree first, then the exponent
    # tuple itself; used descending for leading terms and printing
    return (sum(exps), exps)


class MultiPoly:
    """Sparse polynomial over Q in a fixed ordered tuple of variables."""

    __slots__ = ("vars", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[tuple, Scalar] | None = None):
        self.vars = tuple(variables)
        n = len(self.vars)
        clean: dict[tuple, Fraction] = {}
        if terms:
            for exps, c in terms.items():
                exps = tuple(exps)
                if len(exps) != n or any(e < 0 for e in exps):
                    raise ValueError(f"bad exponent tuple {exps} for variables {self.vars}")
                c = Fraction(c)
                if c:
                    clean[exps] = clean.get(exps, Fraction(0)) + c
                    if not clean[exps]:
                        del clean[exps]
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, variables: Sequence[str]) -> "MultiPoly":
        return cls(variables)

    @classmethod
    def const(cls, variables: Sequence[str], c) -> "MultiPoly":
        v = tuple(variables)
        return cls(v, {(0,) * len(v): Fraction(c)})

    @classmethod
    def var(cls, variables: Sequence[str], name: str) -> "MultiPoly":
        v = tuple(variables)
        i = v.index(name)
        e = [0] * len(v)
        e[i] = 1
        return cls(v, {tuple(e): Fraction(1)})

    @classmethod
    def monomial(cls, variables: Sequence[str], exps: Sequence[int], c=1) -> "MultiPoly":
        return cls(variables, {tuple(exps): Fraction(c)})

    # -- ring structure ----------------------------------------------------

    def _check_same_ring(self, other: "MultiPoly"):
        if self.vars != other.vars:
            raise ValueError(f"variable mismatch: {self.vars} vs {other.vars}")

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(self.vars, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(self.vars, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check_same_ring(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, Fraction(0)) + c
            if s:
                out[e] = s
            elif e in out:
                del out[e]
        res = MultiPoly.__new__(MultiPoly)
        res.vars = self.vars
        res.terms = out
        return res

    __radd__ = __add__

    def __neg__(self):
        res = MultiPoly.__new__(MultiPoly)
        res.vars = self.vars
        res.terms = {e: -c for e, c in self.terms.items()}
        return res

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(self.vars, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            res = MultiPoly.__new__(MultiPoly)
            res.vars = self.vars
            res.terms = {} if not c else {e: c * v for e, v in self.terms.items()}
            return res
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check_same_ring(other)
        out: dict[tuple, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, Fraction(0)) + c1 * c2
                if s:
                    out[e] = s
                elif e in out:
                    del out[e]
        res = MultiPoly.__new__(MultiPoly)
        res.vars = self.vars
        res.terms = out
        return res

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = MultiPoly.const(self.vars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- structure queries -------------------------------------------------

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def min_order(self) -> int:
        """Minimal total degree of a term (vanishing order at the origin)."""
        if not self.terms:
            raise ValueError("zero polynomial has no vanishing order")
        return min(sum(e) for e in self.terms)

    def var_degree(self, name: str) -> int:
        i = self.vars.index(name)
        if not self.terms:
            return -1
        return max(e[i] for e in self.terms)

    def min_var_exponent(self, name: str) -> int:
        i = self.vars.index(name)
        if not self.terms:
            return 0
        return min(e[i] for e in self.terms)

    def coeff(self, exps: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def constant_term(self) -> Fraction:
        return self.coeff((0,) * len(self.vars))

    def homogeneous_component(self, k: int) -> "MultiPoly":
        res = MultiPoly.__new__(MultiPoly)
        res.vars = self.vars
        res.terms = {e: c for e, c in self.terms.items() if sum(e) == k}
        return res

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def lead_term(self) -> tuple[tuple, Fraction]:
        """(exponents, coefficient) of the graded-lex leading term."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=_grlex_key)
        return e, self.terms[e]

    def content(self) -> Fraction:
        """Positive rational c with self/c primitive (integer, gcd 1)."""
        if not self.terms:
            return Fraction(1)
        num_gcd = 0
        den_lcm = 1
        for c in self.terms.values():
            num_gcd = math.gcd(num_gcd, abs(c.numerator))
            den_lcm = den_lcm * c.denominator // math.gcd(den_lcm, c.denominator)
        return Fraction(num_gcd, den_lcm)

    # -- calculus and substitution ------------------------------------------

    def diff(self, name: str) -> "MultiPoly":
        i = self.vars.index(name)
        out: dict[tuple, Fraction] = {}
        for e, c in self.terms.items():
            if e[i]:
                e2 = list(e)
                e2[i] -= 1
                out[tuple(e2)] = c * e[i]
        res = MultiPoly.__new__(MultiPoly)
        res.vars = self.vars
        res.terms = out
        return res

    def subs(self, mapping: Mapping[str, "MultiPoly | Scalar"]) -> "MultiPoly":
        """Substitute polynomials (or constants) for some of the variables."""
        images = []
        for name in self.vars:
            img = mapping.get(name)
            if img is None:
                img = MultiPoly.var(self.vars, name)
            elif isinstance(img, (int, Fraction)):
                img = MultiPoly.const(self.vars, img)
            else:
                self._check_same_ring(img)
            images.append(img)
        result = MultiPoly.zero(self.vars)
        pow_cache: dict[tuple[int, int], MultiPoly] = {}
        for e, c in self.terms.items():
            term = MultiPoly.const(self.vars, c)
            for i, k in enumerate(e):
                if k:
                    key = (i, k)
                    if key not in pow_cache:
                        pow_cache[key] = images[i] ** k
                    term = term * pow_cache[key]
            result = result + term
        return result

    def evaluate(self, point: Mapping[str, Scalar]) -> Fraction:
        total = Fraction(0)
        vals = [Fraction(point[name]) for name in self.vars]
        for e, c in self.terms.items():
            v = c
            for i, k in enumerate(e):
                if k:
                    v *= vals[i] ** k
            total += v
        return total

    def exact_div(self, g: "MultiPoly") -> "MultiPoly":
        """Exact quotient self/g; raises ValueError when g does not divide."""
        if isinstance(g, (int, Fraction)):
            g = MultiPoly.const(self.vars, g)
        self._check_same_ring(g)
        if not g:
            raise ZeroDivisionError("division by the zero polynomial")
        q = MultiPoly.zero(self.vars)
        r = self
        ge, gc = g.lead_term()
        while r:
            re, rc = r.lead_term()
            diff = tuple(a - b for a, b in zip(re, ge))
            if any(d < 0 for d in diff):
                raise ValueError("not divisible")
            t = MultiPoly.monomial(self.vars, diff, rc / gc)
            q = q + t
            r = r - t * g
        return q

    def divisible_by(self, g: "MultiPoly") -> bool:
        try:
            self.exact_div(g)
            return True
        except ValueError:
            return False

    # -- printing ------------------------------------------------------------

    def sorted_terms(self) -> list[tuple[tuple, Fraction]]:
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            factors = []
            for name, k in zip(self.vars, e):
                if k == 1:
                    factors.append(name)
                elif k > 1:
                    factors.append(f"{name}^{k}")
            if not factors:
                body = str(abs(c))
            elif abs(c) == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(abs(c))] + factors)
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"MultiPoly({self.vars}, {self})"


class UniPoly:
    """Dense univariate polynomial, generic over its coefficient ring.

    Coefficients are Fractions or MultiPolys (anything with ring dunders and
    a truthiness test for zero).  coeffs[i] is the coefficient of x^i;
    trailing zeros are stripped and the zero polynomial has degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, c) -> "UniPoly":
        return cls([c])

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, i: int):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def lead(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, UniPoly):
            return NotImplemented
        if len(self.coeffs) != len(other.coeffs):
            return False
        return all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        out = []
        for i in range(n):
            a = self.coeffs[i] if i < len(self.coeffs) else None
            b = other.coeffs[i] if i < len(other.coeffs) else None
            if a is None:
                out.append(b)
            elif b is None:
                out.append(a)
            else:
                out.append(a + b)
        return UniPoly(out)

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            # ring scalar
            return UniPoly([c * other for c in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return UniPoly([])
        acc: dict[int, object] = {}
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if not b:
                    continue
                k = i + j
                p = a * b
                acc[k] = acc[k] + p if k in acc else p
        if not acc:
            return UniPoly([])
        zero = self.coeffs[-1] * 0
        n = max(acc) + 1
        return UniPoly([acc.get(i, zero) for i in range(n)])

    def __rmul__(self, other):
        return UniPoly([other * c for c in self.coeffs])

    def shifted(self, k: int) -> "UniPoly":
        """Multiply by x^k."""
        if not self.coeffs or k == 0:
            return self
        zero = self.coeffs[-1] * 0
        return UniPoly([zero] * k + list(self.coeffs))

    def derivative(self) -> "UniPoly":
        return UniPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        if not self.coeffs:
            return Fraction(0) if isinstance(x, (int, Fraction)) else x * 0
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    def divmod_field(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        """Quotient and remainder; requires invertible (Fraction) coefficients."""
        if not other:
            raise ZeroDivisionError("division by zero polynomial")
        q: dict[int, Fraction] = {}
        r = list(self.coeffs)
        d = other.degree()
        lead = other.coeffs[-1]
        while len(r) - 1 >= d and any(r):
            while r and not r[-1]:
                r.pop()
            if len(r) - 1 < d:
                break
            k = len(r) - 1 - d
            c = r[-1] / lead
            q[k] = c
            for i, b in enumerate(other.coeffs):
                r[k + i] -= c * b
        nq = max(q) + 1 if q else 0
        return UniPoly([q.get(i, Fraction(0)) for i in range(nq)]), UniPoly(r)

    def monic(self) -> "UniPoly":
        if not self.coeffs:
            return self
        lead = self.coeffs[-1]
        return UniPoly([c / lead for c in self.coeffs])

    def to_string(self, name: str = "m") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            if i == 0:
                body = str(c) if not parts else str(abs(c))
            else:
                mono = name if i == 1 else f"{name}^{i}"
                if abs(c) == 1:
                    body = mono
                else:
                    body = f"{abs(c)}*{mono}"
                if not parts and c < 0:
                    body = "-" + body
            if parts:
                parts.append(" + " if c > 0 else " - ")
            parts.append(body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"UniPoly({list(self.coeffs)})"


def unipoly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd over Q (Euclid); gcd(0, 0) = 0."""
    while b:
        _, r = a.divmod_field(b)
        a, b = b, r
    return a.monic()


def rational_roots(p: UniPoly) -> tuple[list[tuple[Fraction, int]], UniPoly]:
    """All rational roots of p (with multiplicities) and the root-free residual.

    p must be a nonzero univariate polynomial over Fraction.  Roots are
    returned sorted ascending; the residual has no rational roots (it is a
    nonzero constant exactly when p splits over Q).
    """
    if not p:
        raise ValueError("zero polynomial")
    roots: list[tuple[Fraction, int]] = []
    # strip the root at 0 first
    k = 0
    cs = list(p.coeffs)
    while cs and not cs[0]:
        cs.pop(0)
        k += 1
    p = UniPoly(cs)
    if k:
        roots.append((Fraction(0), k))
    if p.degree() <= 0:
        return roots, p
    # clear denominators, then run the rational root test
    den_lcm = 1
    for c in p.coeffs:
        den_lcm = den_lcm * c.denominator // math.gcd(den_lcm, c.denominator)
    a0 = abs((p.coeffs[0] * den_lcm).numerator)
    an = abs((p.coeffs[-1] * den_lcm).numerator)
    candidates = set()
    for r in _divisors(a0):
        for s in _divisors(an):
            candidates.add(Fraction(r, s))
            candidates.add(Fraction(-r, s))
    for cand in sorted(candidates):
        mult = 0
        while p.degree() > 0 and not p(cand):
            p, _ = p.divmod_field(UniPoly([-cand, Fraction(1)]))
            mult += 1
        if mult:
            roots.append((cand, mult))
    roots.sort(key=lambda t: t[0])
    return roots, p


def _divisors(n: int) -> list[int]:
    if n == 0:
        return [1]
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


# -- determinants, linear solving, resultants --------------------------------


def ring_det(rows: Sequence[Sequence]):
    """Determinant over a commutative ring by expansion in minors.

    No division is performed, so entries may be MultiPolys; minors are
    memoized on the column mask (cost O(2^n * n)), which is fine for the
    small Sylvester and Cramer systems this library needs.
    """
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise ValueError("matrix must be square and nonempty")
    memo: dict[int, object] = {}

    def minor(mask: int):
        if mask in memo:
            return memo[mask]
        r = bin(mask).count("1")
        cols = [j for j in range(n) if not (mask >> j) & 1]
        if r == n - 1:
            memo[mask] = rows[r][cols[0]]
            return memo[mask]
        acc = None
        for idx, j in enumerate(cols):
            sub = minor(mask | (1 << j))
            term = rows[r][j] * sub
            if idx % 2:
                term = -term
            acc = term if acc is None else acc + term
        memo[mask] = acc
        return acc

    return minor(0)


def solve_linear(matrix: Sequence[Sequence[MultiPoly]], rhs: Sequence[MultiPoly]) -> list["RationalFunction"]:
    """Exact solution of a square polynomial system over the fraction field.

    Cramer's rule: each unknown is a ratio of determinants, so the result is
    a vector of RationalFunctions whose back-substitution residual is exactly
    zero.  Raises SingularSystem when the determinant vanishes identically.
    """
    n = len(matrix)
    if any(len(row) != n for row in matrix) or len(rhs) != n:
        raise ValueError("need a square matrix and a matching right-hand side")
    det = ring_det(matrix)
    if not det:
        raise SingularSystem("coefficient matrix has identically zero determinant")
    sols = []
    for i in range(n):
        replaced = [list(row[:i]) + [rhs[r]] + list(row[i + 1:]) for r, row in enumerate(matrix)]
        sols.append(RationalFunction(ring_det(replaced), det))
    return sols


def sylvester_matrix(p: UniPoly, q: UniPoly) -> list[list]:
    m, n = p.degree(), q.degree()
    if m < 1 and n < 1:
        raise ValueError("need at least one positive-degree polynomial")
    zero = p.lead() * 0 if p else q.lead() * 0
    pc = list(reversed(p.coeffs))
    qc = list(reversed(q.coeffs))
    rows = []
    for i in range(n):
        rows.append([zero] * i + pc + [zero] * (n - 1 - i))
    for i in range(m):
        rows.append([zero] * i + qc + [zero] * (m - 1 - i))
    return rows


def resultant(p: UniPoly, q: UniPoly):
    """Sylvester-matrix resultant of p and q over their coefficient ring."""
    if not p and not q:
        raise ValueError("resultant of two zero polynomials")
    if not p:
        return q.lead() * 0
    if not q:
        return p.lead() * 0
    m, n = p.degree(), q.degree()
    if m == 0 and n == 0:
        return p.lead() ** 0
    if m == 0:
        return p.coeffs[0] ** n
    if n == 0:
        return q.coeffs[0] ** m
    return ring_det(sylvester_matrix(p, q))


def poly_interpolate(points: Sequence[tuple], degree: int) -> UniPoly:
    """Unique interpolating polynomial of the stated degree through the points.

    Needs at least degree+1 distinct abscissae; when oversampled, every extra
    point is checked against the interpolant and DegreeMismatch is raised if
    the data is not consistent with the stated degree.
    """
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    pts = [(Fraction(x), Fraction(y)) for x, y in points]
    base: list[tuple[Fraction, Fraction]] = []
    seen: set[Fraction] = set()
    for x, y in pts:
        if x not in seen:
            seen.add(x)
            base.append((x, y))
        if len(base) == degree + 1:
            break
    if len(base) < degree + 1:
        raise ValueError(f"need {degree + 1} distinct abscissae, got {len(base)}")
    poly = UniPoly([])
    for i, (xi, yi) in enumerate(base):
        li = UniPoly([Fraction(1)])
        denom = Fraction(1)
        for j, (xj, _) in enumerate(base):
            if j == i:
                continue
            li = li * UniPoly([-xj, Fraction(1)])
            denom *= xi - xj
        poly = poly + li * (yi / denom)
    for x, y in pts:
        if poly(x) != y:
            raise DegreeMismatch(
                f"data is not a degree-{degree} polynomial: at x={x} expected {y}, interpolant gives {poly(x)}"
            )
    return poly


class RationalFunction:
    """Quotient of MultiPolys over the same variables, exact throughout.

    Reduction is deliberately light: a common monomial factor and the
    denominator content are removed and the denominator sign is normalized,
    but no multivariate gcd is attempted.  Representatives are therefore not
    canonical; equality is via cross-multiplication, which is exact.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: MultiPoly, den: MultiPoly):
        if isinstance(num, (int, Fraction)):
            num = MultiPoly.const(den.vars, num)
        if isinstance(den, (int, Fraction)):
            den = MultiPoly.const(num.vars, den)
        num._check_same_ring(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            self.num = MultiPoly.zero(num.vars)
            self.den = MultiPoly.const(num.vars, 1)
            return
        # strip the common monomial factor
        strip = []
        for name in num.vars:
            k = min(num.min_var_exponent(name), den.min_var_exponent(name))
            strip.append(k)
        if any(strip):
            mono = MultiPoly.monomial(num.vars, strip)
            num = num.exact_div(mono)
            den = den.exact_div(mono)
        # make the denominator primitive with a positive leading coefficient
        c = den.content()
        _, lead = den.lead_term()
        if lead < 0:
            c = -c
        num = num * (1 / c)
        den = den * (1 / c)
        self.num = num
        self.den = den

    @classmethod
    def from_poly(cls, p: MultiPoly) -> "RationalFunction":
        return cls(p, MultiPoly.const(p.vars, 1))

    def __bool__(self) -> bool:
        return bool(self.num)

    def is_polynomial(self) -> bool:
        return self.den == MultiPoly.const(self.den.vars, 1)

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, MultiPoly):
            return RationalFunction.from_poly(other)
        if isinstance(other, (int, Fraction)):
            return RationalFunction.from_poly(MultiPoly.const(self.num.vars, other))
        return None

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        raise TypeError("RationalFunction representatives are not canonical; unhashable")

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        r = RationalFunction.__new__(RationalFunction)
        r.num = -self.num
        r.den = self.den
        return r

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other.num:
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def homogeneous_degree(self) -> int | None:
        """deg(num) - deg(den) when both parts are homogeneous, else None."""
        if not self.num:
            return None
        if self.num.is_homogeneous() and self.den.is_homogeneous():
            return self.num.degree() - self.den.degree()
        return None

    def __str__(self) -> str:
        if self.is_polynomial():
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def __repr__(self) -> str:
        return f"RationalFunction({self.num!r}, {self.den!r})"


# -- polynomial expression parsing --------------------------------------------

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<number>\d+(?:\s*/\s*\d+)?)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*^()]))"
)


def _tokenize(text: str) -> list[tuple[str, str]]:
    pos = 0
    tokens = []
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            rest = text[pos:].strip()
            if not rest:
                break
            raise ValueError(f"cannot tokenize polynomial near {rest[:20]!r}")
        if m.group("number"):
            tokens.append(("num", m.group("number").replace(" ", "")))
        elif m.group("name"):
            tokens.append(("name", m.group("name")))
        else:
            tokens.append(("op", m.group("op")))
        pos = m.end()
    return tokens


class _PolyParser:
    """Recursive-descent parser for +, -, *, ^, parentheses and juxtaposition."""

    def __init__(self, tokens: list[tuple[str, str]], variables: tuple[str, ...]):
        self.tokens = tokens
        self.pos = 0
        self.vars = variables

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def parse(self) -> MultiPoly:
        value = self.expr()
        if self.pos != len(self.tokens):
            raise ValueError(f"unexpected token {self.tokens[self.pos]}")
        return value

    def expr(self) -> MultiPoly:
        kind, val = self.peek()
        negate = False
        if (kind, val) == ("op", "-"):
            self.take()
            negate = True
        elif (kind, val) == ("op", "+"):
            self.take()
        total = self.term()
        if negate:
            total = -total
        while True:
            kind, val = self.peek()
            if (kind, val) == ("op", "+"):
                self.take()
                total = total + self.term()
            elif (kind, val) == ("op", "-"):
                self.take()
                total = total - self.term()
            else:
                return total

    def term(self) -> MultiPoly:
        value = self.factor()
        while True:
            kind, val = self.peek()
            if (kind, val) == ("op", "*"):
                self.take()
                value = value * self.factor()
            elif kind in ("num", "name") or (kind, val) == ("op", "("):
                value = value * self.factor()  # juxtaposition
            else:
                return value

    def factor(self) -> MultiPoly:
        base = self.atom()
        kind, val = self.peek()
        if (kind, val) == ("op", "^"):
            self.take()
            kind, val = self.take()
            if kind != "num" or "/" in val:
                raise ValueError("exponent must be a nonnegative integer")
            return base ** int(val)
        return base

    def atom(self) -> MultiPoly:
        kind, val = self.take()
        if kind == "num":
            return MultiPoly.const(self.vars, Fraction(val))
        if kind == "name":
            if val not in self.vars:
                raise ValueError(f"unknown variable {val!r}; expected one of {self.vars}")
            return MultiPoly.var(self.vars, val)
        if (kind, val) == ("op", "("):
            inner = self.expr()
            kind, val = self.take()
            if (kind, val) != ("op", ")"):
                raise ValueError("unbalanced parentheses")
            return inner
        if (kind, val) == ("op", "-"):
            return -self.atom()
        raise ValueError(f"unexpected token {(kind, val)}")


def parse_poly(text: str, variables: Sequence[str]) -> MultiPoly:
    """Parse an ASCII polynomial expression (^ for powers, p/q coefficients)."""
    tokens = _tokenize(text)
    if not tokens:
        raise ValueError("empty polynomial expression")
    return _PolyParser(tokens, tuple(variables)).parse()
