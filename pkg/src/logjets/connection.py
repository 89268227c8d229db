"""Meromorphic connection solving for special plane-curve families.

For the degree-d family cut out by s0 + s1 + s2 with
s0 = z0^k0 (z0^(d-k0) + a z1^k1 z2^k2), s1 = z1^d, s2 = z2^d, the
Christoffel symbols of a homogeneous meromorphic connection on C^3 are
obtained by exactly solving, for every index pair (i, j), the 3x3 linear
system

    sum_k Gamma^k_ij * ds_l/dz_k = d^2 s_l / dz_i dz_j,   l = 0, 1, 2.

The member curve is totally geodesic for the resulting connection by
construction; the computable content of that statement is that the
back-substitution residual of every solved system is exactly zero, which
solve-time checks (and the tests) verify.  The expected pole divisor is
z0 z1 z2 (d z0^(k1+k2) + a k0 z1^k1 z2^k2); the computed Christoffel
denominators are checked to be supported inside it (containment, not
equality: for k0 = 1 the determinant has no z0 factor at all).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .exactalg import MultiPoly, RationalFunction, ring_det, solve_linear
from .thresholds import theta1_lower

VARS = ("z0", "z1", "z2")

# unordered index pairs, in deterministic order
PAIRS = ((0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2))


@dataclass(frozen=True)
class CurveFamily:
    """One member of the special degree-d family, with exact coefficients."""

    d: int
    k0: int
    k1: int
    k2: int
    a: Fraction
    s0: MultiPoly
    s1: MultiPoly
    s2: MultiPoly

    @property
    def sections(self) -> tuple[MultiPoly, MultiPoly, MultiPoly]:
        return (self.s0, self.s1, self.s2)

    @property
    def p(self) -> int:
        """The twist parameter 3 + k1 + k2 attached to this family member."""
        return 3 + self.k1 + self.k2


def build_family(d: int, k0: int, k1: int, k2: int, a) -> CurveFamily:
    """Construct the family member for exponents (k0, k1, k2) and parameter a."""
    if d < 6:
        raise DomainError(f"need degree d >= 6, got {d}")
    if min(k0, k1, k2) < 0:
        raise DomainError("exponents must be nonnegative")
    if k0 + k1 + k2 != d:
        raise DomainError(f"exponents must sum to d: {k0}+{k1}+{k2} != {d}")
    a = Fraction(a)
    z0 = MultiPoly.var(VARS, "z0")
    z1 = MultiPoly.var(VARS, "z1")
    z2 = MultiPoly.var(VARS, "z2")
    s0 = z0 ** k0 * (z0 ** (d - k0) + a * z1 ** k1 * z2 ** k2)
    s1 = z1 ** d
    s2 = z2 ** d
    return CurveFamily(d, k0, k1, k2, a, s0, s1, s2)


def jacobian_matrix(family: CurveFamily) -> list[list[MultiPoly]]:
    """M[l][k] = ds_l/dz_k."""
    return [[s.diff(name) for name in VARS] for s in family.sections]


def pole_divisor(family: CurveFamily) -> MultiPoly:
    """z0 z1 z2 (d z0^(k1+k2) + a k0 z1^k1 z2^k2), the expected pole locus."""
    z0 = MultiPoly.var(VARS, "z0")
    z1 = MultiPoly.var(VARS, "z1")
    z2 = MultiPoly.var(VARS, "z2")
    inner = family.d * z0 ** (family.k1 + family.k2) \
        + family.a * family.k0 * z1 ** family.k1 * z2 ** family.k2
    return z0 * z1 * z2 * inner


@dataclass(frozen=True)
class ConnectionData:
    """Christoffel symbols Gamma^k_ij (symmetric in i, j) and the pole data."""

    christoffels: dict
    pole_poly: MultiPoly

    def gamma(self, k: int, i: int, j: int) -> RationalFunction:
        if i > j:
            i, j = j, i
        return self.christoffels[(i, j)][k]

    def items(self):
        """Deterministic iteration: ((i, j), (Gamma^0, Gamma^1, Gamma^2))."""
        for pair in PAIRS:
            yield pair, self.christoffels[pair]


def solve_connection(family: CurveFamily) -> ConnectionData:
    """Solve the six 3x3 linear systems exactly over the fraction field.

    Raises SingularSystem when the Jacobian determinant vanishes
    identically (degenerate parameter choice).
    """
    matrix = jacobian_matrix(family)
    det = ring_det(matrix)
    christoffels = {}
    for (i, j) in PAIRS:
        rhs = [s.diff(VARS[i]).diff(VARS[j]) for s in family.sections]
        christoffels[(i, j)] = tuple(solve_linear(matrix, rhs))
    return ConnectionData(christoffels=christoffels, pole_poly=det)


def residual_is_zero(family: CurveFamily, conn: ConnectionData) -> bool:
    """Back-substitute every solution: all 18 equations must vanish exactly."""
    matrix = jacobian_matrix(family)
    for (i, j), gammas in conn.items():
        for l in range(3):
            rhs = family.sections[l].diff(VARS[i]).diff(VARS[j])
            acc = RationalFunction.from_poly(MultiPoly.zero(VARS))
            for k in range(3):
                acc = acc + gammas[k] * matrix[l][k]
            if acc != RationalFunction.from_poly(rhs):
                return False
    return True


def homogeneity_ok(conn: ConnectionData) -> bool:
    """Each Christoffel symbol is homogeneous of degree -1 (or zero)."""
    for _, gammas in conn.items():
        for g in gammas:
            if not g:
                continue
            if g.homogeneous_degree() != -1:
                return False
    return True


def poles_contained(family: CurveFamily, conn: ConnectionData) -> bool:
    """Squarefree support of all denominators sits inside the pole divisor.

    Checked by stripping from each denominator every factor of the pole
    divisor (the three coordinate planes and the inner binomial) and
    requiring that a nonzero constant remains.
    """
    factors = [MultiPoly.var(VARS, name) for name in VARS]
    inner = pole_divisor(family).exact_div(factors[0] * factors[1] * factors[2])
    if inner.degree() > 0:
        factors.append(inner)
    for _, gammas in conn.items():
        for g in gammas:
            rem = g.den
            for f in factors:
                while rem.degree() > 0 and rem.divisible_by(f):
                    rem = rem.exact_div(f)
            if rem.degree() > 0:
                return False
    return True


def wronskian_twist(d: int, p: int) -> Fraction:
    """Canonical twist t1 = p/(d-3) - 1 of the order-2 weight-3 operator.

    p = 3 + k1 + k2 ranges over [3, d+3]; at p = floor((d+1)/2) the bound
    1/2 + t1 = (3 + d mod 2)/(2(d-3)) holds.
    """
    if d < 6:
        raise DomainError(f"need degree d >= 6, got {d}")
    if not 3 <= p <= d + 3:
        raise DomainError(f"need 3 <= p <= d+3, got p={p} for d={d}")
    return Fraction(p, d - 3) - 1


def proportionality_degree(m1: int, m2: int, t1, t2) -> tuple[int, Fraction]:
    """Symmetric degree and twist of the cross-difference of two operators.

    Two order-2 differentials of weights m1, m2 in {3, 4, 5} with twists
    t1, t2 combine into a symmetric differential of degree m1 + m2 - 3 and
    twist 1 + t1 + t2.
    """
    if m1 not in (3, 4, 5) or m2 not in (3, 4, 5):
        raise DomainError(f"weights must lie in {{3, 4, 5}}, got {m1}, {m2}")
    return m1 + m2 - 3, 1 + Fraction(t1) + Fraction(t2)


def proportionality_vanishes(d: int, m1: int, m2: int, t1, t2) -> bool:
    """Vanishing predicate: twist below the order-1 threshold forces zero.

    True when 1 + t1 + t2 < (m1 + m2 - 3) * (lower bound for the order-1
    threshold at weight m1 + m2 - 3).
    """
    deg, tw = proportionality_degree(m1, m2, t1, t2)
    bound = theta1_lower(d, deg).bound
    return tw < deg * bound
