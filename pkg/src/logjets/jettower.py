"""Picard bookkeeping and degree-4 intersections on the 2-level jet tower.

The tower over a surface with a rank-2 log-directed structure has Picard
group Pic(X) ⊕ Zu1 ⊕ Zu2, where u1 is the pullback of the level-1
tautological class and u2 the level-2 one.  All top intersections of the
u's (degree 4) and of u-cubics against a pullback divisor are given by a
fixed table in the surface's log-Chern numbers; everything else follows by
multilinearity.  The table is taken as axiomatic input here: the weighted
cube identity computed by z_degree serves as its internal cross-check and
is exercised heavily by the tests.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .chern import DivisorClass, SurfaceData
from .errors import DegreeError


@dataclass(frozen=True)
class TowerShape:
    """Dimension bookkeeping of the iterated projectivized tower."""

    n: int  # dimension of the base
    r: int  # rank of the directed subbundle

    def dim(self, k: int) -> int:
        """Dimension of the level-k stage: n + k(r-1)."""
        if k < 0:
            raise ValueError("tower level must be nonnegative")
        return self.n + k * (self.r - 1)

    def rank_v(self, k: int) -> int:
        """Rank of the directed bundle at every level (constant)."""
        if k < 0:
            raise ValueError("tower level must be nonnegative")
        return self.r


@dataclass(frozen=True)
class JetClass2:
    """A divisor class a1*u1 + a2*u2 + (pullback of f) on the level-2 stage."""

    a1: Fraction
    a2: Fraction
    f: DivisorClass

    def __post_init__(self):
        object.__setattr__(self, "a1", Fraction(self.a1))
        object.__setattr__(self, "a2", Fraction(self.a2))

    @classmethod
    def from_canonical_multiple(cls, surface: SurfaceData, a1, a2, t) -> "JetClass2":
        """Class with pullback part t * (log-canonical class)."""
        return cls(Fraction(a1), Fraction(a2), Fraction(t) * surface.log_canonical())

    def __str__(self) -> str:
        return f"{self.a1}*u1 + {self.a2}*u2 + pi*{self.f}"


# table of top products: keys are (e1, e2) exponents of u1, u2; a pure
# degree-4 product, or a degree-3 product against one pullback divisor
def intersect4(surface: SurfaceData, exponents: tuple[int, int],
               f: DivisorClass | None = None) -> Fraction:
    """Top intersection number u1^e1 * u2^e2 (optionally times a pullback).

    Pure products need e1+e2 = 4; products against a pullback divisor f need
    e1+e2 = 3.  Values come from the fixed table in the log-Chern numbers
    c1sq = c1_log·c1_log and c2 = c2_log:

        u1^4 = 0           u1^3 u2 = c1sq - c2    u1^2 u2^2 = c2
        u1 u2^3 = c1sq - 3 c2                     u2^4 = 5 c2 - c1sq
        u1^3·F = 0         u1^2 u2·F = -c1_log·F
        u1 u2^2·F = 0      u2^3·F = 0
    """
    e1, e2 = exponents
    if e1 < 0 or e2 < 0:
        raise DegreeError(f"negative exponents {exponents}")
    c1sq = surface.c1_log_sq()
    c2 = surface.c2_log
    if f is None:
        if e1 + e2 != 4:
            raise DegreeError(f"pure u-product needs total degree 4, got {e1 + e2}")
        table = {
            (4, 0): Fraction(0),
            (3, 1): c1sq - c2,
            (2, 2): c2,
            (1, 3): c1sq - 3 * c2,
            (0, 4): 5 * c2 - c1sq,
        }
        return table[(e1, e2)]
    if e1 + e2 != 3:
        raise DegreeError(f"u-product against a pullback needs degree 3, got {e1 + e2}")
    if (e1, e2) == (2, 1):
        return -surface.intersect(surface.c1_log, f)
    return Fraction(0)


def z_degree(surface: SurfaceData, z: JetClass2) -> Fraction:
    """(2u1 + u2)^3 · z, expanded through the intersection table.

    For z = a1*u1 + a2*u2 + t0 * pullback(log-canonical) this evaluates to
    (a1 + a2)(13 c1sq - 9 c2) + 12 t0 c1sq; general pullback parts are
    accepted and handled by multilinearity.
    """
    total = Fraction(0)
    # (2u1 + u2)^3 = sum_i C(3,i) 2^i u1^i u2^(3-i)
    binom = {0: 1, 1: 3, 2: 3, 3: 1}
    for i in range(4):
        c = Fraction(binom[i] * 2 ** i)
        if z.a1:
            total += c * z.a1 * intersect4(surface, (i + 1, 3 - i))
        if z.a2:
            total += c * z.a2 * intersect4(surface, (i, 4 - i))
        if not z.f.is_zero():
            total += c * intersect4(surface, (i, 3 - i), z.f)
    return total


class ComponentKind(enum.Enum):
    """Case classification of an effective irreducible tower component."""

    VERTICAL = "Vertical"
    GAMMA2 = "Gamma2"
    HORIZONTAL = "Horizontal"
    INFEASIBLE = "Infeasible"


def classify_component(a1, a2, t) -> ComponentKind:
    """Three disjoint cases for (a1, a2, t), Infeasible otherwise.

    Vertical: (a1, a2) = (0, 0) and t > 0 (pure pullback).
    Gamma2:   (a1, a2) = (-1, 1) and t = 0 (the relative hyperplane).
    Horizontal: a1 >= 2*a2 >= 0 with a1 + a2 > 0.
    """
    a1, a2, t = Fraction(a1), Fraction(a2), Fraction(t)
    if a1 == 0 and a2 == 0 and t > 0:
        return ComponentKind.VERTICAL
    if a1 == -1 and a2 == 1 and t == 0:
        return ComponentKind.GAMMA2
    if a1 >= 2 * a2 >= 0 and a1 + a2 > 0:
        return ComponentKind.HORIZONTAL
    return ComponentKind.INFEASIBLE


def to_taut_gamma2(a1: int, a2: int) -> tuple[int, int]:
    """Rewrite the weighted class (a1, a2) as (tautological power, Gamma2 multiple).

    O(a1, a2) = O(a1 + a2) ⊗ O(-a1 * Gamma2), so the pair is (a1+a2, -a1).
    """
    return a1 + a2, -a1


def from_taut_gamma2(m: int, g: int) -> tuple[int, int]:
    """Inverse of to_taut_gamma2: (m, g) back to weights (a1, a2) = (-g, m+g)."""
    return -g, m + g
