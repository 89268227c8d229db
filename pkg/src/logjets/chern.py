"""Chern-class calculus on a surface and exact Euler characteristics.

A surface is described purely numerically: a basis of named divisor
generators with a symmetric rational intersection form, the Chern data of
the ordinary tangent bundle (which feeds the Todd class), and the Chern
data of the logarithmic tangent bundle of the pair (which feeds the
bundles of log-jet differentials).  Both are carried separately because the
Euler characteristic mixes them: the bundle being measured is logarithmic
while the Riemann-Roch Todd factor is ordinary.

On top of the surface sit rank/c1/c2 triples for bundles, closed under
symmetric powers of rank-2 bundles and line-bundle twists, and the graded
pieces S^(m-3j) T* ⊗ K^j of the weighted-degree-m order-2 jet bundle.  The
degree-4 coefficient of m ↦ χ is extracted by exact interpolation per
residue class of m mod 3 (the piece count makes χ a quasi-polynomial of
period 3), with a cross-class consistency check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import RankUnsupported, ResidueMismatch
from .exactalg import UniPoly, poly_interpolate, rat


@dataclass(frozen=True)
class DivisorClass:
    """Coefficient vector in a fixed basis of divisor generators."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        if len(self.coeffs) != len(other.coeffs):
            raise ValueError("divisor classes live in different bases")
        return DivisorClass(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return self + (-other)

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(tuple(-c for c in self.coeffs))

    def __mul__(self, scalar) -> "DivisorClass":
        s = Fraction(scalar)
        return DivisorClass(tuple(s * c for c in self.coeffs))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return all(not c for c in self.coeffs)

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.coeffs) + ")"


@dataclass(frozen=True)
class SurfaceData:
    """Numerical intersection theory of a surface with a boundary divisor."""

    basis: tuple[str, ...]
    form: tuple[tuple[Fraction, ...], ...]
    c1_ordinary: DivisorClass
    c2_ordinary: Fraction
    c1_log: DivisorClass
    c2_log: Fraction

    def __post_init__(self):
        n = len(self.basis)
        form = tuple(tuple(Fraction(x) for x in row) for row in self.form)
        if len(form) != n or any(len(row) != n for row in form):
            raise ValueError("intersection form must be square of basis size")
        for i in range(n):
            for j in range(n):
                if form[i][j] != form[j][i]:
                    raise ValueError("intersection form must be symmetric")
        object.__setattr__(self, "form", form)
        object.__setattr__(self, "c2_ordinary", Fraction(self.c2_ordinary))
        object.__setattr__(self, "c2_log", Fraction(self.c2_log))
        for cls in (self.c1_ordinary, self.c1_log):
            if len(cls.coeffs) != n:
                raise ValueError("divisor class does not match the basis")

    @classmethod
    def plane_model(cls, d: int) -> "SurfaceData":
        """The projective plane with a degree-d boundary curve.

        Basis {h} with h·h = 1; ordinary Chern data (3h, 3); logarithmic
        Chern data ((3-d)h, d^2-3d+3).
        """
        return cls(
            basis=("h",),
            form=((Fraction(1),),),
            c1_ordinary=DivisorClass((Fraction(3),)),
            c2_ordinary=Fraction(3),
            c1_log=DivisorClass((Fraction(3 - d),)),
            c2_log=Fraction(d * d - 3 * d + 3),
        )

    @classmethod
    def from_json(cls, data: dict) -> "SurfaceData":
        """Build from the JSON surface description used by the CLI.

        Schema: {basis:[names], form:[[q,...]], c1:[...], c2:"p/q",
        c1log:[...], c2log:"p/q"}; entries may be ints or "p/q" strings.
        """
        return cls(
            basis=tuple(data["basis"]),
            form=tuple(tuple(rat(x) for x in row) for row in data["form"]),
            c1_ordinary=DivisorClass(tuple(rat(x) for x in data["c1"])),
            c2_ordinary=rat(data["c2"]),
            c1_log=DivisorClass(tuple(rat(x) for x in data["c1log"])),
            c2_log=rat(data["c2log"]),
        )

    def zero_class(self) -> DivisorClass:
        return DivisorClass((Fraction(0),) * len(self.basis))

    def divisor(self, *coeffs) -> DivisorClass:
        if len(coeffs) != len(self.basis):
            raise ValueError(f"expected {len(self.basis)} coefficients")
        return DivisorClass(tuple(Fraction(c) for c in coeffs))

    def intersect(self, a: DivisorClass, b: DivisorClass) -> Fraction:
        if len(a.coeffs) != len(self.basis) or len(b.coeffs) != len(self.basis):
            raise ValueError("divisor class does not match the basis")
        total = Fraction(0)
        for i, ai in enumerate(a.coeffs):
            if not ai:
                continue
            for j, bj in enumerate(b.coeffs):
                if bj:
                    total += ai * self.form[i][j] * bj
        return total

    def c1_log_sq(self) -> Fraction:
        return self.intersect(self.c1_log, self.c1_log)

    def log_canonical(self) -> DivisorClass:
        """Class of the log-canonical bundle (minus the log c1)."""
        return -self.c1_log

    def log_cotangent(self) -> "BundleChern":
        """Chern data of the rank-2 logarithmic cotangent bundle."""
        return BundleChern(2, -self.c1_log, self.c2_log)


@dataclass(frozen=True)
class BundleChern:
    """rank, c1 (a divisor class) and c2 (a degree-2 number) of a bundle."""

    rank: int
    c1: DivisorClass
    c2: Fraction

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError("rank must be at least 1")
        object.__setattr__(self, "c2", Fraction(self.c2))

    @classmethod
    def line_bundle(cls, c1: DivisorClass) -> "BundleChern":
        return cls(1, c1, Fraction(0))


def sym_power(surface: SurfaceData, e: BundleChern, p: int) -> BundleChern:
    """Chern data of the p-th symmetric power of a rank-2 bundle.

    With Chern roots a, b the new roots are i*a + (p-i)*b for 0 <= i <= p.
    Their first and second elementary symmetric functions reduce to the
    numbers e1^2 = c1·c1 and e2 = c2 of the input: the alpha^2 and beta^2
    totals coincide by the i <-> p-i symmetry, so

        c2(S^p) = A(p)·(c1·c1 - 2 c2) + B(p)·c2,

    with A(p) = sum_{i<j} i*j and B(p) = sum_{i<j} (i(p-j) + j(p-i)).
    """
    if e.rank != 2:
        raise RankUnsupported(f"symmetric powers implemented for rank 2 only, got rank {e.rank}")
    if p < 0:
        raise ValueError("symmetric power needs p >= 0")
    c1c1 = surface.intersect(e.c1, e.c1)
    a_sum = Fraction(0)
    b_sum = Fraction(0)
    for i in range(p + 1):
        for j in range(i + 1, p + 1):
            a_sum += i * j
            b_sum += i * (p - j) + j * (p - i)
    c1 = Fraction(p * (p + 1), 2) * e.c1
    c2 = a_sum * (c1c1 - 2 * e.c2) + b_sum * e.c2
    return BundleChern(p + 1, c1, c2)


def twist(surface: SurfaceData, f: BundleChern, line: DivisorClass) -> BundleChern:
    """Chern data of f ⊗ O(line)."""
    r = f.rank
    c1_dot_l = surface.intersect(f.c1, line)
    l_sq = surface.intersect(line, line)
    return BundleChern(
        r,
        f.c1 + r * line,
        f.c2 + (r - 1) * c1_dot_l + Fraction(r * (r - 1), 2) * l_sq,
    )


def direct_sum(surface: SurfaceData, f: BundleChern, g: BundleChern) -> BundleChern:
    """Chern data of f ⊕ g (c2 picks up the cross term c1(f)·c1(g))."""
    return BundleChern(
        f.rank + g.rank,
        f.c1 + g.c1,
        f.c2 + g.c2 + surface.intersect(f.c1, g.c1),
    )


def chi(surface: SurfaceData, f: BundleChern) -> Fraction:
    """Euler characteristic by Riemann-Roch on the surface.

    chi = ch2(f) + c1(f)·c1(X)/2 + rank·(c1(X)^2 + c2(X))/12, with the Todd
    factor built from the ordinary tangent Chern data and everything
    evaluated through the intersection form.
    """
    c1_sq = surface.intersect(f.c1, f.c1)
    c1_dot_tangent = surface.intersect(f.c1, surface.c1_ordinary)
    todd_num = surface.intersect(surface.c1_ordinary, surface.c1_ordinary) + surface.c2_ordinary
    return (c1_sq - 2 * f.c2) / 2 + c1_dot_tangent / 2 + Fraction(f.rank) * todd_num / 12


def filtration_pieces(m: int) -> list[tuple[int, int]]:
    """Graded pieces (p, j) = (m - 3j, j), 0 <= j <= m//3, of weight m."""
    if m < 0:
        raise ValueError("weighted degree must be nonnegative")
    return [(m - 3 * j, j) for j in range(m // 3 + 1)]


def chi_e2m(surface: SurfaceData, m: int, extra_twist: DivisorClass | None = None) -> Fraction:
    """Exact chi of the weight-m order-2 log-jet bundle, optionally twisted.

    Computed as the sum over the graded pieces S^(m-3j) T* ⊗ K^j (chi is
    additive across a filtration), each twisted by extra_twist on top.
    """
    if extra_twist is None:
        extra_twist = surface.zero_class()
    cotangent = surface.log_cotangent()
    log_k = surface.log_canonical()
    total = Fraction(0)
    for p, j in filtration_pieces(m):
        piece = sym_power(surface, cotangent, p)
        total += chi(surface, twist(surface, piece, j * log_k + extra_twist))
    return total


# number of samples per residue class: degree-4 interpolation plus one
# oversample so poly_interpolate cross-checks consistency
_LEADING_SAMPLES = 6


def chi_e2m_polynomial(surface: SurfaceData, residue: int,
                       extra_twist: DivisorClass | None = None) -> UniPoly:
    """The degree-4 polynomial giving m ↦ chi_e2m on one residue class mod 3."""
    if residue not in (0, 1, 2):
        raise ValueError("residue class must be 0, 1 or 2")
    points = []
    for i in range(_LEADING_SAMPLES):
        m = residue + 3 * i
        points.append((Fraction(m), chi_e2m(surface, m, extra_twist)))
    return poly_interpolate(points, 4)


def chi_e2m_leading(surface: SurfaceData, extra_twist: DivisorClass | None = None) -> Fraction:
    """Degree-4 coefficient of m ↦ chi_e2m, exact.

    Interpolated independently on each residue class of m mod 3; the three
    classes must agree (ResidueMismatch otherwise, which would mean a bug in
    the filtration bookkeeping, not bad input).
    """
    coeffs = [
        chi_e2m_polynomial(surface, residue, extra_twist).coeff(4)
        for residue in (0, 1, 2)
    ]
    if not (coeffs[0] == coeffs[1] == coeffs[2]):
        raise ResidueMismatch(
            f"residue classes disagree on the m^4 coefficient: {[str(c) for c in coeffs]}"
        )
    return coeffs[0]
