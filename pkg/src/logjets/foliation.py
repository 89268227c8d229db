"""Local theory of plane foliation singularities, fully exact.

A germ is a pair of polynomials (P, Q) over Q in (x, y), the components of
v = P d/dx + Q d/dy, with the singular point at the origin.  A singularity
is reduced when the linear part is nonzero and the eigenvalue ratio is not
a positive rational; it is nondegenerate when both eigenvalues are nonzero
and a saddle-node when exactly one vanishes.

Blow-up follows the standard calculus: with nu the minimal vanishing order
and H = y*P_nu - x*Q_nu the lowest tangency form, the step is dicritical
iff H vanishes identically; chart 1 substitutes (x, y) -> (x, x*t) and the
pulled-back field is divided by x^(nu-1) (non-dicritical) or x^nu
(dicritical), chart 2 symmetrically.  blow_up returns the raw transformed
fields (so that the substitution times the divided power reproduces the
input exactly); the reduction driver saturates each child germ by the gcd
of its components before classifying, since the singularity structure is
that of the underlying foliation, not of a particular generator.  Singular
directions on the exceptional line are located by exact rational-root
extraction only; a non-rational direction is reported as a structured
error, never approximated.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import Optional

from .errors import (
    DepthExceeded,
    DomainError,
    IrrationalDirection,
    IrrationalSingularity,
    NotInvariant,
    NotSaddleNode,
    NotSingular,
)
from .exactalg import MultiPoly, UniPoly, parse_poly, rational_roots, unipoly_gcd

VARS2 = ("x", "y")
_XONLY = ("x",)


def poly2(text: str) -> MultiPoly:
    """Parse a polynomial in (x, y) from ASCII syntax."""
    return parse_poly(text, VARS2)


@dataclass(frozen=True)
class VectorFieldGerm:
    """Plane polynomial vector field P d/dx + Q d/dy, exact coefficients.

    jet_order records up to which total degree the components are
    meaningful (None for exact polynomial data); blow-up decreases it by
    the division exponent.
    """

    p_comp: MultiPoly
    q_comp: MultiPoly
    jet_order: Optional[int] = None

    def __post_init__(self):
        if self.p_comp.vars != VARS2 or self.q_comp.vars != VARS2:
            raise ValueError(f"germ components must use variables {VARS2}")

    @classmethod
    def from_strings(cls, p: str, q: str, jet_order: Optional[int] = None) -> "VectorFieldGerm":
        return cls(poly2(p), poly2(q), jet_order)

    def is_singular_at_origin(self) -> bool:
        return not self.p_comp.constant_term() and not self.q_comp.constant_term()

    def linear_part(self) -> tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]:
        return (
            (self.p_comp.coeff((1, 0)), self.p_comp.coeff((0, 1))),
            (self.q_comp.coeff((1, 0)), self.q_comp.coeff((0, 1))),
        )

    def min_order(self) -> int:
        """Minimal vanishing order of the component pair."""
        orders = [c.min_order() for c in (self.p_comp, self.q_comp) if c]
        if not orders:
            raise DomainError("the zero vector field has no vanishing order")
        return min(orders)

    def __str__(self) -> str:
        return f"P = {self.p_comp}; Q = {self.q_comp}"


def parse_vector_field(text: str, jet_order: Optional[int] = None) -> VectorFieldGerm:
    """Read a germ from the two-line plain-text format (P then Q).

    Blank lines and lines starting with '#' are ignored.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if len(lines) != 2:
        raise ValueError(f"expected exactly two polynomial lines, got {len(lines)}")
    return VectorFieldGerm(poly2(lines[0]), poly2(lines[1]), jet_order)


class SingTag(enum.Enum):
    NON_REDUCED = "NonReduced"
    REDUCED_NONDEGENERATE = "ReducedNondegenerate"
    SADDLE_NODE = "SaddleNode"


@dataclass(frozen=True)
class SingClass:
    """Classification of the linear part, with its conjugacy invariants."""

    tag: SingTag
    trace: Fraction
    det: Fraction
    ratio: Optional[Fraction]  # eigenvalue ratio, when it is rational

    @property
    def is_reduced(self) -> bool:
        return self.tag is not SingTag.NON_REDUCED


def _sqrt_fraction(f: Fraction) -> Optional[Fraction]:
    """Exact nonnegative square root of f, or None if f is not a square."""
    if f < 0:
        return None
    sn = isqrt(f.numerator)
    sd = isqrt(f.denominator)
    if sn * sn == f.numerator and sd * sd == f.denominator:
        return Fraction(sn, sd)
    return None


def classify(v: VectorFieldGerm) -> SingClass:
    """Three-way classification of the singularity at the origin.

    Zero or nilpotent linear part: not reduced.  One zero eigenvalue with a
    nonzero trace: saddle-node (ratio 0, which is never a positive
    rational, so reduced).  Both eigenvalues nonzero: not reduced exactly
    when the ratio is a positive rational, which forces both eigenvalues
    rational, i.e. the discriminant trace^2 - 4 det must be a rational
    square; zero trace gives ratio -1 whatever the discriminant.
    """
    if not v.is_singular_at_origin():
        raise NotSingular(f"germ does not vanish at the origin: {v}")
    (a, b), (c, e) = v.linear_part()
    trace = a + e
    det = a * e - b * c
    if not (a or b or c or e):
        return SingClass(SingTag.NON_REDUCED, trace, det, None)
    if det == 0:
        if trace == 0:
            # nonzero nilpotent linear part: eigenvalues 0, 0
            return SingClass(SingTag.NON_REDUCED, trace, det, None)
        return SingClass(SingTag.SADDLE_NODE, trace, det, Fraction(0))
    disc = trace * trace - 4 * det
    root = _sqrt_fraction(disc)
    if root is not None:
        lam1 = (trace - root) / 2
        lam2 = (trace + root) / 2
        ratio = lam1 / lam2 if abs(lam1) <= abs(lam2) else lam2 / lam1
        tag = SingTag.NON_REDUCED if ratio > 0 else SingTag.REDUCED_NONDEGENERATE
        return SingClass(tag, trace, det, ratio)
    if trace == 0:
        # opposite eigenvalues (real irrational or purely imaginary): ratio -1
        return SingClass(SingTag.REDUCED_NONDEGENERATE, trace, det, Fraction(-1))
    return SingClass(SingTag.REDUCED_NONDEGENERATE, trace, det, None)


def linear_change(v: VectorFieldGerm, matrix) -> VectorFieldGerm:
    """Exact conjugation by an invertible matrix: u -> S^(-1) v(S u)."""
    (s00, s01), (s10, s11) = ((Fraction(x) for x in row) for row in matrix)
    det = s00 * s11 - s01 * s10
    if not det:
        raise ValueError("coordinate change must be invertible")
    x = MultiPoly.var(VARS2, "x")
    y = MultiPoly.var(VARS2, "y")
    sub = {"x": s00 * x + s01 * y, "y": s10 * x + s11 * y}
    p_new = v.p_comp.subs(sub)
    q_new = v.q_comp.subs(sub)
    return VectorFieldGerm(
        (s11 * p_new - s01 * q_new) * (1 / det),
        (-s10 * p_new + s00 * q_new) * (1 / det),
        v.jet_order,
    )


# -- blow-up ------------------------------------------------------------------


@dataclass(frozen=True)
class BlowUpResult:
    """One blow-up step: both chart fields plus the singular points on E.

    chart1 has coordinates (x, t) with the exceptional line {x = 0}; the
    second chart component is written in the y slot.  chart2 has (s, y)
    with E = {y = 0} and only contributes the direction at t = infinity,
    i.e. the germ at s = 0 when that point is singular.  Multiplying the
    chart-1 field by x^division_exponent and substituting t = y/x
    reproduces the input field exactly.
    """

    chart1_field: tuple[MultiPoly, MultiPoly]
    chart2_field: tuple[MultiPoly, MultiPoly]
    chart1_points: tuple[tuple[Fraction, VectorFieldGerm], ...]
    chart2_point: Optional[VectorFieldGerm]
    dicritical: bool
    division_exponent: int
    order: int


def _restrict_chart_line(p: MultiPoly, line_var: str) -> UniPoly:
    """Restrict to {line_var = 0} as a univariate polynomial in the other var."""
    i = p.vars.index(line_var)
    other = 1 - i
    coeffs: dict[int, Fraction] = {}
    for exps, c in p.terms.items():
        if exps[i] == 0:
            coeffs[exps[other]] = c
    if not coeffs:
        return UniPoly([])
    n = max(coeffs) + 1
    return UniPoly([coeffs.get(k, Fraction(0)) for k in range(n)])


def blow_up(v: VectorFieldGerm) -> BlowUpResult:
    """Single blow-up of the origin, exact, with rational-root direction search."""
    if not v.is_singular_at_origin():
        raise NotSingular(f"germ does not vanish at the origin: {v}")
    nu = v.min_order()
    p_low = v.p_comp.homogeneous_component(nu)
    q_low = v.q_comp.homogeneous_component(nu)
    x = MultiPoly.var(VARS2, "x")
    y = MultiPoly.var(VARS2, "y")
    tangency = y * p_low - x * q_low
    dicritical = not tangency
    exp = nu if dicritical else nu - 1

    # chart 1: (x, y) -> (x, x*t); the t coordinate reuses the y slot
    p1_raw = v.p_comp.subs({"y": x * y})
    q1_raw = v.q_comp.subs({"y": x * y})
    chart1_p = p1_raw.exact_div(x ** exp)
    chart1_t = (q1_raw - y * p1_raw).exact_div(x ** (exp + 1))

    # chart 2: (x, y) -> (s*y, y); the s coordinate reuses the x slot
    p2_raw = v.p_comp.subs({"x": x * y})
    q2_raw = v.q_comp.subs({"x": x * y})
    chart2_s = (p2_raw - x * q2_raw).exact_div(y ** (exp + 1))
    chart2_y = q2_raw.exact_div(y ** exp)

    new_order = None if v.jet_order is None else v.jet_order - exp

    # singular directions with finite abscissa, from the chart-1 restriction
    p_resttámricted = None  # noqa: F841  (placeholder removed below)
    p_restricted = _restrict_chart_line(chart1_p, "x")
    t_restricted = _restrict_chart_line(chart1_t, "x")
    if dicritical:
        base = unipoly_gcd(p_restricted, t_restricted)
    else:
        base = t_restricted
    if not base:
        raise ArithmeticError("exceptional line is a curve of singularities after division")
    points = []
    if base.degree() > 0:
        roots, residual = rational_roots(base)
        if residual.degree() > 0:
            raise IrrationalDirection(residual.to_string("t"))
        for t0, _mult in roots:
            germ = VectorFieldGerm(
                chart1_p.subs({"y": y + t0}),
                chart1_t.subs({"y": y + t0}),
                new_order,
            )
            points.append((t0, germ))

    # the direction at t = infinity lives at s = 0 in chart 2
    chart2_point = None
    if not chart2_s.constant_term() and not chart2_y.constant_term():
        chart2_point = VectorFieldGerm(chart2_s, chart2_y, new_order)

    return BlowUpResult(
        chart1_field=(chart1_p, chart1_t),
        chart2_field=(chart2_s, chart2_y),
        chart1_points=tuple(points),
        chart2_point=chart2_point,
        dicritical=dicritical,
        division_exponent=exp,
        order=nu,
    )


# -- gcd of germ components (saturation) --------------------------------------


def _mpx_to_uni(p: MultiPoly) -> UniPoly:
    if not p:
        return UniPoly([])
    n = p.var_degree("x") + 1
    return UniPoly([p.coeff((k,)) for k in range(n)])


def _uni_to_mpx(u: UniPoly) -> MultiPoly:
    return MultiPoly(_XONLY, {(k,): c for k, c in enumerate(u.coeffs)})


def _xgcd(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    g = unipoly_gcd(_mpx_to_uni(a), _mpx_to_uni(b))
    return _primitive(_uni_to_mpx(g))


def _primitive(p: MultiPoly) -> MultiPoly:
    if not p:
        return p
    c = p.content()
    _, lead = p.lead_term()
    if lead < 0:
        c = -c
    return p * (1 / c)


def _to_y(p: MultiPoly) -> UniPoly:
    """Rewrite a poly in (x, y) as a polynomial in y over Q[x]."""
    if not p:
        return UniPoly([])
    dy = p.var_degree("y")
    buckets: list[dict] = [{} for _ in range(dy + 1)]
    for (ex, ey), c in p.terms.items():
        buckets[ey][(ex,)] = c
    return UniPoly([MultiPoly(_XONLY, b) for b in buckets])


def _from_y(u: UniPoly) -> MultiPoly:
    terms = {}
    for j, cx in enumerate(u.coeffs):
        for (ex,), c in cx.terms.items():
            terms[(ex, j)] = c
    return MultiPoly(VARS2, terms)


def _content_y(u: UniPoly) -> MultiPoly:
    cont = MultiPoly.zero(_XONLY)
    for c in u.coeffs:
        if c:
            cont = _xgcd(cont, c) if cont else _primitive(c)
    return cont


def _primitive_y(u: UniPoly) -> UniPoly:
    cont = _content_y(u)
    if not cont or cont == MultiPoly.const(_XONLY, 1):
        return u
    return UniPoly([c.exact_div(cont) if c else c for c in u.coeffs])


def _prem(a: UniPoly, b: UniPoly) -> UniPoly:
    """Pseudo-remainder of a by b over Q[x] (no coefficient inversion)."""
    db = b.degree()
    lead_b = b.lead()
    r = a
    while r and r.degree() >= db:
        lead_r = r.lead()
        shift = r.degree() - db
        r = r * lead_b - b.shifted(shift) * lead_r
    return r


def gcd_bivariate(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    """Gcd in Q[x, y], primitive with positive leading coefficient.

    Primitive polynomial remainder sequence in y over Q[x]; the univariate
    contents are combined by the ordinary Euclid gcd.
    """
    if not p and not q:
        return MultiPoly.zero(VARS2)
    if not p:
        return _primitive(q)
    if not q:
        return _primitive(p)
    a = _to_y(p)
    b = _to_y(q)
    cont = _xgcd(_content_y(a), _content_y(b))
    a = _primitive_y(a)
    b = _primitive_y(b)
    if a.degree() < b.degree():
        a, b = b, a
    while b and b.degree() > 0:
        r = _prem(a, b)
        a, b = b, (_primitive_y(r) if r else UniPoly([]))
    if b:
        gy = UniPoly([MultiPoly.const(_XONLY, 1)])
    else:
        gy = a
    cont2 = MultiPoly(VARS2, {(ex, 0): c for (ex,), c in cont.terms.items()})
    return _primitive(_from_y(gy) * cont2)


def saturate(v: VectorFieldGerm) -> tuple[VectorFieldGerm, Optional[MultiPoly]]:
    """Divide out the gcd of the components; returns the removed factor."""
    g = gcd_bivariate(v.p_comp, v.q_comp)
    if g.degree() <= 0:
        return v, None
    return (
        VectorFieldGerm(v.p_comp.exact_div(g), v.q_comp.exact_div(g), v.jet_order),
        g,
    )


# -- Seidenberg reduction ------------------------------------------------------

STATUS_REDUCED = "reduced"
STATUS_BLOWN_UP = "blown_up"
STATUS_REGULAR = "regular"
STATUS_DEPTH_EXCEEDED = "depth_exceeded"
STATUS_IRRATIONAL = "irrational_direction"


@dataclass
class BlowUpNode:
    germ: VectorFieldGerm
    depth: int
    site: str
    status: str
    classification: Optional[SingClass] = None
    removed_factor: Optional[MultiPoly] = None
    dicritical: Optional[bool] = None
    division_exponent: Optional[int] = None
    irrational_factor: Optional[str] = None
    children: list = field(default_factory=list)

    def is_leaf(self) -> bool:
        return not self.children

    def label(self) -> str:
        if self.status == STATUS_REGULAR:
            return "regular after saturation"
        if self.status == STATUS_REDUCED:
            cls = self.classification
            ratio = "none" if cls.ratio is None else str(cls.ratio)
            return f"{cls.tag.value} (trace={cls.trace}, det={cls.det}, ratio={ratio})"
        if self.status == STATUS_BLOWN_UP:
            kind = "dicritical" if self.dicritical else "non-dicritical"
            return f"NonReduced -> blow-up ({kind}, order division x^{self.division_exponent})"
        if self.status == STATUS_DEPTH_EXCEEDED:
            return "NonReduced (depth bound reached)"
        return f"non-rational singular directions: {self.irrational_factor}"


@dataclass
class BlowUpTree:
    root: BlowUpNode
    max_depth: int

    def walk(self):
        stack = [self.root]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))

    def leaves(self) -> list[BlowUpNode]:
        return [n for n in self.walk() if n.is_leaf()]

    def all_resolved(self) -> bool:
        """Every branch ended in a reduced singularity or a regular point."""
        return all(
            n.status in (STATUS_REDUCED, STATUS_REGULAR, STATUS_BLOWN_UP)
            for n in self.walk()
        )

    def depth(self) -> int:
        return max(n.depth for n in self.walk())

    def render_text(self) -> str:
        lines = []

        def visit(node: BlowUpNode):
            indent = "  " * node.depth
            factor = f" [/ {node.removed_factor}]" if node.removed_factor is not None else ""
            lines.append(f"{indent}{node.site}: {node.germ}{factor} -> {node.label()}")
            for child in node.children:
                visit(child)

        visit(self.root)
        return "\n".join(lines)

    def to_dict(self) -> dict:
        def visit(node: BlowUpNode) -> dict:
            out = {
                "site": node.site,
                "p": str(node.germ.p_comp),
                "q": str(node.germ.q_comp),
                "status": node.status,
                "depth": node.depth,
                "children": [visit(c) for c in node.children],
            }
            if node.classification is not None:
                cls = node.classification
                out["class"] = cls.tag.value
                out["trace"] = str(cls.trace)
                out["det"] = str(cls.det)
                out["ratio"] = None if cls.ratio is None else str(cls.ratio)
            if node.removed_factor is not None:
                out["removed_factor"] = str(node.removed_factor)
            if node.dicritical is not None:
                out["dicritical"] = node.dicritical
                out["division_exponent"] = node.division_exponent
            if node.irrational_factor is not None:
                out["irrational_factor"] = node.irrational_factor
            return out

        return visit(self.root)


def reduce_singularities(v: VectorFieldGerm, max_depth: int = 12) -> BlowUpTree:
    """Blow up every non-reduced singularity until all leaves are reduced.

    Child germs are saturated before classification (the removed factor is
    recorded on the node).  Non-rational singular directions are recorded
    as structured leaves; hitting the depth bound raises DepthExceeded with
    the partial tree attached.
    """
    if max_depth < 0:
        raise DomainError("depth bound must be nonnegative")

    def build(germ: VectorFieldGerm, depth: int, site: str,
              removed: Optional[MultiPoly]) -> BlowUpNode:
        node = BlowUpNode(germ=germ, depth=depth, site=site, status=STATUS_REGULAR,
                          removed_factor=removed)
        if not germ.is_singular_at_origin():
            return node
        cls = classify(germ)
        node.classification = cls
        if cls.is_reduced:
            node.status = STATUS_REDUCED
            return node
        if depth >= max_depth:
            node.status = STATUS_DEPTH_EXCEEDED
            return node
        try:
            step = blow_up(germ)
        except IrrationalDirection as exc:
            node.status = STATUS_IRRATIONAL
            node.irrational_factor = str(exc.factor)
            return node
        node.status = STATUS_BLOWN_UP
        node.dicritical = step.dicritical
        node.division_exponent = step.division_exponent
        for t0, child in step.chart1_points:
            sat, fac = saturate(child)
            node.children.append(build(sat, depth + 1, f"chart1 t={t0}", fac))
        if step.chart2_point is not None:
            sat, fac = saturate(step.chart2_point)
            node.children.append(build(sat, depth + 1, "chart2 s=0", fac))
        return node

    tree = BlowUpTree(build(v, 0, "root", None), max_depth)
    if any(n.status == STATUS_DEPTH_EXCEEDED for n in tree.walk()):
        raise DepthExceeded(tree)
    return tree


# -- saddle-node multiplicity --------------------------------------------------


@dataclass(frozen=True)
class AtLeast:
    """Lower bound returned when the multiplicity exceeds the jet order."""

    order: int

    def __str__(self) -> str:
        return f"at least {self.order}"


def _kernel_vector(m) -> tuple[Fraction, Fraction]:
    (m00, m01), (m10, m11) = m
    if m00 or m01:
        return (-m01, m00)
    if m10 or m11:
        return (-m11, m10)
    raise ValueError("zero matrix has no distinguished kernel line")


def _truncate(u: UniPoly, n: int) -> UniPoly:
    return UniPoly(u.coeffs[: n + 1])


def _eval_on_curve(poly: MultiPoly, phi: UniPoly, trunc: int) -> UniPoly:
    """Substitute x = phi(w), y = w, truncating at degree trunc."""
    powers: dict[int, UniPoly] = {0: UniPoly([Fraction(1)])}

    def phi_pow(k: int) -> UniPoly:
        if k not in powers:
            powers[k] = _truncate(phi_pow(k - 1) * phi, trunc)
        return powers[k]

    total = UniPoly([])
    for (ex, ey), c in sorted(poly.terms.items()):
        if ey > trunc:
            continue
        term = phi_pow(ex).shifted(ey) * c
        total = total + _truncate(term, trunc)
    return _truncate(total, trunc)


def _min_order_uni(u: UniPoly) -> int:
    for k, c in enumerate(u.coeffs):
        if c:
            return k
    raise ValueError("zero polynomial")


def saddle_node_multiplicity(v: VectorFieldGerm, jet_order: int = 12):
    """Multiplicity of a saddle-node: vanishing order along the center curve.

    After an exact linear change sending the nonzero eigendirection to the
    first axis, the formal invariant curve tangent to the zero
    eigendirection is computed order by order; the returned value is the
    vanishing order of the second component along it (the exponent d of
    the normal form z d/dz + w^d d/dw).  AtLeast(jet_order) is returned
    when the order is not visible at the requested truncation.
    """
    cls = classify(v)
    if cls.tag is not SingTag.SADDLE_NODE:
        raise NotSaddleNode(f"classification is {cls.tag.value}, need SaddleNode")
    if jet_order < 2:
        raise DomainError("jet order must be at least 2")
    a_mat = v.linear_part()
    tau = cls.trace
    # eigenvector for tau spans the image direction, kernel vector for 0
    shifted = ((a_mat[0][0] - tau, a_mat[0][1]), (a_mat[1][0], a_mat[1][1] - tau))
    v_tau = _kernel_vector(shifted)
    v_zero = _kernel_vector(a_mat)
    s = ((v_tau[0], v_zero[0]), (v_tau[1], v_zero[1]))
    w = linear_change(v, s)
    z_comp, w_comp = w.p_comp, w.q_comp
    # sanity: the conjugated linear part must be diag(tau, 0)
    assert z_comp.coeff((1, 0)) == tau and not z_comp.coeff((0, 1))
    assert not w_comp.coeff((1, 0)) and not w_comp.coeff((0, 1))

    phi = UniPoly([])
    for _ in range(jet_order + 2):
        z_on = _eval_on_curve(z_comp, phi, jet_order)
        w_on = _eval_on_curve(w_comp, phi, jet_order)
        mismatch = _truncate(z_on - phi.derivative() * w_on, jet_order)
        if not mismatch:
            break
        k = _min_order_uni(mismatch)
        correction = [Fraction(0)] * k + [-mismatch.coeff(k) / tau]
        phi = phi + UniPoly(correction)
    restricted = _eval_on_curve(w_comp, phi, jet_order)
    if not restricted:
        return AtLeast(jet_order)
    return _min_order_uni(restricted)


# -- index count on an invariant line -------------------------------------------


def invariant_line_count(v: VectorFieldGerm) -> tuple[int, int]:
    """Total singularity multiplicity of the field along the line {y = 0}.

    The line is invariant when Q(x, 0) vanishes identically.  The count is
    the sum of the vanishing orders of the restricted tangential component
    P(x, 0) at its (rational) zeros, plus the order at the infinity point
    of the line computed in the standard second chart; for a degree-k
    field the expected total is k + 1.
    """
    q_on_line = v.q_comp.subs({"y": 0})
    if q_on_line:
        raise NotInvariant("Q(x, 0) is not identically zero; the line y = 0 is not invariant")
    g_poly = v.p_comp.subs({"y": 0})
    if not g_poly:
        raise DomainError("the field vanishes identically along the line")
    g = _restrict_chart_line(g_poly, "y")
    k = max(v.p_comp.degree(), v.q_comp.degree())
    roots, residual = rational_roots(g)
    if residual.degree() > 0:
        raise IrrationalSingularity(residual.to_string("x"))
    affine = sum(mult for _, mult in roots)
    # in the chart at infinity the tangential component is u * u^k g(1/u),
    # whose vanishing order at u = 0 is 1 + (k - deg g)
    at_infinity = 1 + (k - g.degree())
    return affine + at_infinity, k + 1
