"""Upper half-plane numerical geometry, used as an independent oracle.

Constructions here rebuild the trigonometric configurations behind the
bound formulas from raw coordinates (circle intersections, explicit
group elements) and measure lengths with the distance formula

    cosh d(p, q) = 1 + |p - q|^2 / (2 p.y q.y),

so agreement with the closed forms is a genuine cross-check rather than
an algebraic identity.  Conventions: the cusp under scrutiny is placed
at infinity with its area-2 horoball bounded by y = 1; the expanded
neighbourhood of radius r is bounded by y = e^(-r).

Tolerances: closed-form comparisons hold to 1e-9; quantities found by
search (bisection, golden section) to 1e-6.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    AreaSplitRangeError,
    DegenerateConfigError,
    InvalidTriangleError,
    NonPositiveRadiusError,
    VerificationError,
)

__all__ = [
    "HPoint",
    "HGeodesic",
    "Horocycle",
    "hdist",
    "geodesic_through",
    "mobius_apply",
    "translation_length",
    "verify_two_cusp_pants",
    "verify_self_tangency",
    "SelfTangencyResult",
    "horocyclic_arc",
    "verify_angle_relation",
    "golden_section_min",
    "TWO_CUSP_RADIUS_NOTE",
]

CLOSED_FORM_TOL = 1e-9
SEARCH_TOL = 1e-6

#: resolution of the circle-radius ambiguity in the two-cusp quadrilateral:
#: the circle through q = i e^(-r) orthogonal to x = 0 has radius e^(-r).
TWO_CUSP_RADIUS_NOTE = (
    "two-cusp quadrilateral built with C1 radius e^(-r), the value forced by "
    "q = i e^(-r) lying on C1; the measured side then satisfies "
    "cosh d(t, s) = e^r"
)


@dataclass(frozen=True)
class HPoint:
    """A point x + iy of the upper half-plane (y > 0)."""

    x: float
    y: float

    def __post_init__(self):
        if not self.y > 0:
            raise ValueError(f"point must have y > 0, got {self.y}")


@dataclass(frozen=True)
class HGeodesic:
    """A complete geodesic: vertical line x = c, or semicircle (c, radius)."""

    center: float
    radius: float | None  # None encodes the vertical line

    @property
    def vertical(self) -> bool:
        return self.radius is None


@dataclass(frozen=True)
class Horocycle:
    """Horizontal line y = height (cusp at infinity) or circle tangent to
    the real axis at ``tangency`` with euclidean ``diameter``."""

    height: float | None = None
    tangency: float | None = None
    diameter: float | None = None

    def __post_init__(self):
        if self.height is not None:
            if self.height <= 0:
                raise ValueError("horocycle height must be positive")
        elif self.diameter is None or self.diameter <= 0:
            raise ValueError("tangent horocycle needs a positive diameter")


def hdist(p: HPoint, q: HPoint) -> float:
    """Hyperbolic distance: cosh d = 1 + |p - q|^2 / (2 p.y q.y)."""
    dx = p.x - q.x
    dy = p.y - q.y
    return math.acosh(1.0 + (dx * dx + dy * dy) / (2.0 * p.y * q.y))


def geodesic_through(p: HPoint, q: HPoint) -> HGeodesic:
    """The complete geodesic through two distinct points."""
    if math.isclose(p.x, q.x, abs_tol=1e-14):
        return HGeodesic(center=p.x, radius=None)
    # center c satisfies |p - c|^2 = |q - c|^2 on the real axis
    c = (q.x * q.x + q.y * q.y - p.x * p.x - p.y * p.y) / (2.0 * (q.x - p.x))
    return HGeodesic(center=c, radius=math.hypot(p.x - c, p.y))


def mobius_apply(m, p: HPoint) -> HPoint:
    """Apply a real unimodular matrix (a, b, c, d) as z -> (az+b)/(cz+d)."""
    a, b, c, d = m
    zx, zy = p.x, p.y
    den = (c * zx + d) ** 2 + (c * zy) ** 2
    nx = (a * zx + b) * (c * zx + d) + a * c * zy * zy
    ny = (a * d - b * c) * zy
    return HPoint(nx / den, ny / den)


def _axis(m) -> HGeodesic:
    """Axis of a hyperbolic matrix: the geodesic joining its fixed points."""
    a, b, c, d = m
    if abs(a + d) <= 2.0:
        raise DegenerateConfigError(f"matrix trace {a + d} is not hyperbolic")
    if abs(c) < 1e-15:
        raise DegenerateConfigError("axis through infinity; conjugate first")
    disc = (d - a) ** 2 + 4.0 * b * c
    if disc <= 0:
        raise DegenerateConfigError("complex fixed points")
    x1 = ((a - d) - math.sqrt(disc)) / (2.0 * c)
    x2 = ((a - d) + math.sqrt(disc)) / (2.0 * c)
    lo, hi = min(x1, x2), max(x1, x2)
    return HGeodesic(center=(lo + hi) / 2.0, radius=(hi - lo) / 2.0)


def translation_length(m) -> float:
    """Translation length measured as d(p, m p) for p on the axis."""
    axis = _axis(m)
    p = HPoint(axis.center, axis.radius)
    return hdist(p, mobius_apply(m, p))


def golden_section_min(f, lo, hi, tol=1e-12, max_iter=200):
    """Golden-section minimum of a unimodal function on [lo, hi]."""
    inv_phi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c = b - inv_phi * (b - a)
    d = a + inv_phi * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(max_iter):
        if b - a < tol:
            break
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - inv_phi * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + inv_phi * (b - a)
            fd = f(d)
    x = (a + b) / 2.0
    return x, f(x)


# -- the two-cusp quadrilateral --------------------------------------------------

def verify_two_cusp_pants(r: float) -> float:
    """Length of the curve around two cusps whose expanded horoballs touch
    at radius r, measured from the quadrilateral construction.

    Ideal vertex at infinity, sides on x = 0 and x = 1, horocycle y = 1,
    q = i e^(-r) at depth r below it; C1 (center 0) passes through q and
    is orthogonal to x = 0, C2 (center 1) is orthogonal to x = 1 and to
    C1.  Returns 4 d(t, s) for s = C1 n C2 and t the top of C2; the
    construction forces C1's radius to e^(-r) (see TWO_CUSP_RADIUS_NOTE).
    """
    if r <= 0:
        raise NonPositiveRadiusError(f"radius must be positive, got {r}")
    r1 = math.exp(-r)
    r2_sq = 1.0 - r1 * r1  # orthogonality: centers at distance 1
    if r2_sq <= 0:
        raise DegenerateConfigError(f"circles degenerate at r = {r}")
    # depth check: q = i e^(-r) is at distance r below p = i
    q = HPoint(0.0, r1)
    if abs(hdist(HPoint(0.0, 1.0), q) - r) > CLOSED_FORM_TOL:
        raise VerificationError("horoball depth mismatch")  # pragma: no cover
    # intersection of x^2 + y^2 = r1^2 with (x-1)^2 + y^2 = r2^2
    sx = r1 * r1
    sy_sq = r1 * r1 - sx * sx
    if sy_sq <= 0:
        raise DegenerateConfigError(f"circles fail to intersect at r = {r}")
    s = HPoint(sx, math.sqrt(sy_sq))
    t = HPoint(1.0, math.sqrt(r2_sq))
    for circle_center, circle_r2, pt in ((0.0, r1 * r1, s), (1.0, r2_sq, s)):
        if abs((pt.x - circle_center) ** 2 + pt.y**2 - circle_r2) > 1e-12:
            raise VerificationError("intersection point off circle")  # pragma: no cover
    return 4.0 * hdist(t, s)


# -- the self-tangent horoball pants ----------------------------------------------

@dataclass(frozen=True)
class SelfTangencyResult:
    """Measured data of the pants cut out by a self-tangent horoball.

    ``length_a`` / ``length_b`` are the boundary lengths (0.0 with the
    matching degenerate flag when the corresponding trace degenerates to
    parabolic), ``cusp_to_alpha`` the distance from the area-2 horocycle
    to the shorter boundary geodesic.
    """

    length_a: float
    length_b: float
    degenerate_a: bool
    degenerate_b: bool
    cusp_to_alpha: float | None


def verify_self_tangency(r: float, a: float) -> SelfTangencyResult:
    """Boundary lengths of the pants with one cusp whose radius-r
    neighbourhood is tangent to itself, horoball area split a : 1-a.

    Constructed as an explicit group: the cusp is z -> z + 2 (so the
    area-2 horoball is y > 1), and the loop element g maps infinity to
    the tangency point with |c entry| = e^r, lower-right entry -2 a e^r.
    The two boundary lengths are measured as translation lengths of g
    and (z+2) g; the horoball split and the tangency of g's image of
    y = e^(-r) are verified numerically before measuring.
    """
    if not 0.0 < a <= 0.5 + 1e-12:
        raise AreaSplitRangeError(f"area split must lie in (0, 1/2], got {a}")
    if r < math.log(2.0) - 1e-12:
        raise DegenerateConfigError(
            f"self-tangency configuration needs r >= log 2, got {r}"
        )
    er = math.exp(r)
    loop = (0.0, -1.0 / er, er, -2.0 * a * er)  # det = +1
    trans_loop = (loop[0] + 2.0 * loop[2], loop[1] + 2.0 * loop[3], loop[2], loop[3])

    # tangency: the loop element sends the horoball y > e^(-r) to a ball
    # tangent to the real axis at 0 with euclidean diameter 1/(c^2 e^(-r))
    diameter = 1.0 / (loop[2] ** 2 * math.exp(-r))
    if abs(diameter - math.exp(-r)) > CLOSED_FORM_TOL:
        raise VerificationError("self-tangency depth mismatch")  # pragma: no cover

    degenerate_a = a * er <= 1.0 + 1e-12
    degenerate_b = (1.0 - a) * er <= 1.0 + 1e-12

    length_a = 0.0
    cusp_to_alpha = None
    if not degenerate_a:
        axis_a = _axis(loop)
        # the perpendicular from the cusp must hit alpha at x = a: the
        # horoball width between the cut verticals is the area split
        if abs(axis_a.center - a) > CLOSED_FORM_TOL:
            raise VerificationError("horoball area split mismatch")  # pragma: no cover
        length_a = translation_length(loop)
        top = HPoint(axis_a.center, axis_a.radius)
        cusp_to_alpha = hdist(HPoint(axis_a.center, 1.0), top)
    length_b = 0.0
    if not degenerate_b:
        axis_b = _axis(trans_loop)
        if abs(axis_b.center - (1.0 + a)) > CLOSED_FORM_TOL:
            raise VerificationError("beta foot mismatch")  # pragma: no cover
        length_b = translation_length(trans_loop)

    return SelfTangencyResult(
        length_a=length_a,
        length_b=length_b,
        degenerate_a=degenerate_a,
        degenerate_b=degenerate_b,
        cusp_to_alpha=cusp_to_alpha,
    )


# -- the three-cusp horocyclic arc --------------------------------------------------

def _horoball_gap(separation: float, diameter: float) -> float:
    """Distance between two horoballs of equal diameter tangent to the real
    axis at 0 and at ``separation``, by nested golden-section search over
    boundary points (no distance formula for horoballs assumed)."""
    rad = diameter / 2.0

    def on_ball(tangency, sign, t):
        # angle parameter from the top; sign picks the side facing the other ball
        return HPoint(tangency + sign * rad * math.sin(t), rad * (1.0 + math.cos(t)))

    eps = 1e-9

    def outer(t1):
        p = on_ball(0.0, +1.0, t1)
        _, best = golden_section_min(
            lambda t2: hdist(p, on_ball(separation, -1.0, t2)), eps, math.pi - eps
        )
        return best

    _, gap = golden_section_min(outer, eps, math.pi - eps)
    return gap


def horocyclic_arc(length: float) -> float:
    """Minimal horocycle arc between the feet of the two distance-realizing
    segments in the three-cusp configuration at systole length ``length``.

    The center cusp sits at infinity with horocycle y = 1; the other two
    horoballs hang at depth d(length) = 2 log cosh(length/4) below it, at
    separation s, constrained to be at least d(length) apart from each
    other.  The minimal arc (found by bisection on the measured horoball
    gap) satisfies arc >= 1/cosh(length/4), with equality at the
    constraint boundary.
    """
    if length <= 0:
        raise ValueError(f"length must be positive, got {length}")
    d = 2.0 * math.log(math.cosh(length / 4.0))
    diameter = math.exp(-d)

    def measured_gap(separation):
        return _horoball_gap(separation, diameter)

    lo, hi = diameter, 2.0
    if measured_gap(hi) < d:  # pragma: no cover - never at desk scale
        raise DegenerateConfigError("separation bracket too small")
    for _ in range(200):
        mid = (lo + hi) / 2.0
        if hi - lo < 1e-12:
            break
        if measured_gap(mid) >= d:
            hi = mid
        else:
            lo = mid
    return hi  # arc length along y = 1 equals the euclidean separation


# -- the right-triangle angle relation ------------------------------------------------

def _tangent_dir(g: HGeodesic, p: HPoint, towards: HPoint):
    """Unit tangent of the geodesic at p, pointing towards the second point."""
    if g.vertical:
        v = (0.0, 1.0 if towards.y > p.y else -1.0)
    else:
        # tangent is perpendicular to the radius
        rx, ry = p.x - g.center, p.y
        v = (-ry, rx)
        towards_v = (towards.x - p.x, towards.y - p.y)
        if v[0] * towards_v[0] + v[1] * towards_v[1] < 0:
            v = (ry, -rx)
    norm = math.hypot(*v)
    return (v[0] / norm, v[1] / norm)


def verify_angle_relation(length: float, h: float) -> float:
    """Angle with sin(angle) = sinh(h/2)/sinh(length/2), verified against a
    numerically built right triangle (hypotenuse length/2, opposite h/2).

    Raises InvalidTriangleError when sinh(h/2) > sinh(length/2).
    """
    if length <= 0 or h <= 0:
        raise InvalidTriangleError("lengths must be positive")
    ratio = math.sinh(h / 2.0) / math.sinh(length / 2.0)
    if ratio > 1.0 + 1e-12:
        raise InvalidTriangleError(f"sinh(h/2) exceeds sinh(l/2) (ratio {ratio})")
    angle = math.asin(min(ratio, 1.0))
    if ratio > 1.0 - 1e-9:
        return angle  # degenerate triangle; nothing to build

    # right angle at C = i: leg to B up the imaginary axis, leg to A along
    # the unit circle, A chosen by bisection so that d(A, B) = length/2
    c = HPoint(0.0, 1.0)
    b = HPoint(0.0, math.exp(h / 2.0))

    def a_point(t):
        return HPoint(math.sin(t), math.cos(t))

    target = length / 2.0
    lo, hi = 1e-9, math.pi / 2.0 - 1e-9
    if hdist(a_point(hi), b) < target:  # pragma: no cover
        raise InvalidTriangleError("triangle bracket failed")
    for _ in range(200):
        mid = (lo + hi) / 2.0
        if hi - lo < 1e-15:
            break
        if hdist(a_point(mid), b) < target:
            lo = mid
        else:
            hi = mid
    a = a_point((lo + hi) / 2.0)

    to_b = _tangent_dir(geodesic_through(a, b), a, b)
    to_c = _tangent_dir(geodesic_through(a, c), a, c)
    measured = math.acos(max(-1.0, min(1.0, to_b[0] * to_c[0] + to_b[1] * to_c[1])))
    if abs(measured - angle) > CLOSED_FORM_TOL:
        raise VerificationError(
            f"measured angle {measured} vs arcsin formula {angle} at (l={length}, h={h})"
        )
    return angle
