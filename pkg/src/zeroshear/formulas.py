"""Closed-form systole-length and kissing-number bounds.

Every formula takes natural logarithms and lengths in the hyperbolic
metric.  Quantities come in three groups:

* horoball tangency lengths and upper bounds on systole length,
* pants quantities attached to a systole length l:
      d(l)   = 2 log cosh(l/4)          horoball distance of a two-cusp curve
      D(l)   = log(2 cosh(l/2)/sinh(l/2))  cusp distance of a cusp-bounding pair
      sin(theta_l)                          minimal crossing angle (piecewise)
      m(l)   = coth(l/2) * 2/sin(theta_l/2) per-cusp cap on co-bounding systoles
      r(l)   = arcsinh(1/(2 sinh(l/4)))     collar radius between disjoint systoles
      R(l)                                  crossing-point radius (piecewise)
      w(l)   = arcsinh(1/sinh(l/2))         cusp collar width
* kissing-number caps for the two-cusp / cusp-bounding / generic systole
  classes, their covering quantities F, G, H, and the packaged totals.

Validity ranges are enforced per formula: out-of-range requests are
reported as None fields with a reason, so partial reports stay usable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import (
    NoneApplicableError,
    NonPositiveRadiusError,
    SignatureError,
)

__all__ = [
    "Signature",
    "SysUpperBounds",
    "PantsQuantities",
    "KissCaps",
    "BoundReport",
    "horoball_tangency_lengths",
    "sys_upper",
    "genus_bound_cases",
    "genus_bound_case_table",
    "pants_quantities",
    "kiss_upper",
    "bound_report",
    "cosh_quarter_from_trace",
    "one_holed_torus_short_curve_bound",
    "LOG2",
    "TWO_ARCSINH_1",
    "ANGLE_BRANCH_LENGTH",
]

LOG2 = math.log(2.0)
TWO_ARCSINH_1 = 2.0 * math.asinh(1.0)
#: piecewise branch point for sin(theta_l) and R(l)
ANGLE_BRANCH_LENGTH = 2.0 * math.acosh(1.5)
#: universal constant in the signature-only kissing bound
KISS_UNIVERSAL_C = 2.0e4


@dataclass(frozen=True)
class Signature:
    """Genus and cusp count with 3g - 3 + n > 0."""

    genus: int
    cusps: int

    def __post_init__(self):
        if self.genus < 0 or self.cusps < 0:
            raise SignatureError(f"negative signature ({self.genus}, {self.cusps})")
        if 3 * self.genus - 3 + self.cusps <= 0:
            raise SignatureError(
                f"signature ({self.genus}, {self.cusps}) has 3g-3+n <= 0"
            )


def horoball_tangency_lengths(r: float) -> tuple[float, float]:
    """(two-cusp length, self-tangency length) at horoball expansion radius r.

    If the expanded cusp neighbourhoods of two cusps touch at radius r,
    the curve around both cusps has length 4 arccosh(e^r); if one is
    tangent to itself at r >= log 2, some curve has length at most
    2 arccosh(e^r - 1).  Below log 2 the self-tangency bound is the
    constant 2 arcsinh(1).
    """
    if r <= 0:
        raise NonPositiveRadiusError(f"radius must be positive, got {r}")
    two_cusp = 4.0 * math.acosh(math.exp(r))
    if r < LOG2:
        self_tangency = TWO_ARCSINH_1
    else:
        self_tangency = 2.0 * math.acosh(math.exp(r) - 1.0)
    return two_cusp, self_tangency


def genus_bound_cases(g: int) -> tuple[float, float, float]:
    """The three case values behind the 2 log g + K systole bound, g >= 1.

    case 1: many cusps        4 arccosh(sqrt(2 pi)(g-1)/sqrt(g) + pi)
    case 2: two close cusps   4 arccosh(sqrt(2 pi (g-1+sqrt(2 pi g))))
    case 3: cusp self-loop    2 arccosh(2 pi (g-1+sqrt(2 pi g)) - 1)
    """
    if g < 1:
        raise NoneApplicableError("case analysis needs genus >= 1")
    s = math.sqrt(2.0 * math.pi * g)
    case1 = 4.0 * math.acosh(math.sqrt(2.0 * math.pi) * (g - 1) / math.sqrt(g) + math.pi)
    case2 = 4.0 * math.acosh(math.sqrt(2.0 * math.pi * (g - 1 + s)))
    case3 = 2.0 * math.acosh(2.0 * math.pi * (g - 1 + s) - 1.0)
    return case1, case2, case3


def genus_bound_case_table(g_max: int = 10) -> list[dict]:
    """Audit rows for g = 1..g_max comparing the case maximum with 2 log g + 8.

    The packaged constant fails numerically at small genus (the case-2
    value exceeds 2 log g + 8 at g = 1); rows carry an ``exceeds`` flag
    so reports can surface the discrepancy without treating it as a
    computation failure.
    """
    rows = []
    for g in range(1, g_max + 1):
        c1, c2, c3 = genus_bound_cases(g)
        packaged = 2.0 * math.log(g) + 8.0
        rows.append(
            {
                "g": g,
                "case1": c1,
                "case2": c2,
                "case3": c3,
                "max": max(c1, c2, c3),
                "packaged": packaged,
                "exceeds": max(c1, c2, c3) > packaged,
            }
        )
    return rows


@dataclass(frozen=True)
class SysUpperBounds:
    """Every applicable systole-length upper bound plus their minimum.

    ``minimum`` ranges over the proof-backed candidates only (closed
    case, three-case maximum, Schmutz Schaller); the packaged
    2 log g + 8 is reported but never trusted for certification since
    the case maximum exceeds it at small genus.
    """

    closed_case: float | None
    three_cases: tuple[float, float, float] | None
    three_case_max: float | None
    schmutz_schaller: float | None
    packaged: float | None
    minimum: float
    minimum_source: str

    def candidates(self) -> dict[str, float]:
        out = {}
        if self.closed_case is not None:
            out["closed_case"] = self.closed_case
        if self.three_case_max is not None:
            out["three_case_max"] = self.three_case_max
        if self.schmutz_schaller is not None:
            out["schmutz_schaller"] = self.schmutz_schaller
        if self.packaged is not None:
            out["packaged"] = self.packaged
        return out


def sys_upper(sig: Signature) -> SysUpperBounds:
    """Evaluate every systole upper bound that applies to the signature.

    closed case (n = 0):        2 log g + 2 log 4
    three-case maximum (g >= 1, n >= 1): see :func:`genus_bound_cases`
    Schmutz Schaller (n >= 2):  4 arccosh((6g - 6 + 3n)/n)
    packaged (g >= 1):          2 log g + 8 (reported, not certified)
    """
    g, n = sig.genus, sig.cusps
    closed_case = 2.0 * math.log(g) + 2.0 * math.log(4.0) if n == 0 else None
    cases = genus_bound_cases(g) if (g >= 1 and n >= 1) else None
    case_max = max(cases) if cases else None
    schmutz = 4.0 * math.acosh((6.0 * g - 6.0 + 3.0 * n) / n) if n >= 2 else None
    packaged = 2.0 * math.log(g) + 8.0 if g >= 1 else None

    certified = {}
    if closed_case is not None:
        certified["closed_case"] = closed_case
    if case_max is not None:
        certified["three_case_max"] = case_max
    if schmutz is not None:
        certified["schmutz_schaller"] = schmutz
    if not certified:
        raise NoneApplicableError(f"no systole bound applies to ({g}, {n})")
    source = min(certified, key=certified.get)
    return SysUpperBounds(
        closed_case=closed_case,
        three_cases=cases,
        three_case_max=case_max,
        schmutz_schaller=schmutz,
        packaged=packaged,
        minimum=certified[source],
        minimum_source=source,
    )


# -- pants quantities -------------------------------------------------------------

def _sin_theta(length: float) -> float:
    if length < ANGLE_BRANCH_LENGTH:
        return 2.0 / math.sqrt(5.0)
    ch = math.cosh(length / 2.0)
    return math.sqrt(2.0 * ch + 1.0) / (ch + 1.0)


@dataclass(frozen=True)
class PantsQuantities:
    """The seven length-dependent pants quantities at systole length l."""

    d: float
    big_d: float
    sin_theta: float
    theta: float
    m: float
    r: float
    big_r: float
    w: float


def pants_quantities(length: float) -> PantsQuantities:
    """Evaluate d, D, sin(theta), m, r, R, w at a positive length.

    The piecewise branch for sin(theta) and R switches at
    2 arccosh(3/2), closed on the upper branch.
    """
    if length <= 0:
        raise ValueError(f"length must be positive, got {length}")
    half = length / 2.0
    quarter = length / 4.0
    d = 2.0 * math.log(math.cosh(quarter))
    big_d = math.log(2.0 * math.cosh(half) / math.sinh(half))
    sin_theta = _sin_theta(length)
    theta = math.asin(sin_theta)
    sin_half_theta = math.sin(theta / 2.0)
    m = (math.cosh(half) / math.sinh(half)) * 2.0 / sin_half_theta
    r = math.asinh(1.0 / (2.0 * math.sinh(quarter)))
    if length < ANGLE_BRANCH_LENGTH:
        sinh_big_r = 5.0 / (8.0 * math.sinh(quarter))
    else:
        ch = math.cosh(half)
        sinh_big_r = (ch + 1.0) / (2.0 * math.sinh(quarter) * math.sqrt(2.0 * ch + 1.0))
    big_r = math.asinh(sinh_big_r)
    w = math.asinh(1.0 / math.sinh(half))
    return PantsQuantities(
        d=d, big_d=big_d, sin_theta=sin_theta, theta=theta, m=m, r=r, big_r=big_r, w=w
    )


def one_holed_torus_short_curve_bound(boundary_length: float) -> float:
    """Length bound 2 arccosh(cosh(b/6) + 1/2) for the shortest interior
    closed geodesic of a one-holed torus with boundary length b.

    Documentation helper only; nothing downstream depends on it.
    """
    return 2.0 * math.acosh(math.cosh(boundary_length / 6.0) + 0.5)


# -- kissing caps ------------------------------------------------------------------

def cosh_quarter_from_trace(trace: int) -> float:
    """cosh(l/4) for l = 2 arccosh(trace/2), via the half-angle identity.

    Exact where the float square root is exact (e.g. trace 34 gives 3.0),
    which keeps floor-based caps free of drift.
    """
    return math.sqrt((trace / 2.0 + 1.0) / 2.0)


@dataclass(frozen=True)
class KissCaps:
    """Kissing-number caps at signature (g, n) and systole length l.

    Fields are None outside a formula's validity range, with the reason
    recorded in ``notes``.
    """

    a_cap: float
    a_cap_euler: float
    b_cap: float | None
    c_cap: float | None
    c_cap_branch: str
    covering_f: float
    covering_g: float
    covering_h: float
    total_by_length: float | None
    total_by_signature: float | None
    sphere: float | None
    notes: dict[str, str] = field(default_factory=dict)


def kiss_upper(sig: Signature, length: float, trace: int | None = None) -> KissCaps:
    """Evaluate every kissing-number cap at the given systole length.

    ``trace`` (the exact integer trace attaining the length) routes
    cosh(l/4) through the half-angle identity so that integer floors are
    exact.  Caps outside their range are None with a reason in notes.
    """
    if length <= 0:
        raise ValueError(f"length must be positive, got {length}")
    g, n = sig.genus, sig.cusps
    notes: dict[str, str] = {}
    pq = pants_quantities(length)
    cosh_quarter = (
        cosh_quarter_from_trace(trace) if trace is not None else math.cosh(length / 4.0)
    )

    a_cap = (n / 2.0) * math.floor(2.0 * cosh_quarter)
    a_cap_euler = 3.0 * (n + 2 * g - 2)

    not_1_1 = (g, n) != (1, 1)
    if not_1_1:
        b_cap = n * pq.m
    else:
        b_cap = None
        notes["b_cap"] = "excluded signature (1, 1)"

    covering_f = 8.0 * (2 * g - 2 + n) * math.exp(length / 2.0)
    covering_g = 5.0 * math.pi / (2.0 * math.asinh(pq.sin_theta))
    covering_h = length * math.sinh(length / 4.0)

    if g >= 1 and not_1_1:
        if length > TWO_ARCSINH_1:
            c_cap = 200.0 * math.exp(length / 2.0) / length * (2 * g - 2 + n)
            c_branch = "covering"
        else:
            c_cap = float(3 * g - 3 + n)
            c_branch = "disjointness"
        total_by_length = 20.0 * n * cosh_quarter + 200.0 * math.exp(length / 2.0) / length * (
            2 * g - 2 + n
        )
    else:
        c_cap = None
        c_branch = "inapplicable"
        total_by_length = None
        reason = "needs g >= 1" if g < 1 else "excluded signature (1, 1)"
        notes["c_cap"] = reason
        notes["total_by_length"] = reason

    if g >= 1:
        total_by_signature = KISS_UNIVERSAL_C * (g + n) * g / math.log(g + 1.0)
    else:
        total_by_signature = None
        notes["total_by_signature"] = "needs g >= 1"

    if g == 0:
        sphere = 3.5 * n - 5.0
    else:
        sphere = None
        notes["sphere"] = "needs g = 0"

    return KissCaps(
        a_cap=a_cap,
        a_cap_euler=a_cap_euler,
        b_cap=b_cap,
        c_cap=c_cap,
        c_cap_branch=c_branch,
        covering_f=covering_f,
        covering_g=covering_g,
        covering_h=covering_h,
        total_by_length=total_by_length,
        total_by_signature=total_by_signature,
        sphere=sphere,
        notes=notes,
    )


# -- combined report ---------------------------------------------------------------

@dataclass(frozen=True)
class BoundReport:
    """Everything evaluable at a signature and optional systole length."""

    signature: Signature
    length: float | None
    trace: int | None
    sys: SysUpperBounds
    pants: PantsQuantities | None
    kiss: KissCaps | None

    def to_dict(self) -> dict:
        out = {
            "genus": self.signature.genus,
            "cusps": self.signature.cusps,
            "length": self.length,
            "trace": self.trace,
            "sys_upper": {
                "closed_case": self.sys.closed_case,
                "three_cases": list(self.sys.three_cases) if self.sys.three_cases else None,
                "three_case_max": self.sys.three_case_max,
                "schmutz_schaller": self.sys.schmutz_schaller,
                "packaged": self.sys.packaged,
                "minimum": self.sys.minimum,
                "minimum_source": self.sys.minimum_source,
            },
        }
        if self.pants is not None:
            out["pants"] = {
                "d": self.pants.d,
                "D": self.pants.big_d,
                "sin_theta": self.pants.sin_theta,
                "theta": self.pants.theta,
                "m": self.pants.m,
                "r": self.pants.r,
                "R": self.pants.big_r,
                "w": self.pants.w,
            }
        if self.kiss is not None:
            out["kiss_upper"] = {
                "a_cap": self.kiss.a_cap,
                "a_cap_euler": self.kiss.a_cap_euler,
                "b_cap": self.kiss.b_cap,
                "c_cap": self.kiss.c_cap,
                "c_cap_branch": self.kiss.c_cap_branch,
                "covering_f": self.kiss.covering_f,
                "covering_g": self.kiss.covering_g,
                "covering_h": self.kiss.covering_h,
                "total_by_length": self.kiss.total_by_length,
                "total_by_signature": self.kiss.total_by_signature,
                "sphere": self.kiss.sphere,
                "notes": dict(self.kiss.notes),
            }
        return out


def bound_report(
    genus: int, cusps: int, length: float | None = None, trace: int | None = None
) -> BoundReport:
    """Assemble the full report for (g, n) and an optional systole length.

    A trace without a length fixes length = 2 arccosh(trace/2).
    """
    sig = Signature(genus, cusps)
    if length is None and trace is not None:
        length = 2.0 * math.acosh(trace / 2.0)
    return BoundReport(
        signature=sig,
        length=length,
        trace=trace,
        sys=sys_upper(sig),
        pants=pants_quantities(length) if length is not None else None,
        kiss=kiss_upper(sig, length, trace) if length is not None else None,
    )
