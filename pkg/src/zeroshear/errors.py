"""Exception types shared across the package."""


class ZeroShearError(Exception):
    """Base class for every error raised by this package."""


# -- surface construction -------------------------------------------------

class UnpairedSideError(ZeroShearError):
    """A triangle side is unglued, doubly glued, or glued to itself."""


class NonOrientableError(ZeroShearError):
    """No consistent orientation exists for the glued triangles.

    Unreachable for tables in the standard file format, whose gluing
    convention (every gluing reverses the induced boundary orientation)
    forces orientability; kept for API completeness.
    """


class DisconnectedError(ZeroShearError):
    """The glued surface is not connected."""


class UnknownPresetError(ZeroShearError):
    """Preset name is not one of torus16, genus, sphere4."""


class BadGenusError(ZeroShearError):
    """The genus preset needs g >= 2."""


class SurfaceFormatError(ZeroShearError):
    """A surface file could not be parsed."""


# -- turn words ------------------------------------------------------------

class PeripheralWordError(ZeroShearError):
    """Trace-2 word: the class is a cusp loop and has no geodesic length."""


class TraceOverflowError(ZeroShearError):
    """Checked fixed-width trace arithmetic exceeded its range.

    Not raised in practice: the compiled kernel detects the condition and
    enumeration transparently re-runs the affected search through the
    arbitrary-precision pure-Python kernel; kept for API completeness.
    """


# -- walks and enumeration --------------------------------------------------

class BacktrackingError(ZeroShearError):
    """A walk immediately reverses an edge."""


class NotAWalkError(ZeroShearError):
    """A dart sequence is not a closed walk on the graph."""


class NonPrimitiveWalkError(ZeroShearError):
    """The walk is a proper power of a shorter closed walk."""


class BudgetExceededError(ZeroShearError):
    """The enumeration node cap was hit; the result set is incomplete."""

    def __init__(self, message, partial=(), nodes=0):
        super().__init__(message)
        self.partial = tuple(partial)
        self.nodes = nodes


class NoEssentialCurveError(ZeroShearError):
    """No non-peripheral class exists below the requested trace budget."""


# -- curve topology ----------------------------------------------------------

class NotSimpleError(ZeroShearError):
    """Surgery requires a walk with zero self-crossings."""


class PeripheralCurveError(ZeroShearError):
    """Surgery requires an essential (non cusp-loop) walk."""


# -- bound formulas -----------------------------------------------------------

class SignatureError(ZeroShearError):
    """(g, n) with 3g - 3 + n <= 0 carries no hyperbolic structure in scope."""


class NoneApplicableError(ZeroShearError):
    """No systole upper bound formula applies to the signature."""


class SignatureOutOfRangeError(ZeroShearError):
    """A bound formula was requested outside its validity range."""


# -- half-plane oracle ----------------------------------------------------------

class NonPositiveRadiusError(ZeroShearError):
    """Horoball expansion radius must be positive."""


class DegenerateConfigError(ZeroShearError):
    """The requested half-plane configuration degenerates."""


class AreaSplitRangeError(ZeroShearError):
    """Horoball area split must lie in (0, 1/2]."""


class InvalidTriangleError(ZeroShearError):
    """Right-triangle data violates sinh(h/2) <= sinh(l/2)."""


class VerificationError(ZeroShearError):
    """A numerically measured quantity disagrees with its closed form."""


# -- CLI ----------------------------------------------------------------------

class UsageError(ZeroShearError):
    """Bad command line; maps to exit code 1."""
