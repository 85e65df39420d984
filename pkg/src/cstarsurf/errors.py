"""Exception hierarchy.

``CstarError`` is the base for all domain errors; ``ParseError`` is raised by
the notation/JSON readers.  The CLI maps domain errors to exit code 1 and
parse errors to exit code 2.
"""


class CstarError(Exception):
    """Base class for all domain errors."""


class ParseError(CstarError):
    """Malformed bracket notation or JSON input."""


# -- exact arithmetic / continued fractions ---------------------------------

class ZeroTail(CstarError):
    """A tail of a continued fraction evaluated to zero."""


class NotCoprime(CstarError):
    """gcd(m, e) != 1 where coprimality is required."""


class OutOfRange(CstarError):
    """A residue argument lies outside the required range."""


# -- graph calculus ----------------------------------------------------------

class SiteNotFound(CstarError):
    """Blowup site does not exist in the graph."""


class NotMinusOne(CstarError):
    """Blowdown requested at a vertex of weight != -1."""


class Branching(CstarError):
    """Blowdown requested at a vertex of degree >= 3."""


class NotZero(CstarError):
    """Elementary transformation requested at a vertex of nonzero weight."""


class NotLinear(CstarError):
    """Operation requires a linear (resp. end/interior) position."""


class NotNegativeSemidefiniteEnough(CstarError):
    """Intersection form has more than one positive eigenvalue."""


class CannotStandardize(CstarError):
    """No standard form is reachable (e.g. negative definite chain)."""


class ChainEntryBelowTwo(CstarError):
    """A contracted chain entry is < 2."""


# -- DPD pairs ---------------------------------------------------------------

class UnsupportedBase(CstarError):
    """Base curve outside the supported range for this operation."""


class ConstraintViolated(CstarError):
    """D+(p) + D-(p) > 0 at some point."""


class NotAmple(CstarError):
    """Elliptic construction requires deg D > 0."""


# -- classification ----------------------------------------------------------

class NotStandard(CstarError):
    """Zigzag does not match the standard grammar."""


class NotGizatullin(CstarError):
    """Pair does not present a Gizatullin surface."""


class NegativeRank(CstarError):
    """Component counts give a negative Picard rank (degenerate input)."""
