"""Exception hierarchy.

Every error raised on purpose by the toolkit derives from :class:`QuiverSerreError`
so the CLI can map it to an exit code without catching programming errors.
"""


class QuiverSerreError(Exception):
    """Base class for toolkit errors."""


class DimensionMismatch(QuiverSerreError, ValueError):
    pass


class MalformedRelation(QuiverSerreError, ValueError):
    pass


class NonAdmissible(QuiverSerreError):
    """The relation ideal was not seen to contain all long paths within the length cap."""


class NotDirected(QuiverSerreError, ValueError):
    pass


class NonSplit(QuiverSerreError):
    """An endomorphism ring has a semisimple part that is not split over the rationals."""


class ResolutionCapExceeded(QuiverSerreError):
    pass


# the derived layer calls it by this name
CapExceeded = ResolutionCapExceeded


class StratificationInvalid(QuiverSerreError):
    """Constructive and homological flag criteria disagreed."""


class NotStratified(QuiverSerreError):
    pass


class NonTerminating(QuiverSerreError):
    pass


class QNotProjective(QuiverSerreError, ValueError):
    pass


class NotProjectiveInjective(QuiverSerreError, ValueError):
    pass


class PreconditionFailed(QuiverSerreError):
    """A theorem check was asked for on an input violating its hypotheses.

    Attributes:
        hypothesis: short machine-readable name of the failed hypothesis.
    """

    def __init__(self, hypothesis: str, detail: str = ""):
        self.hypothesis = hypothesis
        self.detail = detail
        self.failures = [hypothesis]
        super().__init__(f"{hypothesis}: {detail}" if detail else hypothesis)


class DoubleCentraliserMissing(PreconditionFailed):
    def __init__(self, detail: str = ""):
        super().__init__("doubleCentraliser", detail)


class UnknownEntry(QuiverSerreError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else ""


class Mismatch(QuiverSerreError):
    """A zoo entry's computed report differs from its recorded expectation."""

    def __init__(self, entry: str, field: str, expected, actual):
        self.entry = entry
        self.field = field
        self.expected = expected
        self.actual = actual
        super().__init__(f"{entry}: field {field!r} expected {expected!r}, got {actual!r}")
