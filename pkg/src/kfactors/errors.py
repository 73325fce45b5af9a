"""Exception types shared across the toolkit."""


class KFactorsError(Exception):
    """Base class for every domain error raised by this package."""


class NotGraphic(KFactorsError):
    """Sequence fails the Erdos-Gallai graphicality test."""


class KTooLarge(KFactorsError):
    """Elementwise subtraction of k would produce a negative degree."""


class ConnectedBoundUnavailable(KFactorsError):
    """The connected-mode length bound 4/(2+b-a) needs a - b < 2."""


class RetriesExhausted(KFactorsError):
    """No acceptable sequence found within the retry budget."""


class ParityUnfixable(KFactorsError):
    """No final value in [b, a] can make the degree sum even."""


class KFactorabilityFailed(KFactorsError):
    """Re-draws never produced a sequence whose d - k is graphic."""


class NoValidX(KFactorsError):
    """No middle degree x in range gives an even total degree sum."""


class InvalidFamilyParams(KFactorsError):
    """A constraint of the (n-1, x, s) family template is violated."""


class InvalidPackingParams(KFactorsError):
    pass


class PackingFailed(KFactorsError):
    """The deterministic search found no matching edge-disjoint from the 2-factor."""


class InfeasibleRegular(KFactorsError):
    """No r-regular graph on n vertices exists (need r <= n-1 and nr even)."""


class NotFactorable(KFactorsError):
    """Sequence is not k-factorable for the requested k."""


class InvalidSwitch(KFactorsError):
    """Switch step does not apply to the given graph."""


class VertexCountMismatch(KFactorsError):
    pass


class SwitchNotFound(KFactorsError):
    """Internal assertion: the switching argument proves a switch always exists."""


class InconsistentReport(KFactorsError):
    """Internal assertion: a connected factor was computed for a sequence the
    Rao inequalities rule out; this would indicate an implementation bug."""
