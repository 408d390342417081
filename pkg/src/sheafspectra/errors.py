"""Exception hierarchy shared by all modules."""


class SpectrumError(Exception):
    """Base class for every domain error raised by this package."""


class EmptySequence(SpectrumError):
    """A degree sequence needs at least one entry."""


class NotBalanced(SpectrumError):
    """Two consecutive sorted entries differ by more than 1.

    Such a sequence cannot be the spectrum of a semistable sheaf, so it is
    rejected at construction time.
    """


class InvalidRange(SpectrumError):
    """A twist range was requested with k_min > k_max."""


class InsufficientRange(SpectrumError):
    """A section-count profile does not cover enough twists to pin down a spectrum."""


class InconsistentProfile(SpectrumError):
    """No balanced spectrum produces the given section-count profile."""


class CapExceeded(SpectrumError):
    """An enumeration would produce more results than the configured safety cap."""


class UniquenessViolated(SpectrumError):
    """A quantity that is provably unique was found zero or several times.

    Raised only on internal inconsistency; seeing it means a bug.
    """


class EmptyRange(SpectrumError):
    """The bound-comparison window is empty (multiplicity too small)."""


class OutOfRange(SpectrumError):
    """chi lies outside the window in which the counting argument is defined."""


class BadE(SpectrumError):
    """Sub-curve multiplicity e of a wall splitting must satisfy 1 <= e < d."""


class BadZ(SpectrumError):
    """Section shift z of a wall splitting must be non-negative."""
