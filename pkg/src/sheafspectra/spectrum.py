"""Balanced degree sequences (spectra) of one-dimensional semistable sheaves.

A spectrum is a non-increasing integer sequence ``[a_1, ..., a_d]`` whose
consecutive entries drop by at most 1 (the *balanced* property).  The entries
are the degrees of the line-bundle summands of the direct image of the sheaf
under a projection to a line, and every cohomological quantity handled by
this package is a pointwise function of them::

    h0(v)   = sum of (a + 1)  over entries a >= 0
    h1(v)   = sum of (-a - 1) over entries a <= -2
    chi(v)  = h0(v) - h1(v) = (sum of entries) + d

All values are immutable and all operations are pure, so everything here is
safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import (
    EmptySequence,
    InconsistentProfile,
    InsufficientRange,
    InvalidRange,
    NotBalanced,
)

# Unsorted integer input, accepted only at the canonicalize() boundary.
RawSequence = Sequence[int]


@dataclass(frozen=True)
class Spectrum:
    """Canonical spectrum: a non-empty, non-increasing, balanced tuple.

    Invalid sequences are rejected at construction, so a ``Spectrum`` in hand
    is always meaningful downstream.  Use :func:`canonicalize` to build one
    from unsorted input.
    """

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple(self.entries))
        if not self.entries:
            raise EmptySequence("a spectrum needs at least one entry")
        for hi, lo in zip(self.entries, self.entries[1:]):
            if hi < lo:
                raise ValueError(
                    f"entries must be non-increasing, got {hi} before {lo}; "
                    "use canonicalize() for unsorted input"
                )
            if hi - lo > 1:
                raise NotBalanced(f"gap {hi - lo} > 1 between entries {hi} and {lo}")

    @property
    def d(self) -> int:
        """Multiplicity: the number of entries."""
        return len(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __getitem__(self, index: int) -> int:
        return self.entries[index]

    def __str__(self) -> str:
        return "[" + ", ".join(str(a) for a in self.entries) + "]"


@dataclass(frozen=True)
class ModuliClass:
    """Numerical class (d, chi) of sheaves with Hilbert polynomial d*m + chi."""

    d: int
    chi: int

    def __post_init__(self) -> None:
        if self.d < 1:
            raise ValueError(f"multiplicity d must be >= 1, got {self.d}")

    def __str__(self) -> str:
        return f"({self.d}, {self.chi})"


def canonicalize(raw: RawSequence) -> Spectrum:
    """Sort raw degrees into canonical non-increasing order and validate.

    Raises :class:`NotBalanced` when the sorted sequence has a gap larger
    than 1, i.e. when no semistable sheaf has these summand degrees, and
    :class:`EmptySequence` on empty input.
    """
    entries = sorted(raw, reverse=True)
    if not entries:
        raise EmptySequence("cannot canonicalize an empty sequence")
    return Spectrum(tuple(entries))


def euler_char(v: Spectrum) -> int:
    """Euler characteristic chi = (sum of entries) + d."""
    return sum(v.entries) + len(v.entries)


def h0(v: Spectrum) -> int:
    """Dimension of the space of global sections: sum of a+1 over entries a >= 0."""
    return sum(a + 1 for a in v.entries if a >= 0)


def h1(v: Spectrum) -> int:
    """Dimension of first cohomology: sum of -a-1 over entries a <= -2.

    Defined through the dual spectrum (``h1(v) == h0(dual(v))``) so there is
    a single source of truth; ``h0(v) - h1(v) == euler_char(v)`` always.
    """
    return sum(-a - 1 for a in v.entries if a <= -2)


def twist(v: Spectrum, k: int) -> Spectrum:
    """Shift every entry by k: the spectrum of the sheaf twisted by O(k)."""
    return Spectrum(tuple(a + k for a in v.entries))


def dual(v: Spectrum) -> Spectrum:
    """Spectrum of the dual sheaf: ``[-2 - a_d, ..., -2 - a_1]``.

    An involution that swaps h0 and h1 and negates the Euler characteristic.
    """
    return Spectrum(tuple(-2 - a for a in reversed(v.entries)))


def structure_sheaf_spectrum(d: int) -> Spectrum:
    """Spectrum ``[0, -1, ..., 1-d]`` of the structure sheaf of a degree-d curve."""
    if d < 1:
        raise ValueError(f"degree must be >= 1, got {d}")
    return Spectrum(tuple(-i for i in range(d)))


def h0_profile(v: Spectrum, k_min: int, k_max: int) -> list[tuple[int, int]]:
    """Section counts of all twists of v for k in [k_min, k_max], inclusive.

    The profile is non-decreasing in k and determines v uniquely once it
    starts at 0 and its first differences have reached d.
    """
    if k_min > k_max:
        raise InvalidRange(f"k_min {k_min} exceeds k_max {k_max}")
    return [(k, h0(twist(v, k))) for k in range(k_min, k_max + 1)]


def spectrum_from_h0_profile(profile: Sequence[tuple[int, int]]) -> Spectrum:
    """Recover the unique spectrum consistent with a section-count profile.

    The first difference of the profile counts entries: ``h0 at k`` minus
    ``h0 at k-1`` equals the number of entries >= -k.  A profile therefore
    pins the spectrum down exactly when it starts at value 0 (no entry is
    visible yet) and the differences have stabilized at the multiplicity d.
    The caller owes that coverage; within it, the reconstruction reproduces
    the input profile on its whole range.

    Raises :class:`InsufficientRange` when the profile is too short, does not
    start at 0, or shows no entries at all, and :class:`InconsistentProfile`
    when the k values are not contiguous, the differences decrease, or the
    implied degree multiset is not balanced.
    """
    points = list(profile)
    if len(points) < 2:
        raise InsufficientRange("need at least two profile points")
    ks = [k for k, _ in points]
    hs = [h for _, h in points]
    if ks != list(range(ks[0], ks[0] + len(ks))):
        raise InconsistentProfile(f"profile k values must be contiguous, got {ks}")
    if hs[0] != 0:
        raise InsufficientRange(
            f"profile must start at h0 == 0, got {hs[0]} at k = {ks[0]}"
        )
    diffs = [b - a for a, b in zip(hs, hs[1:])]
    prev = 0
    entries: list[int] = []
    for k, diff in zip(ks[1:], diffs):
        if diff < prev:
            raise InconsistentProfile(
                f"first differences must be non-decreasing, got {diff} after {prev}"
            )
        entries.extend([-k] * (diff - prev))
        prev = diff
    if not entries:
        raise InsufficientRange("profile shows no entries; widen the range")
    try:
        return Spectrum(tuple(entries))
    except NotBalanced as exc:
        raise InconsistentProfile(f"no balanced spectrum matches: {exc}") from exc
