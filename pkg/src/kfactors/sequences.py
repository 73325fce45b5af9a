"""Degree sequences and the predicates that decide what they can realize.

Three predicate families live here:

* the Erdos-Gallai inequalities, an exact test for graphicality;
* membership in the bounded class K(a,b) (all degrees between b and a),
  where even sum plus length n >= l = (a+b+1)^2/(4b) guarantees
  graphicality;
* the Rao inequalities, which hold for every s < n/2 exactly when some
  realization of the sequence carries a connected k-factor.

Threshold comparisons use exact rational arithmetic throughout; l is
frequently non-integral and a float comparison could misclassify a
sequence sitting right on the boundary.
"""

from __future__ import annotations

import math
from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple

from .errors import ConnectedBoundUnavailable, KTooLarge


@dataclass(frozen=True)
class DegreeSequence:
    """A nonincreasing sequence of vertex degrees.

    Zeros are legal so that derived sequences such as d - k stay
    representable. User-facing constructors that must reject zero degrees
    pass ``require_positive`` to :meth:`from_unsorted`.
    """

    degrees: tuple[int, ...]

    def __post_init__(self) -> None:
        d = tuple(self.degrees)
        object.__setattr__(self, "degrees", d)
        if not d:
            raise ValueError("degree sequence must be nonempty")
        if any(not isinstance(v, int) for v in d):
            raise ValueError(f"degrees must be integers: {d!r}")
        if any(v < 0 for v in d):
            raise ValueError(f"negative degree in {d}")
        if any(d[i] < d[i + 1] for i in range(len(d) - 1)):
            raise ValueError(f"degrees not in nonincreasing order: {d}")

    @classmethod
    def from_unsorted(
        cls, values: Iterable[int], *, require_positive: bool = False
    ) -> "DegreeSequence":
        """Sort arbitrary degree values into a valid sequence."""
        seq = cls(tuple(sorted(values, reverse=True)))
        if require_positive and seq.degrees[-1] <= 0:
            raise ValueError("degrees must be strictly positive")
        return seq

    def __len__(self) -> int:
        return len(self.degrees)

    def __iter__(self):
        return iter(self.degrees)

    def __getitem__(self, i: int) -> int:
        return self.degrees[i]

    @property
    def n(self) -> int:
        return len(self.degrees)

    @property
    def total(self) -> int:
        return sum(self.degrees)

    def has_even_sum(self) -> bool:
        return self.total % 2 == 0

    def to_list(self) -> list[int]:
        return list(self.degrees)


@dataclass(frozen=True)
class KabParams:
    """Degree bounds a >= d_1 >= ... >= d_n >= b > 0 for the class K(a,b)."""

    a: int
    b: int

    def __post_init__(self) -> None:
        if not (isinstance(self.a, int) and isinstance(self.b, int)):
            raise ValueError("a and b must be integers")
        if not self.a >= self.b > 0:
            raise ValueError(f"need a >= b > 0, got a={self.a}, b={self.b}")

    @property
    def l(self) -> Fraction:
        """Length threshold (a+b+1)^2 / (4b), kept exact."""
        return Fraction((self.a + self.b + 1) ** 2, 4 * self.b)


def is_graphic_eg(seq: DegreeSequence) -> bool:
    """Exact graphicality test via the Erdos-Gallai inequalities.

    True iff the degree sum is even and, for every k in 1..n,

        d_1 + ... + d_k  <=  k(k-1) + sum over i > k of min(k, d_i).

    Runs in O(n log n) using prefix sums and a binary search for the
    boundary between tail entries >= k and < k.
    """
    d = seq.degrees
    n = len(d)
    if d[0] >= n:
        return False
    total = sum(d)
    if total % 2:
        return False
    prefix = [0]
    for v in d:
        prefix.append(prefix[-1] + v)
    asc = d[::-1]
    for k in range(1, n + 1):
        ge_all = n - bisect_left(asc, k)  # entries >= k fill the first ge_all slots
        cut = max(ge_all, k)
        rhs = k * (k - 1) + k * max(0, ge_all - k) + (total - prefix[cut])
        if prefix[k] > rhs:
            return False
    return True


def in_kab(seq: DegreeSequence, p: KabParams) -> bool:
    """Membership in K(a,b) together with the graphicality guarantees:
    even degree sum and length n >= l, compared as exact rationals."""
    d = seq.degrees
    return (
        p.a >= d[0]
        and d[-1] >= p.b
        and seq.total % 2 == 0
        and Fraction(len(d)) >= p.l
    )


def zz_min_length(p: KabParams, *, k_connected: bool = False) -> int:
    """Smallest sequence length strictly above the K(a,b) threshold.

    Plain mode uses l alone.  Connected mode additionally requires
    n > 4/(2+b-a), which forces every Rao inequality to hold for any
    sequence in K(a,b) of that length; the bound only exists when
    a - b < 2.
    """
    bound = p.l
    if k_connected:
        gap = 2 + p.b - p.a
        if gap <= 0:
            raise ConnectedBoundUnavailable(
                f"connected length bound needs a - b < 2, got a={p.a}, b={p.b}"
            )
        bound = max(bound, Fraction(4, gap))
    return math.floor(bound) + 1


class RaoResult(NamedTuple):
    holds: bool
    witness: int | None  # smallest violating s when holds is False


def rao_connected_predicate(seq: DegreeSequence) -> RaoResult:
    """Check, for every integer 1 <= s < n/2, that

        d_1 + ... + d_s  <  s(n-s-1) + (sum of the s smallest degrees).

    All inequalities hold iff some realization of the sequence has a
    connected k-factor (given that the sequence is k-factorable at all).
    On failure the smallest violating s is reported.
    """
    d = seq.degrees
    n = len(d)
    prefix = [0]
    for v in d:
        prefix.append(prefix[-1] + v)
    total = prefix[-1]
    for s in range(1, (n + 1) // 2):
        if prefix[s] >= s * (n - s - 1) + (total - prefix[n - s]):
            return RaoResult(False, s)
    return RaoResult(True, None)


def subtract_k(seq: DegreeSequence, k: int) -> DegreeSequence:
    """Elementwise d - k; zeros may appear, order is preserved."""
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    if seq.degrees[-1] < k:
        raise KTooLarge(
            f"cannot subtract k={k}: smallest degree is {seq.degrees[-1]}"
        )
    return DegreeSequence(tuple(v - k for v in seq.degrees))


def is_k_factorable(seq: DegreeSequence, k: int) -> bool:
    """True iff seq is graphic, min degree >= k, and d - k is graphic.

    By the Kundu/Rao-Rao criterion (uniform k case) this is exactly the
    condition for some realization to contain a k-regular spanning
    subgraph.
    """
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    if not is_graphic_eg(seq):
        return False
    if seq.degrees[-1] < k:
        return False
    return is_graphic_eg(subtract_k(seq, k))
