"""Degree-sequence generators.

Four ways to produce k-factorable graphic sequences:

* :func:`generate_heuristic` draws sequences from K(a,b) until one passes
  the k-factorability and Rao checks (trial and error);
* :func:`generate_connected` picks the length large enough that every Rao
  inequality holds by construction (needs a - b < 2);
* :func:`generate_disconnected` / :func:`family_sequence` build sequences
  of the shape (n-1, ..., n-1, x, ..., x, s, ..., s) whose every
  realization has only disconnected k-factors;
* :func:`packing_demo_sequence` builds the (3, ..., 3, 2, ..., 2) shape
  used to demonstrate packing a 2-factor with a perfect matching.

All randomness comes from a caller-supplied 64-bit seed; identical
parameters and seed give byte-identical output.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace

from .errors import (
    InvalidFamilyParams,
    InvalidPackingParams,
    KFactorabilityFailed,
    NoValidX,
    ParityUnfixable,
    RetriesExhausted,
)
from .sequences import (
    DegreeSequence,
    KabParams,
    is_k_factorable,
    rao_connected_predicate,
    zz_min_length,
)

# Identifier of the PRNG behind every seeded draw, echoed in output
# metadata so fixtures can be regenerated exactly.
PRNG_ALGORITHM = "mt19937"

MAX_SEED = 2**64 - 1


@dataclass(frozen=True)
class GenerationParams:
    """Inputs of the K(a,b)-based generators."""

    a: int
    b: int
    k: int
    seed: int
    max_retries: int = 1000

    def __post_init__(self) -> None:
        if not self.a >= self.b > 0:
            raise ValueError(f"need a >= b > 0, got a={self.a}, b={self.b}")
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")
        if self.max_retries < 1:
            raise ValueError(f"max_retries must be >= 1, got {self.max_retries}")
        if not 0 <= self.seed <= MAX_SEED:
            raise ValueError(f"seed must fit in 64 bits, got {self.seed}")

    @property
    def kab(self) -> KabParams:
        return KabParams(self.a, self.b)


@dataclass(frozen=True)
class FamilyParams:
    """Parameters of the (n-1, ..., n-1, x, ..., x, s, ..., s) template.

    ``k`` doubles as the prefix/suffix length s.  ``x`` may be left unset
    when a generator is expected to draw it.
    """

    n: int
    k: int
    x: int | None = None


def family_x_bounds(n: int, k: int, variant: str = "general") -> tuple[int, int]:
    """Inclusive range of valid middle degrees x for each claim variant."""
    if variant == "general":
        return 2 * k, n - k - 1
    if variant == "k2":
        return 4, n - 3
    if variant == "k3":
        return 6, n - 4
    raise ValueError(f"unknown family variant {variant!r}")


def validate_family(
    fp: FamilyParams, variant: str = "general", *, require_x: bool = True
) -> None:
    """Raise InvalidFamilyParams naming the first violated constraint.

    The ``k2`` variant permits odd n provided (n-4)*x is even; the
    ``general`` and ``k3`` variants require n even.
    """
    n, s, x = fp.n, fp.k, fp.x
    if variant not in ("general", "k2", "k3"):
        raise ValueError(f"unknown family variant {variant!r}")
    if variant == "k2" and s != 2:
        raise InvalidFamilyParams(f"variant k2 requires k = 2, got k={s}")
    if variant == "k3" and s != 3:
        raise InvalidFamilyParams(f"variant k3 requires k = 3, got k={s}")
    if s < 1:
        raise InvalidFamilyParams(f"k must be >= 1, got k={s}")
    if variant != "k2" and n % 2 != 0:
        raise InvalidFamilyParams(f"n must be even, got n={n}")
    if not s < n / 2:
        raise InvalidFamilyParams(f"k must satisfy k < n/2, got k={s}, n={n}")
    if 3 * s + 1 > n:
        raise InvalidFamilyParams(f"n must be at least 3k+1 = {3 * s + 1}, got n={n}")
    if not require_x and x is None:
        return
    if x is None:
        raise InvalidFamilyParams("x is required")
    lo, hi = family_x_bounds(n, s, variant)
    if not lo <= x <= hi:
        raise InvalidFamilyParams(f"x must lie in [{lo}, {hi}], got x={x}")
    total = s * (n - 1) + (n - 2 * s) * x + s * s
    if total % 2 != 0:
        raise InvalidFamilyParams(
            f"total degree sum must be even, got {total} (x={x})"
        )


def family_sequence(fp: FamilyParams, variant: str = "general") -> DegreeSequence:
    """Deterministic (n-1)^s, x^(n-2s), s^s sequence.

    Every realization of the result contains a k-factor, yet none has a
    connected one: the Rao inequality fails at exactly s, because the s
    top degrees already absorb s(n-1) while the right-hand side is
    s(n-s-1) + s*s.
    """
    validate_family(fp, variant)
    n, s, x = fp.n, fp.k, fp.x
    assert x is not None
    return DegreeSequence((n - 1,) * s + (x,) * (n - 2 * s) + (s,) * s)


def generate_disconnected(
    fp: FamilyParams, seed: int, variant: str = "general"
) -> DegreeSequence:
    """Family sequence with x drawn uniformly from the valid choices.

    The draw is taken over the x values of correct parity directly, not by
    rejection, so it terminates in one step.  A preset fp.x is honored
    (and validated) as-is.
    """
    validate_family(fp, variant, require_x=False)
    if fp.x is not None:
        return family_sequence(fp, variant)
    lo, hi = family_x_bounds(fp.n, fp.k, variant)
    candidates = []
    for cand in range(lo, hi + 1):
        try:
            validate_family(replace(fp, x=cand), variant)
        except InvalidFamilyParams:
            continue
        candidates.append(cand)
    if not candidates:
        # Unreachable for a valid (n, k): the range has >= 1 entry and an
        # even n makes every parity acceptable.  Guarded regardless.
        raise NoValidX(f"no valid middle degree for n={fp.n}, k={fp.k}")
    x = random.Random(seed).choice(candidates)
    return family_sequence(replace(fp, x=x), variant)


def _factorable_length(n: int, p: GenerationParams) -> int:
    """Bump n past the threshold when parity makes the draw hopeless.

    sum(d - k) = sum(d) - n*k, so an even-sum sequence of odd length can
    never be k-factorable for odd k.  Likewise a = b with b odd forces
    sum(d) = n*b, which is odd for odd n.  One extra slot fixes either
    parity while staying above the length bound.
    """
    if n % 2 and (p.k % 2 or (p.a == p.b and p.b % 2)):
        return n + 1
    return n


def generate_heuristic(p: GenerationParams) -> DegreeSequence:
    """Trial-and-error generator over K(a,b).

    Draws length-n sequences (n just above the K(a,b) threshold) until one
    has an even sum, is k-factorable, and passes every Rao inequality.
    Sequences in K(a,b) of this length are graphic whenever the sum is
    even, so the even-sum draws only ever fail the d - k or Rao checks.
    """
    if p.b < p.k:
        # Hopeless parameters: d - k would go negative whenever any draw
        # hits the lower bound, so reject up front rather than spin.
        raise RetriesExhausted(
            f"b={p.b} is below k={p.k}; d - k cannot stay nonnegative"
        )
    n = _factorable_length(zz_min_length(p.kab), p)
    rng = random.Random(p.seed)
    rao_holds = False
    for _ in range(p.max_retries):
        values = sorted((rng.randint(p.b, p.a) for _ in range(n)), reverse=True)
        if sum(values) % 2:
            continue
        seq = DegreeSequence(tuple(values))
        rao_holds = rao_connected_predicate(seq).holds
        if rao_holds and is_k_factorable(seq, p.k):
            return seq
    raise RetriesExhausted(
        f"no k-factorable sequence with a connected factor found in "
        f"{p.max_retries} draws for a={p.a}, b={p.b}, k={p.k}"
    )


def generate_connected(p: GenerationParams) -> DegreeSequence:
    """Deterministic-length generator whose output always passes Rao.

    The length is chosen above max(4/(2+b-a), l): long enough that the
    worst-case Rao slack s*(a-b) stays below s(n-s-1), and long enough for
    K(a,b) membership to force graphicality.  Draw n-1 values in [b, a],
    then complete with one value fixing the parity of the sum.  The
    template says nothing about k, so k-factorability is validated after
    the fact and the whole sequence re-drawn on failure.
    """
    if p.b < p.k:
        raise KFactorabilityFailed(
            f"b={p.b} is below k={p.k}; d - k cannot stay nonnegative"
        )
    n = _factorable_length(zz_min_length(p.kab, k_connected=True), p)
    rng = random.Random(p.seed)
    for _ in range(p.max_retries):
        values = [rng.randint(p.b, p.a) for _ in range(n - 1)]
        values = _complete_parity(values, p.a, p.b, rng)
        seq = DegreeSequence(tuple(sorted(values, reverse=True)))
        if is_k_factorable(seq, p.k):
            return seq
    raise KFactorabilityFailed(
        f"d - k never graphic within {p.max_retries} draws for "
        f"a={p.a}, b={p.b}, k={p.k}"
    )


def _complete_parity(values: list[int], a: int, b: int, rng: random.Random) -> list[int]:
    """Append a final value in [b, a] making the total even.

    Prefers b, then b+1 (matching the classic parity branch) but only
    within [b, a].  When neither fits (a == b with the wrong parity) try
    flipping one drawn entry by one, and as a last resort grow the
    sequence by one extra draw and retry the final slot.
    """
    for _ in range(2):
        need = sum(values) % 2
        for cand in (b, b + 1):
            if cand <= a and cand % 2 == need:
                return values + [cand]
        for i, v in enumerate(values):
            for nv in (v + 1, v - 1):
                if b <= nv <= a:
                    flipped = list(values)
                    flipped[i] = nv
                    need2 = sum(flipped) % 2
                    for cand in (b, b + 1):
                        if cand <= a and cand % 2 == need2:
                            return flipped + [cand]
        values = values + [rng.randint(b, a)]
    raise ParityUnfixable(f"no value in [{b}, {a}] can make the sum even")


def packing_demo_sequence(num_threes: int, num_twos: int) -> DegreeSequence:
    """The (3, ..., 3, 2, ..., 2) shape: an even count of 3s, then 2s.

    Subtracting 2 leaves (1, ..., 1, 0, ..., 0), trivially graphic, so the
    sequence is 2-factorable whenever it is graphic at all.
    """
    if num_threes < 2 or num_threes % 2 != 0:
        raise InvalidPackingParams(
            f"need an even number (>= 2) of degree-3 vertices, got {num_threes}"
        )
    if num_twos < 0:
        raise InvalidPackingParams(f"num_twos must be >= 0, got {num_twos}")
    if num_threes + num_twos < 3:
        raise InvalidPackingParams("total length must be at least 3")
    return DegreeSequence((3,) * num_threes + (2,) * num_twos)
