"""Explicit extremal sequences, each with a machine-checkable claim.

Every builder returns a zero-sum sequence together with a record of what
it avoids (zero-sum k-blocks or zero-sum k-term arithmetic subsequences);
the scanners re-check each claim independently.  Lengths that legally
evaluate to 0 at small parameters are flagged degenerate rather than
rejected.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import ConstructionInfeasibleError, ParameterError, Params, SignSeq
from .good_shift import GoodShift, is_good_shift, is_prime

BLOCK_EXTREMAL = "block-extremal"
BLOCK_EXTREMAL_NEGATED = "block-extremal-neg"
AP_MOD_K = "ap-mod-k"
AP_MOD_K_PRODUCT = "ap-product"
AP_MOD_K_PLUS1 = "ap-mod-k1"
AP_GOOD_SHIFT = "ap-good-shift"
AP_TWO_P = "ap-two-p"


@dataclass(frozen=True)
class ClaimedProperty:
    """What the construction avoids (or guarantees), stated checkably."""

    kind: str  # "block" | "ap" | "block-weight-constant"
    k: int
    description: str


@dataclass(frozen=True)
class Construction:
    kind: str
    params: Params
    length: int
    seq: SignSeq
    claim: ClaimedProperty
    degenerate: bool = False
    notes: tuple[str, ...] = ()

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "params": self.params.to_json_dict(),
            "length": self.length,
            "claimedProperty": {
                "kind": self.claim.kind,
                "k": self.claim.k,
                "description": self.claim.description,
            },
            "degenerate": self.degenerate,
            "notes": list(self.notes),
        }


def _sequence(params: Params, values: list[int], expect_zero_sum: bool = True) -> SignSeq:
    seq = SignSeq.from_values(params, values)
    if expect_zero_sum:
        assert seq.total_weight() == 0, "construction must be zero-sum"
    return seq


def _block_extremal_values(r: int, s: int, k: int) -> tuple[list[int], int]:
    """Values and shift t of the periodic block-extremal construction.

    The sequence consists of b blocks [neg_run copies of -r, pos_run copies
    of +s] followed by a remainder that is a prefix of the same pattern, so
    every k-window covers each residue class mod k exactly once and has
    weight exactly r + s.
    """
    m = r + s
    cap = k // m
    t = (1 - s * cap) % m
    neg_run = s * cap - 1
    pos_run = r * cap + 1
    if t <= r:
        b = (r * s * cap - (r + s * t)) // m
        remainder = [-r] * neg_run + [s] * t
    else:
        b = (r * s * cap - (r + r * (m - t))) // m
        rem_len = neg_run - (m - t)
        if rem_len < 0:
            raise ConstructionInfeasibleError(
                f"remainder length {rem_len} is negative (k too small for t = {t})"
            )
        remainder = [-r] * rem_len
    if b < 0:
        raise ConstructionInfeasibleError(
            f"block count b = {b} is negative (k too small for t = {t})"
        )
    return ([-r] * neg_run + [s] * pos_run) * b + remainder, t


def build_block_extremal(params: Params) -> Construction:
    """Zero-sum sequence one below the exact threshold with every k-window
    weight equal to r + s, hence no zero-sum k-block."""
    params.require_block_divisibility()
    r, s, k = params.r, params.s, params.k
    values, t = _block_extremal_values(r, s, k)
    seq = _sequence(params, values)
    n = len(values)
    return Construction(
        kind=BLOCK_EXTREMAL,
        params=params,
        length=n,
        seq=seq,
        claim=ClaimedProperty(
            kind="block",
            k=k,
            description=f"every {k}-window has weight exactly {r + s}; "
            f"no zero-sum {k}-block",
        ),
        degenerate=n == 0,
        notes=(f"shift t = {t}",),
    )


def build_block_extremal_negated(params: Params) -> Construction:
    """Negation of the block-extremal sequence for swapped letters.

    Builds the extremal {-s, r}-sequence and negates every term, giving a
    {-r, s}-sequence whose k-windows all weigh -(r + s).
    """
    params.require_block_divisibility()
    r, s, k = params.r, params.s, params.k
    swapped_values, t_prime = _block_extremal_values(s, r, k)
    values = [-v for v in swapped_values]
    seq = _sequence(params, values)
    n = len(values)
    return Construction(
        kind=BLOCK_EXTREMAL_NEGATED,
        params=params,
        length=n,
        seq=seq,
        claim=ClaimedProperty(
            kind="block",
            k=k,
            description=f"every {k}-window has weight exactly {-(r + s)}; "
            f"no zero-sum {k}-block",
        ),
        degenerate=n == 0,
        notes=(f"shift t' = {t_prime}", "negated from swapped-letter construction"),
    )


def build_ap_mod_k(k: int) -> Construction:
    """Period-k/2 sign sequence avoiding zero-sum k-term APs, for k = 2a
    with a > 1 odd.

    f(j) = -1 when j mod a < (a-1)/2, else +1; length (2a+2)*floor((a-1)/4).
    Every k-term AP weight is nonzero, with |weight| >= gcd(d, k).
    """
    if k % 4 != 2 or k < 6:
        raise ParameterError(
            f"k must be 2 mod 4 with k/2 odd and > 1, got k = {k}"
        )
    a = k // 2
    n = (2 * a + 2) * ((a - 1) // 4)
    half = (a - 1) // 2
    params = Params(1, 1, k)
    values = [(-1 if j % a < half else 1) for j in range(n)]
    seq = _sequence(params, values)
    return Construction(
        kind=AP_MOD_K,
        params=params,
        length=n,
        seq=seq,
        claim=ClaimedProperty(
            kind="ap",
            k=k,
            description=f"no zero-sum {k}-term arithmetic subsequence; every "
            f"{k}-term AP with difference d has |weight| >= gcd(d, {k})",
        ),
        degenerate=n == 0,
    )


@dataclass(frozen=True)
class ResidueFunction:
    """A sign assignment on residues mod k, the product of half-interval
    signs over a coprime factorization k = 2 * a1 * ... * am.

    Unlike the length-n constructions this is not zero-sum as a sequence:
    exactly k/2 + 1 residues carry +1 and k/2 - 1 carry -1, so every full
    d-spaced progression over the residues has nonzero weight.
    """

    modulus: int
    factors: tuple[int, ...]
    values: tuple[int, ...]

    def count_plus(self) -> int:
        return self.values.count(1)

    def count_minus(self) -> int:
        return self.values.count(-1)

    def progression_weight(self, start: int, d: int, terms: int) -> int:
        return sum(self.values[(start + j * d) % self.modulus] for j in range(terms))

    def as_sequence(self) -> SignSeq:
        return SignSeq.from_values(Params(1, 1, self.modulus), self.values)


def build_ap_mod_k_product(k: int, factors: tuple[int, ...] | list[int]) -> ResidueFunction:
    """Product-of-signs residue function for k = 2 * a1 * ... * am.

    Each factor contributes -1 on its small residues (j mod a_i < (a_i-1)/2)
    and +1 otherwise; the factors must be odd, > 1, and pairwise coprime.
    """
    factors = tuple(int(a) for a in factors)
    if not factors:
        raise ParameterError("at least one factor is required")
    prod = 2
    for a in factors:
        if a <= 1 or a % 2 == 0:
            raise ParameterError(f"factors must be odd and > 1, got {a}")
        prod *= a
    for i in range(len(factors)):
        for j in range(i + 1, len(factors)):
            if math.gcd(factors[i], factors[j]) != 1:
                raise ParameterError(
                    f"factors must be pairwise coprime, got {factors[i]} "
                    f"and {factors[j]}"
                )
    if prod != k:
        raise ParameterError(
            f"factorization 2 * {' * '.join(map(str, factors))} = {prod} != k = {k}"
        )
    values = []
    for j in range(k):
        f = 1
        for a in factors:
            f *= -1 if j % a < (a - 1) // 2 else 1
        values.append(f)
    fn = ResidueFunction(modulus=k, factors=factors, values=tuple(values))
    assert fn.count_plus() == k // 2 + 1 and fn.count_minus() == k // 2 - 1
    return fn


def build_ap_mod_k_plus1(k: int) -> Construction:
    """Period-(k+1) sign sequence avoiding zero-sum k-term APs, any even k.

    f(j) = -1 when j mod (k+1) < (k-2)/2, else +1.  The length is
    (a+3) * floor((a-3)/6) with a = k + 1: that floor keeps the trailing
    remainder short enough to consist of -1's only, which is what makes the
    total weight zero.
    """
    if k < 2 or k % 2:
        raise ParameterError(f"k must be even and >= 2, got {k}")
    a = k + 1
    n = (a + 3) * ((a - 3) // 6)
    half = (a - 3) // 2
    params = Params(1, 1, k)
    values = [(-1 if j % a < half else 1) for j in range(n)]
    seq = _sequence(params, values)
    return Construction(
        kind=AP_MOD_K_PLUS1,
        params=params,
        length=n,
        seq=seq,
        claim=ClaimedProperty(
            kind="ap",
            k=k,
            description=f"no zero-sum {k}-term arithmetic subsequence "
            f"(period {a}, every full-period AP weight is at least 3 in "
            f"absolute value)",
        ),
        degenerate=n == 0,
        notes=(
            "length (a+3)*floor((a-3)/6): the floor bounds the remainder by "
            "(a-3)/2 so all remainder terms are -1 and the total weight is 0",
        ),
    )


def build_ap_good_shift(params: Params, alpha: int | GoodShift) -> Construction:
    """Period-(k+alpha) {-r, s}-sequence avoiding zero-sum k-term APs,
    for any good shift alpha.

    f(j) = -r when j mod (k+alpha) < sk/(r+s) - 1, else +s; each full
    period weighs r + s + s*alpha, and the length is chosen so that the
    remainder is all -r and cancels the full periods exactly.
    """
    params.require_block_divisibility()
    shift = alpha if isinstance(alpha, GoodShift) else is_good_shift(params, alpha)
    if shift.params != params:
        raise ParameterError("good shift was certified for different parameters")
    if not shift.good:
        raise ParameterError(
            f"alpha = {shift.alpha} is not a good shift: prime "
            f"{shift.blocking[0]} divides weight {shift.blocking[1]} of "
            f"S_{shift.alpha}"
        )
    r, s, k = params.r, params.s, params.k
    a = k + shift.alpha
    neg_run = s * k // params.modulus - 1
    period_weight = params.modulus + s * shift.alpha
    n = (r * a + period_weight) * (neg_run // (r * period_weight))
    values = [(-r if j % a < neg_run else s) for j in range(n)]
    seq = _sequence(params, values)
    return Construction(
        kind=AP_GOOD_SHIFT,
        params=params,
        length=n,
        seq=seq,
        claim=ClaimedProperty(
            kind="ap",
            k=k,
            description=f"no zero-sum {k}-term arithmetic subsequence "
            f"(period {a}, per-period weight {period_weight}, good shift "
            f"alpha = {shift.alpha})",
        ),
        degenerate=n == 0,
        notes=(f"good shift alpha = {shift.alpha}, k + alpha = {a} with prime "
               f"factors {list(shift.prime_factors)}",),
    )


def build_ap_two_p(p: int) -> Construction:
    """Length p^2 - 1 sequence avoiding zero-sum 2p-term APs, p an odd prime.

    f(j) = -1 when j mod 2p < p - 1, else +1.  Certifies that the quadratic
    upper-bound constant for {-1, 1}-sequences cannot be improved.
    """
    if p < 3 or not is_prime(p):
        raise ParameterError(f"p must be an odd prime, got {p}")
    k = 2 * p
    n = p * p - 1
    params = Params(1, 1, k)
    values = [(-1 if j % k < p - 1 else 1) for j in range(n)]
    seq = _sequence(params, values)
    return Construction(
        kind=AP_TWO_P,
        params=params,
        length=n,
        seq=seq,
        claim=ClaimedProperty(
            kind="ap",
            k=k,
            description=f"no zero-sum {k}-term arithmetic subsequence in "
            f"length {n} = p^2 - 1",
        ),
        degenerate=False,
    )
