"""Closed-form thresholds for zero-sum and small-sum blocks.

Three families are evaluated:

* the exact threshold N(r, s, k): the least n0 such that every zero-sum
  {-r, s}-sequence of length n >= n0 contains a zero-sum k-block;
* a sufficient bound parameterized by a slack q on the total weight;
* the {-1, 1} thresholds for blocks with |weight| <= t under |total| <= q.

All arithmetic is exact (integers and fractions); where the formulas
require an intermediate to be an integer, that is asserted and a
FormulaDomainError is raised on violation, never a silent rounding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING

from .core import FormulaDomainError, ParameterError, Params

if TYPE_CHECKING:
    from .good_shift import GoodShift


@dataclass(frozen=True)
class BoundReport:
    """Evaluated exact-threshold formulas for one parameter triple."""

    params: Params
    t: int
    t_prime: int
    m1: int
    m2: int
    n_exact: int
    notes: tuple[str, ...] = ()

    def to_json_dict(self) -> dict:
        return {
            "params": self.params.to_json_dict(),
            "t": self.t,
            "tPrime": self.t_prime,
            "m1": self.m1,
            "m2": self.m2,
            "n_exact": self.n_exact,
            "notes": list(self.notes),
        }


@dataclass(frozen=True)
class SufficientBound:
    """Least n certified to force a zero-sum k-block given |total| <= q."""

    params: Params
    q: int
    n_sufficient: int

    def to_json_dict(self) -> dict:
        return {
            "params": self.params.to_json_dict(),
            "q": self.q,
            "n_sufficient": self.n_sufficient,
        }


def shift_residue(x: int, modulus: int) -> int:
    """The unique t in [0, modulus) with x - 1 + t divisible by modulus."""
    return (1 - x) % modulus


def _as_int(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise FormulaDomainError(f"{what} evaluates to non-integer {value}")
    return int(value)


def exact_block_threshold(params: Params) -> BoundReport:
    """Exact threshold N(r, s, k) = max(k, M1, M2) for r < s.

    t is the unique member of [0, r+s) with sk/(r+s) - 1 + t divisible by
    r + s, and t' the analogue with rk/(r+s).  M1 and M2 each split on
    whether the shift exceeds r (resp. s).
    """
    r, s, k = params.r, params.s, params.k
    if r >= s:
        raise ParameterError(
            f"exact threshold requires r < s, got r={r} s={s}; "
            f"use the symmetric entry point or the +-1 formula"
        )
    params.require_block_divisibility()
    m = params.modulus
    sk = s * k // m
    rk = r * k // m
    t = shift_residue(sk, m)
    t_prime = shift_residue(rk, m)

    c = Fraction(r * s * k, m * m)
    if t <= r:
        m1 = _as_int((c - Fraction(r + s * t, m)) * k + sk + t, "M1")
    else:
        m1 = _as_int((c - Fraction(r + r * (m - t), m)) * k + sk - (m - t), "M1")
    if t_prime <= s:
        m2 = _as_int((c - Fraction(s + r * t_prime, m)) * k + rk + t_prime, "M2")
    else:
        m2 = _as_int(
            (c - Fraction(s + s * (m - t_prime), m)) * k + rk - (m - t_prime), "M2"
        )

    notes = []
    if r == 1:
        # t' <= s always holds then; the other branch cannot be exercised.
        notes.append("t' > s branch unreachable for r = 1")
    return BoundReport(
        params=params,
        t=t,
        t_prime=t_prime,
        m1=m1,
        m2=m2,
        n_exact=max(k, m1, m2),
        notes=tuple(notes),
    )


def exact_block_threshold_symmetric(params: Params) -> BoundReport:
    """N(r, s, k) for any r != s, via negation symmetry when r > s.

    Negating every term maps {-r, s}-sequences to {-s, r}-sequences and
    preserves zero-sum blocks, so the thresholds coincide.
    """
    if params.r == params.s:
        raise ParameterError(
            "r = s is out of this formula's range; for r = s = 1 use "
            "pm1_block_threshold"
        )
    if params.r < params.s:
        return exact_block_threshold(params)
    swapped = Params(params.s, params.r, params.k)
    report = exact_block_threshold(swapped)
    return BoundReport(
        params=swapped,
        t=report.t,
        t_prime=report.t_prime,
        m1=report.m1,
        m2=report.m2,
        n_exact=report.n_exact,
        notes=report.notes
        + (
            f"negation symmetry applied: evaluated at (r, s) = "
            f"({swapped.r}, {swapped.s})",
        ),
    )


def pm1_block_threshold(k: int, q: int = 0) -> int:
    """Least n forcing a zero-sum k-block in {-1, 1}-sequences, |total| <= q.

    Returns max(k, k^2/4 + (q - s)k/2 + s) where s in {0, 1} satisfies
    s = q + (k-2)/2 mod 2.
    """
    if k < 2 or k % 2:
        raise ParameterError(f"k must be even and >= 2, got {k}")
    if q < 0:
        raise ParameterError(f"q must be nonnegative, got {q}")
    s01 = (q + (k - 2) // 2) % 2
    return max(k, k * k // 4 + (q - s01) * k // 2 + s01)


def pm1_smallsum_threshold(k: int, t: int, q: int = 0) -> int:
    """Least n forcing a k-block of |weight| <= t in {-1, 1}-sequences.

    s in [0, t+1] is the unique residue with s = q + (k-t-2)/2 mod t+2;
    the bound is max(k, k^2/(2(t+2)) + (q-s)k/(t+2) - t/2 + s), returned as
    the smallest integer n satisfying it.
    """
    if not 0 <= t < k:
        raise ParameterError(f"t must satisfy 0 <= t < k, got t={t} k={k}")
    if t % 2 != k % 2:
        raise ParameterError(f"t and k must have the same parity, got t={t} k={k}")
    if q < 0:
        raise ParameterError(f"q must be nonnegative, got {q}")
    s = (q + (k - t - 2) // 2) % (t + 2)
    expr = (
        Fraction(k * k, 2 * (t + 2))
        + Fraction((q - s) * k, t + 2)
        - Fraction(t, 2)
        + s
    )
    return max(k, math.ceil(expr))


def sufficient_block_bound(params: Params, q: int = 0) -> SufficientBound:
    """Smallest n certified to contain a zero-sum k-block when |total| <= q.

    Evaluates, with exact rationals,

        k * floor((q - r)/(r+s) + rsk/(r+s)^2) + sk/(r+s) + r/s

    and the mirror expression with r and s exchanged, and returns the least
    integer n that is >= k and >= both.
    """
    params.require_block_divisibility()
    if q < 0:
        raise ParameterError(f"q must be nonnegative, got {q}")
    r, s, k = params.r, params.s, params.k
    m = params.modulus
    quad = Fraction(r * s * k, m * m)
    first = (
        k * math.floor(Fraction(q - r, m) + quad) + Fraction(s * k, m) + Fraction(r, s)
    )
    second = (
        k * math.floor(Fraction(q - s, m) + quad) + Fraction(r * k, m) + Fraction(s, r)
    )
    n = max(k, math.ceil(first), math.ceil(second))
    return SufficientBound(params=params, q=q, n_sufficient=n)


def ap_lower_bound_value(params: Params, alpha: int | GoodShift) -> int:
    """Length of the shifted periodic construction certifying
    M(r, s, k) >= (r(k+a) + (r+s+s*a)) * floor((sk/(r+s) - 1) / (r(r+s+s*a))).

    ``alpha`` may be a verified GoodShift or a plain integer, in which case
    goodness is checked here.
    """
    from .good_shift import GoodShift, is_good_shift

    params.require_block_divisibility()
    if isinstance(alpha, GoodShift):
        shift = alpha
        if shift.params != params:
            raise ParameterError("good shift was certified for different parameters")
    else:
        shift = is_good_shift(params, alpha)
    if not shift.good:
        raise ParameterError(
            f"alpha = {shift.alpha} is not a good shift for "
            f"(r, s, k) = ({params.r}, {params.s}, {params.k}): "
            f"prime {shift.blocking[0]} divides weight {shift.blocking[1]}"
        )
    r, s, k = params.r, params.s, params.k
    a = k + shift.alpha
    period_weight = params.modulus + s * shift.alpha
    neg_run = s * k // params.modulus - 1
    return (r * a + period_weight) * (neg_run // (r * period_weight))
