"""Domain types for two-letter integer sequences and their weights.

A sequence assigns each position 0..n-1 a value in {-r, +s} with r, s
positive and gcd(r, s) = 1.  The weight of an index set is the sum of the
values it selects.  Everything here is immutable after construction and
safe to share across threads; positions are 0-based throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, TypeAlias

Weight: TypeAlias = int


class ParameterError(ValueError):
    """A precondition on (r, s, k), an index, or an argument was violated."""


class FormulaDomainError(ValueError):
    """A threshold formula produced a non-integer where one is required."""


class ConstructionInfeasibleError(ValueError):
    """A construction's derived quantities are negative at these parameters."""


class BudgetExceededError(RuntimeError):
    """An exhaustive search would exceed the configured work ceiling."""

    def __init__(self, estimate: int, budget: int) -> None:
        super().__init__(
            f"estimated {estimate} window evaluations exceed budget {budget}"
        )
        self.estimate = estimate
        self.budget = budget


class ShiftSearchError(RuntimeError):
    """No qualifying shift was found within the scanned range."""

    def __init__(self, message: str, alpha_min: int, alpha_max: int) -> None:
        super().__init__(message)
        self.alpha_min = alpha_min
        self.alpha_max = alpha_max


@dataclass(frozen=True)
class Params:
    """The triple (r, s, k): letters -r and +s, target subsequence length k.

    gcd(r, s) = 1 is required; dividing both letters by their gcd leaves
    every zero-sum question unchanged, so nothing is lost.  Divisibility of
    k by r + s is only needed when a zero-sum k-subsequence is actually
    sought, so it is checked per operation, not here.
    """

    r: int
    s: int
    k: int

    def __post_init__(self) -> None:
        if self.r < 1 or self.s < 1:
            raise ParameterError(f"r and s must be positive, got r={self.r} s={self.s}")
        if self.k < 1:
            raise ParameterError(f"k must be positive, got k={self.k}")
        if math.gcd(self.r, self.s) != 1:
            raise ParameterError(
                f"gcd(r, s) must be 1, got gcd({self.r}, {self.s}) = "
                f"{math.gcd(self.r, self.s)}"
            )

    @property
    def modulus(self) -> int:
        return self.r + self.s

    def require_block_divisibility(self) -> None:
        """Raise unless (r + s) | k.

        A sum of k terms from {-r, s} is congruent to s*k mod r + s, so a
        zero-sum k-subsequence can only exist when r + s divides k.
        """
        if self.k % self.modulus != 0:
            raise ParameterError(
                f"(r + s) = {self.modulus} must divide k = {self.k} "
                f"for zero-sum k-subsequences to exist"
            )

    def to_json_dict(self) -> dict:
        return {"r": self.r, "s": self.s, "k": self.k}


class SignSeq:
    """A finite {-r, +s}-valued sequence with a compact selector encoding.

    Bit i of ``bits`` is 0 for value -r and 1 for value +s at position i.
    Prefix weights are built lazily so that full-sequence and window
    weights cost O(1) after the first query.
    """

    __slots__ = ("params", "n", "bits", "_prefix")

    def __init__(self, params: Params, n: int, bits: int) -> None:
        if n < 0:
            raise ParameterError(f"sequence length must be nonnegative, got {n}")
        if bits < 0 or bits >> n:
            raise ParameterError("selector bits out of range for length")
        self.params = params
        self.n = n
        self.bits = bits
        self._prefix: tuple[int, ...] | None = None

    @classmethod
    def from_values(cls, params: Params, values: Iterable[int]) -> "SignSeq":
        bits = 0
        n = 0
        for v in values:
            if v == params.s:
                bits |= 1 << n
            elif v != -params.r:
                raise ParameterError(
                    f"value {v} at position {n} is neither -r = {-params.r} "
                    f"nor s = {params.s}"
                )
            n += 1
        return cls(params, n, bits)

    @classmethod
    def from_bitstring(cls, params: Params, bitstring: str) -> "SignSeq":
        bits = 0
        for i, ch in enumerate(bitstring):
            if ch == "1":
                bits |= 1 << i
            elif ch != "0":
                raise ParameterError(f"bad selector character {ch!r} at position {i}")
        return cls(params, len(bitstring), bits)

    def value(self, i: int) -> int:
        if not 0 <= i < self.n:
            raise ParameterError(f"index {i} out of range [0, {self.n})")
        return self.params.s if (self.bits >> i) & 1 else -self.params.r

    def values(self) -> tuple[int, ...]:
        r, s, bits = self.params.r, self.params.s, self.bits
        return tuple(s if (bits >> i) & 1 else -r for i in range(self.n))

    def bitstring(self) -> str:
        bits = self.bits
        return "".join("1" if (bits >> i) & 1 else "0" for i in range(self.n))

    def prefix_weights(self) -> tuple[int, ...]:
        """Prefix sums P with P[i] = weight of positions [0, i)."""
        if self._prefix is None:
            acc = [0]
            total = 0
            r, s, bits = self.params.r, self.params.s, self.bits
            for i in range(self.n):
                total += s if (bits >> i) & 1 else -r
                acc.append(total)
            self._prefix = tuple(acc)
        return self._prefix

    def total_weight(self) -> int:
        ones = self.bits.bit_count()
        return self.params.s * ones - self.params.r * (self.n - ones)

    def window_weight(self, start: int, length: int) -> int:
        if start < 0 or length < 0 or start + length > self.n:
            raise ParameterError(
                f"window [{start}, {start + length}) out of range [0, {self.n})"
            )
        p = self.prefix_weights()
        return p[start + length] - p[start]

    def __eq__(self, other: object) -> bool:
        # k parameterizes queries against a sequence, not the sequence
        # itself, so equality compares the alphabet and the letters only.
        if not isinstance(other, SignSeq):
            return NotImplemented
        return (
            (self.params.r, self.params.s) == (other.params.r, other.params.s)
            and self.n == other.n
            and self.bits == other.bits
        )

    def __hash__(self) -> int:
        return hash((self.params.r, self.params.s, self.n, self.bits))

    def __len__(self) -> int:
        return self.n

    def __repr__(self) -> str:
        body = self.bitstring() if self.n <= 64 else f"<{self.n} positions>"
        return f"SignSeq(r={self.params.r}, s={self.params.s}, n={self.n}, {body})"


def weight(seq: SignSeq, indices: Iterable[int]) -> Weight:
    """Sum of sequence values over an index set."""
    total = 0
    for i in indices:
        total += seq.value(i)
    return total


@dataclass(frozen=True)
class ResidueProfile:
    """Residue structure of an m-term arithmetic progression taken mod m.

    The distinct residues form an arithmetic progression with common
    difference gcd(d, m); each appears with multiplicity gcd(d, m).
    """

    modulus: int
    first_residue: int
    step: int
    distinct_count: int
    multiplicity: int

    def distinct_residues(self) -> tuple[int, ...]:
        return tuple(
            self.first_residue + i * self.step for i in range(self.distinct_count)
        )

    def to_json_dict(self) -> dict:
        return {
            "modulus": self.modulus,
            "firstResidue": self.first_residue,
            "step": self.step,
            "distinctCount": self.distinct_count,
            "multiplicity": self.multiplicity,
        }


def residue_profile(start: int, d: int, m: int) -> ResidueProfile:
    """Profile the multiset {start, start+d, ..., start+(m-1)d} mod m.

    With g = gcd(d, m) the progression visits exactly the m/g residues
    congruent to start mod g, each exactly g times.
    """
    if d < 1:
        raise ParameterError(f"common difference must be positive, got {d}")
    if m < 1:
        raise ParameterError(f"modulus must be positive, got {m}")
    g = math.gcd(d, m)
    return ResidueProfile(
        modulus=m,
        first_residue=start % g,
        step=g,
        distinct_count=m // g,
        multiplicity=g,
    )


@dataclass(frozen=True)
class WeightRange:
    """All achievable total weights of a {-r, s}-sequence of length alpha.

    An arithmetic progression from -r*alpha to s*alpha with alpha + 1 terms
    and common difference r + s.
    """

    alpha: int
    low: int
    step: int
    count: int

    @property
    def high(self) -> int:
        return self.low + self.step * (self.count - 1)

    def __contains__(self, w: int) -> bool:
        return self.low <= w <= self.high and (w - self.low) % self.step == 0

    def __iter__(self) -> Iterator[int]:
        for i in range(self.count):
            yield self.low + i * self.step

    def values(self) -> tuple[int, ...]:
        return tuple(self)

    def to_json_dict(self) -> dict:
        return {
            "alpha": self.alpha,
            "low": self.low,
            "step": self.step,
            "count": self.count,
        }


def weight_range(alpha: int, params: Params) -> WeightRange:
    """Descriptor for the weights achievable with exactly alpha letters."""
    if alpha < 0:
        raise ParameterError(f"alpha must be nonnegative, got {alpha}")
    return WeightRange(
        alpha=alpha,
        low=-params.r * alpha,
        step=params.modulus,
        count=alpha + 1,
    )
