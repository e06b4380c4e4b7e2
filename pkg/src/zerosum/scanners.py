"""Fast detectors for zero-sum blocks, zero-sum arithmetic subsequences,
and small-sum blocks, plus the interpolation-property checker.

Block scans run in O(n) on prefix sums.  AP scans cost O(n * maxD) with
maxD = floor((n-1)/(k-1)): for each common difference the windows inside
each residue class are swept with stride-prefix sums.  Witness order is
deterministic: blocks by lowest start, APs by lowest difference then
lowest start.  A naive rescan is kept alongside the optimized scanner as
its correctness oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import ParameterError, SignSeq

MODE_BLOCK = "block"
MODE_AP = "ap"
MODE_SMALLSUM = "smallsum"


@dataclass(frozen=True)
class ScanReport:
    """Outcome of one scan: a witness or a certificate of absence.

    ``witness`` is (start, difference), difference 1 for blocks.
    ``min_abs_weight`` is the minimum |window weight| over the windows
    scanned; when a witness is found the scan stops there, which keeps the
    reported minimum exact (earlier windows all miss the target).
    """

    mode: str
    k: int
    found: bool
    witness: tuple[int, int] | None
    min_abs_weight: int
    scanned_count: int
    t: int | None = None
    per_d_min_abs: dict[int, int] | None = None

    def to_json_dict(self) -> dict:
        out = {
            "mode": self.mode,
            "k": self.k,
            "found": self.found,
            "witness": (
                None
                if self.witness is None
                else {"start": self.witness[0], "difference": self.witness[1]}
            ),
            "minAbsWeight": self.min_abs_weight,
            "scannedCount": self.scanned_count,
        }
        if self.t is not None:
            out["t"] = self.t
        if self.per_d_min_abs is not None:
            out["perDifferenceMinAbs"] = {
                str(d): v for d, v in sorted(self.per_d_min_abs.items())
            }
        return out


def _check_window_length(seq: SignSeq, k: int) -> None:
    if k < 1:
        raise ParameterError(f"k must be positive, got {k}")
    if k > seq.n:
        raise ParameterError(f"k = {k} exceeds sequence length n = {seq.n}")


def block_scan(seq: SignSeq, k: int) -> ScanReport:
    """Find the lowest-start zero-sum k-block, or certify there is none."""
    _check_window_length(seq, k)
    prefix = seq.prefix_weights()
    min_abs: int | None = None
    scanned = 0
    for i in range(seq.n - k + 1):
        w = prefix[i + k] - prefix[i]
        scanned += 1
        if min_abs is None or abs(w) < min_abs:
            min_abs = abs(w)
        if w == 0:
            return ScanReport(
                mode=MODE_BLOCK,
                k=k,
                found=True,
                witness=(i, 1),
                min_abs_weight=0,
                scanned_count=scanned,
            )
    return ScanReport(
        mode=MODE_BLOCK,
        k=k,
        found=False,
        witness=None,
        min_abs_weight=min_abs,
        scanned_count=scanned,
    )


def max_difference(n: int, k: int) -> int:
    """Largest common difference d with a k-term AP inside [0, n)."""
    return (n - 1) // (k - 1) if k > 1 else 1


def ap_scan(seq: SignSeq, k: int, collect_per_d: bool = False) -> ScanReport:
    """Find the least (difference, start) zero-sum k-term AP, or certify none.

    For k = 1 only d = 1 is scanned: one-term windows are the same set for
    every difference (and never zero-sum, the letters being nonzero).
    """
    _check_window_length(seq, k)
    n = seq.n
    values = seq.values()
    min_abs: int | None = None
    scanned = 0
    per_d: dict[int, int] = {}
    for d in range(1, max_difference(n, k) + 1):
        # Stride prefix sums per residue class mod d: class c holds
        # positions c, c + d, ...; a k-term AP is a k-window in its class.
        class_prefix: list[list[int]] = []
        for c in range(d):
            acc = [0]
            total = 0
            for p in range(c, n, d):
                total += values[p]
                acc.append(total)
            class_prefix.append(acc)
        d_min: int | None = None
        for start in range(0, n - (k - 1) * d):
            c, j = start % d, start // d
            acc = class_prefix[c]
            w = acc[j + k] - acc[j]
            scanned += 1
            if min_abs is None or abs(w) < min_abs:
                min_abs = abs(w)
            if d_min is None or abs(w) < d_min:
                d_min = abs(w)
            if w == 0:
                if collect_per_d:
                    per_d[d] = 0
                return ScanReport(
                    mode=MODE_AP,
                    k=k,
                    found=True,
                    witness=(start, d),
                    min_abs_weight=0,
                    scanned_count=scanned,
                    per_d_min_abs=per_d if collect_per_d else None,
                )
        if collect_per_d and d_min is not None:
            per_d[d] = d_min
    return ScanReport(
        mode=MODE_AP,
        k=k,
        found=False,
        witness=None,
        min_abs_weight=min_abs,
        scanned_count=scanned,
        per_d_min_abs=per_d if collect_per_d else None,
    )


def ap_scan_naive(seq: SignSeq, k: int) -> ScanReport:
    """Reference AP scan: sum every window term by term, O(#APs * k).

    Kept deliberately independent of ap_scan as its correctness oracle.
    """
    _check_window_length(seq, k)
    n = seq.n
    values = seq.values()
    min_abs: int | None = None
    scanned = 0
    for d in range(1, max_difference(n, k) + 1):
        for start in range(0, n - (k - 1) * d):
            w = 0
            for j in range(k):
                w += values[start + j * d]
            scanned += 1
            if min_abs is None or abs(w) < min_abs:
                min_abs = abs(w)
            if w == 0:
                return ScanReport(
                    mode=MODE_AP,
                    k=k,
                    found=True,
                    witness=(start, d),
                    min_abs_weight=0,
                    scanned_count=scanned,
                )
    return ScanReport(
        mode=MODE_AP,
        k=k,
        found=False,
        witness=None,
        min_abs_weight=min_abs,
        scanned_count=scanned,
    )


def smallsum_block_scan(seq: SignSeq, k: int, t: int) -> ScanReport:
    """Find the lowest-start k-block with |weight| <= t in a {-1, 1}-sequence."""
    if seq.params.r != 1 or seq.params.s != 1:
        raise ParameterError("small-sum scans are defined for r = s = 1 only")
    if not 0 <= t < k:
        raise ParameterError(f"t must satisfy 0 <= t < k, got t={t} k={k}")
    if t % 2 != k % 2:
        raise ParameterError(f"t and k must have the same parity, got t={t} k={k}")
    _check_window_length(seq, k)
    prefix = seq.prefix_weights()
    min_abs: int | None = None
    scanned = 0
    for i in range(seq.n - k + 1):
        w = prefix[i + k] - prefix[i]
        scanned += 1
        if min_abs is None or abs(w) < min_abs:
            min_abs = abs(w)
        if abs(w) <= t:
            return ScanReport(
                mode=MODE_SMALLSUM,
                k=k,
                found=True,
                witness=(i, 1),
                min_abs_weight=min_abs,
                scanned_count=scanned,
                t=t,
            )
    return ScanReport(
        mode=MODE_SMALLSUM,
        k=k,
        found=False,
        witness=None,
        min_abs_weight=min_abs,
        scanned_count=scanned,
        t=t,
    )


@dataclass(frozen=True)
class InterpolationReport:
    """All three window-weight facts behind the intermediate-value argument."""

    ok: bool
    sign_change_implies_zero: bool
    adjacent_step_bounded: bool
    residues_vanish: bool
    window_count: int
    detail: str | None = None

    def to_json_dict(self) -> dict:
        return {
            "ok": self.ok,
            "signChangeImpliesZero": self.sign_change_implies_zero,
            "adjacentStepBounded": self.adjacent_step_bounded,
            "residuesVanish": self.residues_vanish,
            "windowCount": self.window_count,
            "detail": self.detail,
        }


def interpolation_check(seq: SignSeq, k: int) -> InterpolationReport:
    """Verify the interpolation facts on every k-window of the sequence.

    Requires (r + s) | k.  Checks that (a) a strictly negative and a
    strictly positive window force a zero window, (b) adjacent windows
    differ by at most r + s (they differ in exactly two elements), and
    (c) every window weight is divisible by r + s.
    """
    m = seq.params.modulus
    if k % m != 0:
        raise ParameterError(f"(r + s) = {m} must divide k = {k}")
    _check_window_length(seq, k)
    prefix = seq.prefix_weights()
    weights = [prefix[i + k] - prefix[i] for i in range(seq.n - k + 1)]

    has_neg = any(w < 0 for w in weights)
    has_pos = any(w > 0 for w in weights)
    has_zero = any(w == 0 for w in weights)
    sign_ok = (not (has_neg and has_pos)) or has_zero

    step_ok = all(
        abs(weights[i + 1] - weights[i]) <= m for i in range(len(weights) - 1)
    )
    residue_ok = all(w % m == 0 for w in weights)

    detail = None
    if not sign_ok:
        detail = "sign change without a zero window"
    elif not step_ok:
        detail = "adjacent windows differ by more than r + s"
    elif not residue_ok:
        detail = "window weight not divisible by r + s"
    return InterpolationReport(
        ok=sign_ok and step_ok and residue_ok,
        sign_change_implies_zero=sign_ok,
        adjacent_step_bounded=step_ok,
        residues_vanish=residue_ok,
        window_count=len(weights),
        detail=detail,
    )
