"""Exhaustive ground truth: exact thresholds for small parameters and
full-enumeration checks of the structural propositions.

The block-threshold search enumerates placements of the -r letters
(combinations, so the total-weight constraint is structural) and prunes
any branch whose already-completed windows contain a zero-sum k-block;
pruned subtrees are counted in closed form so the candidate tally still
equals C(n, #negatives).  Work is sharded by the position of the first
negative letter; results are independent of the shard count.
"""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass

from .core import BudgetExceededError, ParameterError, Params, SignSeq
from .constructions import ResidueFunction, build_ap_mod_k_product

MODE_BLOCK = "block"
MODE_AP = "ap"

DEFAULT_BUDGET = 10**9
BUDGET_ENV_VAR = "ZEROSUM_BUDGET"


def resolve_budget(budget: int | None = None) -> int:
    """Window-evaluation ceiling: explicit value, else env override, else default."""
    if budget is not None:
        return budget
    env = os.environ.get(BUDGET_ENV_VAR)
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise ParameterError(
                f"{BUDGET_ENV_VAR} must be an integer, got {env!r}"
            ) from exc
    return DEFAULT_BUDGET


@dataclass(frozen=True)
class ThresholdResult:
    """Outcome of an exhaustive threshold search.

    derived_threshold = max(k, max_avoiding_n + 1) over admissible lengths,
    or k when nothing avoids; with ``exhaustive`` true and ``capped`` false
    this is the exact threshold under the convention that only lengths
    admitting the weight constraint count.
    """

    params: Params
    mode: str
    q: int
    max_avoiding_n: int | None
    derived_threshold: int
    witnesses: tuple[SignSeq, ...]
    search_cap: int
    exhaustive: bool
    capped: bool
    avoiding_count_at_max: int
    notes: tuple[str, ...] = ()

    def to_json_dict(self) -> dict:
        return {
            "params": self.params.to_json_dict(),
            "mode": self.mode,
            "q": self.q,
            "maxAvoidingN": self.max_avoiding_n,
            "derivedThreshold": self.derived_threshold,
            "witnesses": [f"b:{w.bitstring()}" for w in self.witnesses],
            "searchCap": self.search_cap,
            "exhaustive": self.exhaustive,
            "capped": self.capped,
            "avoidingCountAtMax": self.avoiding_count_at_max,
            "notes": list(self.notes),
        }


def admissible_pos_counts(params: Params, q: int, n: int) -> list[int]:
    """Counts b of +s letters at length n with total weight |(r+s)b - rn| <= q."""
    m = params.modulus
    lo = -((q - params.r * n) // m)  # ceil((r*n - q) / m) in pure ints
    hi = (params.r * n + q) // m
    return list(range(max(lo, 0), min(hi, n) + 1))


def _block_window_count(n: int, k: int) -> int:
    return n - k + 1


def _ap_window_count(n: int, k: int) -> int:
    if k == 1:
        return n
    total = 0
    for d in range(1, (n - 1) // (k - 1) + 1):
        total += n - (k - 1) * d
    return total


def estimate_window_evaluations(
    params: Params, mode: str, q: int, search_cap: int
) -> int:
    """Upper bound on scanner-window evaluations for an exhaustive search."""
    windows = _block_window_count if mode == MODE_BLOCK else _ap_window_count
    total = 0
    for n in range(params.k, search_cap + 1):
        per = windows(n, params.k)
        for b in admissible_pos_counts(params, q, n):
            total += math.comb(n, n - b) * per
    return total


def _ap_has_target(flags: bytearray, n: int, k: int, c_star: int) -> bool:
    """Does some k-term AP contain exactly c_star flagged positions?"""
    if k == 1:
        return any(f == c_star for f in flags)
    for d in range(1, (n - 1) // (k - 1) + 1):
        for c in range(d):
            size = (n - c + d - 1) // d
            if size < k:
                continue
            cnt = 0
            for j in range(k):
                cnt += flags[c + j * d]
            if cnt == c_star:
                return True
            for j in range(size - k):
                cnt += flags[c + (j + k) * d] - flags[c + j * d]
                if cnt == c_star:
                    return True
    return False


def _finalize(
    chosen: list[int], w: int, lo: int, hi: int, upto: int, k: int, c_star: int
) -> tuple[int, int, int, bool]:
    """Check windows [w, w+k) while fully decided (w + k <= upto).

    lo and hi are the counts of chosen positions below w and below w + k;
    their difference is the window's negative-letter count.  Returns the
    advanced pointers and whether any finalized window hit c_star.
    """
    while w + k <= upto:
        if hi - lo == c_star:
            return w, lo, hi, True
        if lo < len(chosen) and chosen[lo] == w:
            lo += 1
        if hi < len(chosen) and chosen[hi] == w + k:
            hi += 1
        w += 1
    return w, lo, hi, False


def _enumerate_block_shard(
    n: int, k: int, negs: int, c_star: int, first: int
) -> tuple[int, list[int]]:
    """All placements with smallest negative position == first.

    Returns (candidates accounted for, neg-position bitmasks of avoiders).
    Subtrees whose completed windows already contain a c_star window are
    pruned and counted in closed form.
    """
    avoiders: list[int] = []
    candidates = 0
    chosen = [first]

    def rec(min_pos: int, left: int, w: int, lo: int, hi: int) -> None:
        nonlocal candidates
        for p in range(min_pos, n - left + 1):
            chosen.append(p)
            nhi = hi + 1 if p < w + k else hi
            w2, lo2, hi2, hit = _finalize(chosen, w, lo, nhi, p + 1, k, c_star)
            if hit:
                candidates += math.comb(n - p - 1, left - 1)
            elif left == 1:
                _, _, _, tail_hit = _finalize(chosen, w2, lo2, hi2, n, k, c_star)
                candidates += 1
                if not tail_hit:
                    mask = 0
                    for pos in chosen:
                        mask |= 1 << pos
                    avoiders.append(mask)
            else:
                rec(p + 1, left - 1, w2, lo2, hi2)
            chosen.pop()

    hi0 = 1 if first < k else 0
    w1, lo1, hi1, hit = _finalize(chosen, 0, 0, hi0, first + 1, k, c_star)
    if hit:
        candidates += math.comb(n - first - 1, negs - 1)
    elif negs == 1:
        _, _, _, tail_hit = _finalize(chosen, w1, lo1, hi1, n, k, c_star)
        candidates += 1
        if not tail_hit:
            avoiders.append(1 << first)
    else:
        rec(first + 1, negs - 1, w1, lo1, hi1)
    return candidates, avoiders


def _enumerate_ap_shard(
    n: int, k: int, negs: int, c_star: int, first: int
) -> tuple[int, list[int]]:
    """AP-mode analogue of _enumerate_block_shard: plain scan per candidate."""
    avoiders: list[int] = []
    candidates = 0
    flags = bytearray(n)
    flags[first] = 1
    for rest in itertools.combinations(range(first + 1, n), negs - 1):
        for p in rest:
            flags[p] = 1
        candidates += 1
        if not _ap_has_target(flags, n, k, c_star):
            mask = 1 << first
            for p in rest:
                mask |= 1 << p
            avoiders.append(mask)
        for p in rest:
            flags[p] = 0
    return candidates, avoiders


def _run_shard(task: tuple) -> tuple[int, int, int, list[int]]:
    """Worker entry point: one (length, pos-count) slice of first positions."""
    mode, n, k, negs, c_star, firsts = task
    enum = _enumerate_block_shard if mode == MODE_BLOCK else _enumerate_ap_shard
    candidates = 0
    avoiders: list[int] = []
    for first in firsts:
        got, masks = enum(n, k, negs, c_star, first)
        candidates += got
        avoiders.extend(masks)
    return n, negs, candidates, avoiders


def _enumerate_length(
    mode: str, n: int, k: int, negs: int, c_star: int, shards: int, executor
) -> tuple[int, list[int]]:
    """Candidates and avoider masks for one (n, negs) configuration."""
    if negs == 0:
        # All letters +s: no window reaches c_star >= 1, so it avoids.
        return 1, [0]
    firsts = list(range(0, n - negs + 1))
    if executor is None or shards <= 1:
        return _run_shard((mode, n, k, negs, c_star, tuple(firsts)))[2:]
    buckets = [tuple(firsts[i::shards]) for i in range(shards)]
    tasks = [(mode, n, k, negs, c_star, b) for b in buckets if b]
    candidates = 0
    avoiders: list[int] = []
    for _, _, got, masks in executor.map(_run_shard, tasks):
        candidates += got
        avoiders.extend(masks)
    return candidates, avoiders


def exact_threshold(
    params: Params,
    mode: str,
    q: int = 0,
    search_cap: int = 0,
    budget: int | None = None,
    shards: int = 1,
) -> ThresholdResult:
    """Exhaustively derive the block or AP threshold up to ``search_cap``.

    For each admissible length (one where a sequence with |total| <= q
    exists) every letter placement is enumerated and scanned.  The derived
    threshold is max(k, last avoiding length + 1); ``capped`` marks results
    where avoiders persist at the top admissible length, in which case the
    value is only a lower bound.
    """
    params.require_block_divisibility()
    if q < 0:
        raise ParameterError(f"q must be nonnegative, got {q}")
    if mode not in (MODE_BLOCK, MODE_AP):
        raise ParameterError(f"mode must be 'block' or 'ap', got {mode!r}")
    if shards < 1:
        raise ParameterError(f"shards must be >= 1, got {shards}")
    ceiling = resolve_budget(budget)
    estimate = estimate_window_evaluations(params, mode, q, search_cap)
    if estimate > ceiling:
        raise BudgetExceededError(estimate, ceiling)

    k = params.k
    c_star = params.s * k // params.modulus
    executor = None
    if shards > 1:
        from concurrent.futures import ProcessPoolExecutor

        executor = ProcessPoolExecutor(max_workers=shards)
    try:
        max_avoiding: int | None = None
        masks_at_max: list[int] = []
        top_admissible: int | None = None
        notes: list[str] = []
        for n in range(k, search_cap + 1):
            pos_counts = admissible_pos_counts(params, q, n)
            if not pos_counts:
                continue
            top_admissible = n
            length_masks: list[int] = []
            for b in pos_counts:
                negs = n - b
                candidates, masks = _enumerate_length(
                    mode, n, k, negs, c_star, shards, executor
                )
                if candidates != math.comb(n, negs):
                    raise AssertionError(
                        f"enumeration accounted for {candidates} of "
                        f"{math.comb(n, negs)} candidates at n={n} negs={negs}"
                    )
                length_masks.extend(masks)
            if length_masks:
                max_avoiding = n
                masks_at_max = length_masks
        if top_admissible is None:
            notes.append("no admissible length within the search cap")
        derived = k if max_avoiding is None else max(k, max_avoiding + 1)
        capped = max_avoiding is not None and max_avoiding == top_admissible
        if capped:
            notes.append(
                "avoiders persist at the top admissible length; the derived "
                "threshold is only a lower bound"
            )
        witnesses = tuple(
            sorted(
                (
                    SignSeq(
                        params, max_avoiding, ((1 << max_avoiding) - 1) ^ mask
                    )
                    for mask in masks_at_max
                ),
                key=SignSeq.bitstring,
            )
        )
        return ThresholdResult(
            params=params,
            mode=mode,
            q=q,
            max_avoiding_n=max_avoiding,
            derived_threshold=derived,
            witnesses=witnesses,
            search_cap=search_cap,
            exhaustive=True,
            capped=capped,
            avoiding_count_at_max=len(masks_at_max),
            notes=tuple(notes),
        )
    finally:
        if executor is not None:
            executor.shutdown()


@dataclass(frozen=True)
class TwoKVerdict:
    """Every zero-sum {-1,1}-sequence of length 2k has a zero-sum k-block."""

    k: int
    ok: bool
    sequences_checked: int
    counterexample: SignSeq | None

    def to_json_dict(self) -> dict:
        return {
            "k": self.k,
            "ok": self.ok,
            "sequencesChecked": self.sequences_checked,
            "counterexample": (
                None if self.counterexample is None
                else f"b:{self.counterexample.bitstring()}"
            ),
        }


def verify_2k_proposition(k: int, budget: int | None = None) -> TwoKVerdict:
    """Enumerate all C(2k, k) zero-sum sequences of length 2k and confirm
    each contains a zero-sum k-block."""
    if k < 2 or k % 2:
        raise ParameterError(f"k must be even and >= 2, got {k}")
    if k > 12:
        raise BudgetExceededError(
            math.comb(2 * k, k) * (k + 1), resolve_budget(budget)
        )
    n = 2 * k
    c_star = k // 2
    params = Params(1, 1, k)
    checked = 0
    counterexample: SignSeq | None = None
    for first in range(0, n - k + 1):
        candidates, masks = _enumerate_block_shard(n, k, k, c_star, first)
        checked += candidates
        if masks and counterexample is None:
            counterexample = SignSeq(params, n, ((1 << n) - 1) ^ masks[0])
    return TwoKVerdict(
        k=k,
        ok=counterexample is None,
        sequences_checked=checked,
        counterexample=counterexample,
    )


@dataclass(frozen=True)
class Pow2Verdict:
    """Only the two constant sign functions on Z/2^v avoid every zero-sum
    dyadic progression (difference 2^v', full length, for all v' < v)."""

    v: int
    ok: bool
    functions_checked: int
    survivors: tuple[str, ...]

    def to_json_dict(self) -> dict:
        return {
            "v": self.v,
            "ok": self.ok,
            "functionsChecked": self.functions_checked,
            "survivors": list(self.survivors),
        }


def verify_pow2_rigidity(v: int) -> Pow2Verdict:
    """Enumerate all sign functions on {0, ..., 2^v - 1} and keep those with
    no zero-sum dyadic progression; exactly the two constants must remain.

    The progressions checked have common difference 2^v' and 2^(v-v') terms
    for every v' in [0, v - 1]; v' = 0 is the full-length progression, and
    without it non-constant period-2 functions would slip through.
    """
    if v < 2:
        raise ParameterError(f"v must be at least 2, got {v}")
    if v > 4:
        raise BudgetExceededError(1 << (1 << v), DEFAULT_BUDGET)
    k = 1 << v
    checks: list[tuple[int, int]] = []
    for vp in range(v):
        step = 1 << vp
        terms = k // step
        for j in range(step):
            mask = 0
            for t in range(terms):
                mask |= 1 << (j + t * step)
            checks.append((mask, terms // 2))
    survivors: list[int] = []
    for fn in range(1 << k):
        for mask, half in checks:
            if (fn & mask).bit_count() == half:
                break
        else:
            survivors.append(fn)
    expected = [0, (1 << k) - 1]
    bitstrings = tuple(format(fn, f"0{k}b")[::-1] for fn in survivors)
    return Pow2Verdict(
        v=v,
        ok=survivors == expected,
        functions_checked=1 << k,
        survivors=bitstrings,
    )


@dataclass(frozen=True)
class ResidueLemmaVerdict:
    """Counts and full-progression nonvanishing for a product residue function."""

    k: int
    factors: tuple[int, ...]
    ok: bool
    plus_count: int
    minus_count: int
    progressions_checked: int
    failure: tuple[int, int] | None  # (difference, start)

    def to_json_dict(self) -> dict:
        return {
            "k": self.k,
            "factors": list(self.factors),
            "ok": self.ok,
            "plusCount": self.plus_count,
            "minusCount": self.minus_count,
            "progressionsChecked": self.progressions_checked,
            "failure": (
                None
                if self.failure is None
                else {"difference": self.failure[0], "start": self.failure[1]}
            ),
        }


def verify_lemma_residue_properties(
    k: int, factors: tuple[int, ...] | list[int]
) -> ResidueLemmaVerdict:
    """Build the product residue function and check both of its properties:
    the +1/-1 counts are k/2 + 1 and k/2 - 1, and every full d-spaced
    progression over the residues has nonzero weight, for every d | k."""
    if k > 2310:
        raise BudgetExceededError(k * k, DEFAULT_BUDGET)
    fn: ResidueFunction = build_ap_mod_k_product(k, factors)
    plus, minus = fn.count_plus(), fn.count_minus()
    counts_ok = plus == k // 2 + 1 and minus == k // 2 - 1
    checked = 0
    failure: tuple[int, int] | None = None
    for d in range(1, k + 1):
        if k % d:
            continue
        terms = k // d
        for start in range(d):
            checked += 1
            if fn.progression_weight(start, d, terms) == 0:
                failure = (d, start)
                break
        if failure:
            break
    return ResidueLemmaVerdict(
        k=k,
        factors=fn.factors,
        ok=counts_ok and failure is None,
        plus_count=plus,
        minus_count=minus,
        progressions_checked=checked,
        failure=failure,
    )
