# sync_search/bounds/franklpin.py

"""
Frankl-Pin sequences and the rank-descent bound on extensions.

An m-subset Frankl-Pin sequence is a list of (M_i, R_i) with R_i a pair,
R_i ⊆ M_i, and R_i ⊄ M_j for every j < i. Its length is at most
C(n-m+2, 2). A long sequence over a set P of pairs with small merge height
lowers the cost of compressing an m-subset, and chaining that with the
rank-decrease step gives a bound valid for every synchronizing extension.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from sync_search.core.automaton import Automaton
from sync_search.core.transformation import Transformation, compose, power, rank
from sync_search.errors import InvalidArgumentError
from sync_search.synchro.pairs import PairTable, sync_height
from sync_search.synchro.reset import SyncAnalysis

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]

PROP2_CONDITIONS = ("idempotent_or_involution", "involution_only")


@dataclass(frozen=True)
class FPSequence:
    m: int
    items: Tuple[Tuple[FrozenSet[int], Pair], ...] = ()

    def __len__(self) -> int:
        return len(self.items)


@dataclass
class BoundReport:
    n: int
    k: int
    min_rank: int
    min_rank_word_length: int
    pair_count: int
    height: int
    greedy_lengths: Dict[int, int] = field(default_factory=dict)
    rank_descent_bound: int = 0
    best_one_cluster_bound: Optional[int] = None
    verdict: Optional[str] = None


def _check_size(n: int, m: int):
    if not 2 <= m <= n:
        raise InvalidArgumentError(f"subset size m={m} must satisfy 2 <= m <= n={n}")


def frankl_limit(n: int, m: int) -> int:
    _check_size(n, m)
    return math.comb(n - m + 2, 2)


def validate_sequence(seq: FPSequence) -> bool:
    for i, (subset, pair) in enumerate(seq.items):
        if len(subset) != seq.m or not set(pair) <= subset:
            return False
        for earlier, _ in seq.items[:i]:
            if set(pair) <= earlier:
                return False
    return True


def greedy_sequence(pairs: Sequence[Pair], m: int, n: int) -> FPSequence:
    """
    Pick the remaining pair touching the fewest other remaining pairs, then
    grow its subset with states that complete no remaining pair, preferring
    states involved in the fewest remaining pairs. A pair whose subset cannot
    reach size m is dropped without an item.
    """
    _check_size(n, m)
    remaining = {tuple(sorted(p)) for p in pairs}
    items = []

    while remaining:
        touching = [0] * n
        for x, y in remaining:
            touching[x] += 1
            touching[y] += 1

        chosen = min(remaining, key=lambda p: (touching[p[0]] + touching[p[1]] - 2, p))
        remaining.discard(chosen)
        for q in chosen:
            touching[q] -= 1

        subset = set(chosen)
        while len(subset) < m:
            candidates = [
                s for s in range(n)
                if s not in subset
                and not any(tuple(sorted((s, t))) in remaining for t in subset)
            ]
            if not candidates:
                break
            subset.add(min(candidates, key=lambda s: (touching[s], s)))

        if len(subset) == m:
            items.append((frozenset(subset), chosen))

    seq = FPSequence(m=m, items=tuple(items))
    assert len(seq) <= frankl_limit(n, m)
    return seq


def unary_stats(t: Transformation) -> Tuple[List[Pair], int, int]:
    """
    Compressible pairs of the unary automaton with letter t, their count, and
    the exact largest merge height. Pairs merge iff their images under t^n agree.
    """
    n = t.n
    stable = power(t, n)
    r = rank(stable)
    pairs = [
        (x, y)
        for x in range(n)
        for y in range(x + 1, n)
        if stable(x) == stable(y)
    ]

    height = 0
    if pairs:
        step = t
        merged_at: Dict[Pair, int] = {}
        for j in range(1, n):
            for x, y in pairs:
                if (x, y) not in merged_at and step(x) == step(y):
                    merged_at[(x, y)] = j
            if len(merged_at) == len(pairs):
                break
            step = compose(step, t)
        height = max(merged_at.values())

    assert height <= n - r
    return pairs, len(pairs), height


def unary_sequence(t: Transformation, m: int) -> FPSequence:
    """
    Explicit sequence of length |P| for a unary letter: M_i is R_i plus the
    m-2 smallest states of S \\ T_i, with S the image of t^(n-r) and T_i the
    states of S that t^(n-r) sends where R_i goes.
    """
    n = t.n
    r = rank(power(t, n))
    if not 2 <= m <= r:
        raise InvalidArgumentError(f"subset size m={m} must satisfy 2 <= m <= r={r}")
    w = power(t, n - r)
    image = sorted(set(w.image))
    pairs, _, _ = unary_stats(t)

    items = []
    for x, y in pairs:
        target = w(x)
        blocked = {s for s in image if w(s) == target}
        pool = [s for s in image if s not in blocked]
        items.append((frozenset((x, y, *pool[:m - 2])), (x, y)))
    return FPSequence(m=m, items=tuple(items))


def theorem2_bound(n: int, m: int, p: int, h: int) -> int:
    limit = frankl_limit(n, m)
    if not 0 <= p <= limit:
        raise InvalidArgumentError(f"sequence length p={p} exceeds the limit {limit}")
    return limit - p + h


def theorem4_step(n: int, m: int, u_len: int) -> int:
    _check_size(n, m)
    return 2 * u_len + n - m + 1


def sequence_lengths(automaton: Automaton, pairs: PairTable, top: int) -> Dict[int, int]:
    """p_r for every subset size 2..top; the unary case uses |P| directly."""
    if automaton.k == 1:
        _, p, _ = unary_stats(automaton.letter(0))
        return {r: p for r in range(2, top + 1)}
    compressible = pairs.compressible
    return {r: len(greedy_sequence(compressible, r, automaton.n)) for r in range(2, top + 1)}


def rank_descent_bound(
    automaton: Automaton,
    analysis: SyncAnalysis,
    pairs: PairTable,
    use_theorem2: bool = True,
    use_theorem4: bool = True,
    lengths: Dict[int, int] = None,
) -> int:
    """
    Upper bound on the reset length of every synchronizing extension,
    descending one rank at a time from the minimal-rank word.
    """
    if not (use_theorem2 or use_theorem4):
        raise InvalidArgumentError("rank descent needs at least one step rule")
    n = automaton.n
    top = analysis.min_rank
    if lengths is None and use_theorem2:
        lengths = sequence_lengths(automaton, pairs, top)
    h = sync_height(pairs)

    current = analysis.min_rank_word_length
    for r in range(top, 1, -1):
        options = []
        if use_theorem4:
            options.append(theorem4_step(n, r, current))
        if use_theorem2:
            options.append(current + theorem2_bound(n, r, lengths[r], h))
        current = min(options)
    return current


def build_bound_report(
    automaton: Automaton,
    analysis: SyncAnalysis,
    pairs: PairTable,
    use_theorem2: bool = True,
    use_theorem4: bool = True,
) -> BoundReport:
    lengths = sequence_lengths(automaton, pairs, analysis.min_rank)
    return BoundReport(
        n=automaton.n,
        k=automaton.k,
        min_rank=analysis.min_rank,
        min_rank_word_length=analysis.min_rank_word_length,
        pair_count=len(pairs.heights),
        height=sync_height(pairs),
        greedy_lengths=lengths,
        rank_descent_bound=rank_descent_bound(
            automaton, analysis, pairs, use_theorem2, use_theorem4, lengths
        ),
    )


def _is_idempotent(t: Transformation) -> bool:
    return compose(t, t) == t


def _is_involution(t: Transformation) -> bool:
    return all(t(t(q)) == q for q in range(t.n))


def prop2_bound(automaton: Automaton, condition: str = "idempotent_or_involution") -> Optional[int]:
    """
    2n-2 when both letters of a binary automaton square to themselves or to
    the identity; None otherwise.
    """
    if automaton.k != 2:
        raise InvalidArgumentError(f"binary automaton required, got k={automaton.k}")
    if condition not in PROP2_CONDITIONS:
        raise InvalidArgumentError(f"unknown condition {condition!r}")

    def qualifies(t: Transformation) -> bool:
        if _is_involution(t):
            return True
        return condition == "idempotent_or_involution" and _is_idempotent(t)

    if all(qualifies(t) for t in automaton.letters()):
        return 2 * automaton.n - 2
    return None


def prop3_bound(n: int) -> int:
    if n < 5:
        raise InvalidArgumentError(f"bound holds for n >= 5, got n={n}")
    return n * n - 4 * n + 5
