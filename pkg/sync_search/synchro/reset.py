# sync_search/synchro/reset.py

"""
Subset-space (power automaton) search.

Subsets are n-bit masks. Breadth-first search from the full state set with
letters tried in index order gives, for every reachable subset, the
lexicographically least among its shortest words. The same pass yields the
reset length and the minimal rank with a shortest word realizing it.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from sync_search.core.automaton import Automaton, restrict
from sync_search.errors import AutomatonError
from sync_search.synchro.pairs import is_synchronizing

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SyncAnalysis:
    synchronizing: bool
    reset_length: Optional[int]
    reset_word: Optional[Tuple[int, ...]]
    min_rank: int
    min_rank_word_length: int
    min_rank_word: Tuple[int, ...]


def image_tables(automaton: Automaton) -> List[List[int]]:
    """tables[a][mask] = mask of the image of `mask` under letter a."""
    n = automaton.n
    masks = np.arange(1 << n, dtype=np.int64)
    bits = (masks[:, None] >> np.arange(n, dtype=np.int64)) & 1
    tables = []
    for row in automaton.delta:
        weights = np.left_shift(np.int64(1), np.asarray(row, dtype=np.int64))
        tables.append(np.bitwise_or.reduce(bits * weights, axis=1).tolist())
    return tables


def _word_to(mask: int, parent: dict) -> Tuple[int, ...]:
    word = []
    while True:
        prev, letter = parent[mask]
        if prev is None:
            break
        word.append(letter)
        mask = prev
    return tuple(reversed(word))


def reset_analysis(automaton: Automaton) -> SyncAnalysis:
    n = automaton.n
    full = (1 << n) - 1
    tables = image_tables(automaton)

    parent = {full: (None, None)}
    frontier = [full]
    best_mask, best_rank = full, n
    depth = 0
    while frontier and best_rank > 1:
        depth += 1
        following = []
        for mask in frontier:
            for letter, table in enumerate(tables):
                image = table[mask]
                if image in parent:
                    continue
                parent[image] = (mask, letter)
                following.append(image)
                size = bin(image).count("1")
                if size < best_rank:
                    best_rank, best_mask = size, image
        frontier = following

    word = _word_to(best_mask, parent)
    synchronizing = best_rank == 1
    logger.debug(f"🔍 subset search visited {len(parent)} subsets, rank {best_rank}")
    return SyncAnalysis(
        synchronizing=synchronizing,
        reset_length=len(word) if synchronizing else None,
        reset_word=word if synchronizing else None,
        min_rank=best_rank,
        min_rank_word_length=len(word),
        min_rank_word=word,
    )


def reset_length(automaton: Automaton) -> Optional[int]:
    return reset_analysis(automaton).reset_length


def is_irreducibly_synchronizing(automaton: Automaton) -> bool:
    """
    Synchronizing, and no restriction to a proper sub-alphabet is.
    Removing one letter at a time suffices since sub-alphabets of
    non-synchronizing restrictions are non-synchronizing too.
    """
    if not is_synchronizing(automaton):
        raise AutomatonError("irreducibility is only defined for synchronizing automata")
    if automaton.k == 1:
        return True
    letters = range(automaton.k)
    for a in letters:
        if is_synchronizing(restrict(automaton, [b for b in letters if b != a])):
            return False
    return True
