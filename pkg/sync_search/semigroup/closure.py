# sync_search/semigroup/closure.py

"""
Transition semigroup of an automaton by breadth-first closure.

Elements are interned as fixed-width byte keys (one byte per state). Each
level multiplies the whole frontier by one letter at a time with numpy fancy
indexing, so the element t followed by letter a is row_a[t].
"""

import logging
from dataclasses import dataclass
from typing import Dict, Iterator, Optional, Tuple, Union

import numpy as np

from sync_search.core.automaton import Automaton, restrict
from sync_search.core.transformation import Transformation
from sync_search.errors import InvalidArgumentError

logger = logging.getLogger(__name__)

DEFAULT_CAP = 2_000_000

Element = Union[Transformation, bytes]


def _as_key(t: Element) -> bytes:
    return t.key() if isinstance(t, Transformation) else bytes(t)


@dataclass(frozen=True)
class SemigroupTable:
    n: int
    entries: Dict[bytes, int]
    parents: Dict[bytes, Tuple[Optional[bytes], int]]
    complete: bool

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, t: Element) -> bool:
        return _as_key(t) in self.entries

    def length(self, t: Element) -> Optional[int]:
        """Length of a shortest word inducing t, or None if t was not reached."""
        return self.entries.get(_as_key(t))

    def items(self) -> Iterator[Tuple[Transformation, int]]:
        """Elements ordered by word length, then by key."""
        for key, s in sorted(self.entries.items(), key=lambda kv: (kv[1], kv[0])):
            yield Transformation.from_key(key), s

    def word(self, t: Element) -> Tuple[int, ...]:
        key = _as_key(t)
        if key not in self.parents:
            raise InvalidArgumentError("transformation is not in the table")
        letters = []
        while key is not None:
            key, letter = self.parents[key]
            letters.append(letter)
        return tuple(reversed(letters))


def enumerate_semigroup(automaton: Automaton, cap: int = DEFAULT_CAP) -> SemigroupTable:
    """
    Closure from the letters, recording for every element the length of a
    shortest word inducing it. Stops as soon as one more element would push
    the table past `cap` and marks it incomplete.
    """
    if cap < automaton.k:
        raise InvalidArgumentError(f"cap {cap} is smaller than the alphabet size {automaton.k}")

    n = automaton.n
    rows = [np.asarray(row, dtype=np.uint8) for row in automaton.delta]
    entries: Dict[bytes, int] = {}
    parents: Dict[bytes, Tuple[Optional[bytes], int]] = {}

    frontier_keys = []
    for a, row in enumerate(rows):
        key = row.tobytes()
        if key not in entries:
            entries[key] = 1
            parents[key] = (None, a)
            frontier_keys.append(key)

    complete = True
    depth = 1
    while frontier_keys and complete:
        depth += 1
        frontier = np.frombuffer(b"".join(frontier_keys), dtype=np.uint8).reshape(-1, n)
        following = []
        for a, row in enumerate(rows):
            products = row[frontier]
            for source, product in zip(frontier_keys, products):
                key = product.tobytes()
                if key in entries:
                    continue
                if len(entries) >= cap:
                    complete = False
                    break
                entries[key] = depth
                parents[key] = (source, a)
                following.append(key)
            if not complete:
                break
        frontier_keys = following

    if not complete:
        logger.debug(f"⚠️ semigroup closure stopped at cap {cap}")
    return SemigroupTable(n=n, entries=entries, parents=parents, complete=complete)


def is_reducible_generating_set(automaton: Automaton, cap: int = DEFAULT_CAP) -> bool:
    """
    True when some letter is induced by a word over the other letters.
    A capped closure that misses the letter counts as not found.
    """
    if automaton.k < 2:
        return False
    for a in range(automaton.k):
        others = restrict(automaton, [b for b in range(automaton.k) if b != a])
        table = enumerate_semigroup(others, max(cap, others.k))
        if automaton.letter(a) in table:
            return True
    return False
