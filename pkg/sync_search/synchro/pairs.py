# sync_search/synchro/pairs.py

"""
Pair-space analysis: which pairs of states can be merged, and how fast.

Heights come from a backward breadth-first closure over the pair graph,
starting from the pairs some letter merges directly.
"""

from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from sync_search.core.automaton import Automaton

Pair = Tuple[int, int]


def _pair(x: int, y: int) -> Pair:
    return (x, y) if x < y else (y, x)


@dataclass(frozen=True)
class PairTable:
    n: int
    heights: Dict[Pair, int]

    def is_compressible(self, x: int, y: int) -> bool:
        return x == y or _pair(x, y) in self.heights

    def height(self, x: int, y: int) -> Optional[int]:
        if x == y:
            return 0
        return self.heights.get(_pair(x, y))

    @property
    def compressible(self) -> List[Pair]:
        return sorted(self.heights)

    @property
    def all_compressible(self) -> bool:
        return len(self.heights) == self.n * (self.n - 1) // 2


def compressible_pairs(automaton: Automaton) -> PairTable:
    n = automaton.n
    preimages = []
    for row in automaton.delta:
        pre = [[] for _ in range(n)]
        for q, target in enumerate(row):
            pre[target].append(q)
        preimages.append(pre)

    heights: Dict[Pair, int] = {}
    queue = deque()
    for row in automaton.delta:
        for x in range(n):
            for y in range(x + 1, n):
                if row[x] == row[y] and (x, y) not in heights:
                    heights[(x, y)] = 1
                    queue.append((x, y))

    while queue:
        x, y = queue.popleft()
        next_height = heights[(x, y)] + 1
        for pre in preimages:
            for p in pre[x]:
                for q in pre[y]:
                    pair = _pair(p, q)
                    if pair not in heights:
                        heights[pair] = next_height
                        queue.append(pair)

    return PairTable(n=n, heights=heights)


def sync_height(table: PairTable) -> int:
    """Largest shortest-merge length over the compressible pairs (0 if none)."""
    return max(table.heights.values(), default=0)


def is_synchronizing(automaton: Automaton) -> bool:
    """Every pair compressible, which for complete automata means a reset word exists."""
    return compressible_pairs(automaton).all_compressible
