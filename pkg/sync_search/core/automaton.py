# sync_search/core/automaton.py

"""
Complete deterministic automata over n states and k letters.

delta[a][q] is the image of state q under letter a. States and letters are
0-based integers; no initial or final states are involved.
"""

from dataclasses import dataclass, field
from typing import Iterable, List, Sequence, Tuple

import networkx as nx

from sync_search.core.transformation import Transformation
from sync_search.errors import AutomatonError

MAX_STATES = 16


@dataclass(frozen=True)
class Automaton:
    delta: Tuple[Tuple[int, ...], ...]
    n: int = field(init=False)
    k: int = field(init=False)

    def __post_init__(self):
        rows = tuple(tuple(int(q) for q in row) for row in self.delta)
        if not rows:
            raise AutomatonError("an automaton needs at least one letter")
        n = len(rows[0])
        if not 1 <= n <= MAX_STATES:
            raise AutomatonError(f"state count {n} outside [1, {MAX_STATES}]")
        for a, row in enumerate(rows):
            if len(row) != n:
                raise AutomatonError(f"letter {a} has {len(row)} entries, expected {n}")
            for q in row:
                if not 0 <= q < n:
                    raise AutomatonError(f"letter {a} maps to {q}, outside [0, {n})")
        object.__setattr__(self, "delta", rows)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "k", len(rows))

    def letter(self, a: int) -> Transformation:
        return Transformation(self.delta[a])

    def letters(self) -> List[Transformation]:
        return [Transformation(row) for row in self.delta]

    def extend(self, row: Sequence[int]) -> "Automaton":
        """One-letter extension by a new letter acting as `row`."""
        return Automaton(self.delta + (tuple(row),))


@dataclass(frozen=True)
class TwinPair:
    x: int
    y: int


def restrict(automaton: Automaton, letters: Iterable[int]) -> Automaton:
    """Keep only the selected letters, in their original order."""
    chosen = sorted(set(letters))
    if not chosen:
        raise AutomatonError("cannot restrict to an empty letter set")
    for a in chosen:
        if not 0 <= a < automaton.k:
            raise AutomatonError(f"letter {a} not in [0, {automaton.k})")
    return Automaton(tuple(automaton.delta[a] for a in chosen))


def underlying_digraph(automaton: Automaton) -> nx.DiGraph:
    graph = nx.DiGraph()
    graph.add_nodes_from(range(automaton.n))
    for row in automaton.delta:
        graph.add_edges_from((q, target) for q, target in enumerate(row))
    return graph


def is_strongly_connected(automaton: Automaton) -> bool:
    return nx.is_strongly_connected(underlying_digraph(automaton))


def is_twin_pair(automaton: Automaton, x: int, y: int) -> bool:
    if x == y:
        return False
    pair = (x, y)
    for row in automaton.delta:
        xa, ya = row[x], row[y]
        if xa != ya and not (xa in pair and ya in pair):
            return False
    return True


def find_twin_pairs(automaton: Automaton) -> List[TwinPair]:
    n = automaton.n
    return [
        TwinPair(x, y)
        for x in range(n)
        for y in range(x + 1, n)
        if is_twin_pair(automaton, x, y)
    ]


def factor_twin(automaton: Automaton, pair: TwinPair) -> Automaton:
    """
    Identify the twin states of `pair` into one state z.

    z takes the smaller index of the two; states above the larger index shift
    down by one, so the factor has n-1 states.
    """
    x, y = sorted((pair.x, pair.y))
    if not is_twin_pair(automaton, x, y):
        raise AutomatonError(f"({pair.x}, {pair.y}) is not a twin pair")

    def merged(q: int) -> int:
        if q == y:
            return x
        return q - 1 if q > y else q

    survivors = [q for q in range(automaton.n) if q != y]
    rows = tuple(
        tuple(merged(row[q]) for q in survivors)
        for row in automaton.delta
    )
    return Automaton(rows)


def relabel(automaton: Automaton, state_perm: Sequence[int], letter_perm: Sequence[int] = None) -> Automaton:
    """
    Rename state q to state_perm[q] and letter a to letter_perm[a].
    """
    n, k = automaton.n, automaton.k
    if sorted(state_perm) != list(range(n)):
        raise AutomatonError("state_perm is not a permutation")
    if letter_perm is None:
        letter_perm = range(k)
    if sorted(letter_perm) != list(range(k)):
        raise AutomatonError("letter_perm is not a permutation")

    rows: List[List[int]] = [[0] * n for _ in range(k)]
    for a, row in enumerate(automaton.delta):
        target = rows[letter_perm[a]]
        for q, image in enumerate(row):
            target[state_perm[q]] = state_perm[image]
    return Automaton(tuple(tuple(row) for row in rows))


def cerny_automaton(n: int) -> Automaton:
    """Černý automaton C_n: a cyclic letter and a letter merging 0 into 1."""
    if n < 1:
        raise AutomatonError("C_n needs n >= 1")
    cycle = tuple((q + 1) % n for q in range(n))
    merge = tuple(1 % n if q == 0 else q for q in range(n))
    return Automaton((cycle, merge))
