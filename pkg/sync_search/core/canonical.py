# sync_search/core/canonical.py

"""
Canonical forms for isomorphism rejection.

Two automata are isomorphic when one is obtained from the other by renaming
states and (by default) permuting letters. The canonical form is the least
serialized transition table over every relabeling consistent with an
isomorphism-invariant ordering of the states; letter rows are sorted for each
candidate labeling when letter permutations are allowed.

Serialization: bytes([n, k]) followed by the k rows, row-major.
"""

import itertools
from typing import List, Sequence, Tuple

from sync_search.core.automaton import Automaton


def _preimages(automaton: Automaton) -> List[List[List[int]]]:
    n = automaton.n
    table = []
    for row in automaton.delta:
        pre = [[] for _ in range(n)]
        for q, target in enumerate(row):
            pre[target].append(q)
        table.append(pre)
    return table


def state_classes(automaton: Automaton, letter_perms: bool = True) -> List[List[int]]:
    """
    Colour refinement of the states.

    A state's signature collects, per letter, the colour of its image and the
    sorted colours of its preimages. With letter permutations the per-letter
    entries are sorted so the signature ignores letter names. Returns the
    colour classes in increasing colour order.
    """
    n = automaton.n
    preimages = _preimages(automaton)
    colors = [0] * n
    count = 1
    while True:
        signatures = []
        for q in range(n):
            per_letter = [
                (colors[row[q]], row[q] == q, tuple(sorted(colors[p] for p in pre[q])))
                for row, pre in zip(automaton.delta, preimages)
            ]
            if letter_perms:
                per_letter.sort()
            signatures.append((colors[q], tuple(per_letter)))
        palette = {sig: index for index, sig in enumerate(sorted(set(signatures)))}
        colors = [palette[sig] for sig in signatures]
        if len(palette) == count:
            break
        count = len(palette)

    classes: List[List[int]] = [[] for _ in range(count)]
    for q, color in enumerate(colors):
        classes[color].append(q)
    return classes


def _table_under(automaton: Automaton, order: Sequence[int], letter_perms: bool) -> Tuple[Tuple[int, ...], ...]:
    label = [0] * automaton.n
    for new, old in enumerate(order):
        label[old] = new
    rows = [tuple(label[row[q]] for q in order) for row in automaton.delta]
    if letter_perms:
        rows.sort()
    return tuple(rows)


def canonical_table(automaton: Automaton, letter_perms: bool = True) -> Tuple[Tuple[int, ...], ...]:
    classes = state_classes(automaton, letter_perms)
    best = None
    for blocks in itertools.product(*(itertools.permutations(c) for c in classes)):
        order = [q for block in blocks for q in block]
        candidate = _table_under(automaton, order, letter_perms)
        if best is None or candidate < best:
            best = candidate
    return best


def canonical_form(automaton: Automaton, letter_perms: bool = True) -> bytes:
    table = canonical_table(automaton, letter_perms)
    return bytes([automaton.n, automaton.k]) + bytes(q for row in table for q in row)


def decode_canonical(key: bytes) -> Automaton:
    n, k = key[0], key[1]
    body = key[2:]
    return Automaton(tuple(tuple(body[a * n:(a + 1) * n]) for a in range(k)))


def canonical_automaton(automaton: Automaton, letter_perms: bool = True) -> Automaton:
    return decode_canonical(canonical_form(automaton, letter_perms))
