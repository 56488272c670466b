# sync_search/generator/extensions.py

"""One-letter extensions with isomorphism rejection inside a parent's stream."""

import itertools
from typing import Iterator

from sync_search.core.automaton import Automaton
from sync_search.core.canonical import canonical_form, decode_canonical


def extension_keys(automaton: Automaton, letter_perms: bool = True) -> Iterator[bytes]:
    """Canonical keys of A extended by each of the n^n possible new letters, first occurrence only."""
    seen = set()
    for row in itertools.product(range(automaton.n), repeat=automaton.n):
        key = canonical_form(automaton.extend(row), letter_perms)
        if key not in seen:
            seen.add(key)
            yield key


def extensions(automaton: Automaton, letter_perms: bool = True) -> Iterator[Automaton]:
    for key in extension_keys(automaton, letter_perms):
        yield decode_canonical(key)
