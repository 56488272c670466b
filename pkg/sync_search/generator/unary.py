# sync_search/generator/unary.py

"""
Unary seeds: one self-map per conjugacy class.

Every functional graph is a multiset of components, and every component is a
cycle of rooted trees. Shapes are built from those pieces (trees as nested
tuples of their children) and then deduplicated by canonical form, which
collapses shapes that still describe the same map.
"""

import logging
from functools import lru_cache
from typing import List, Tuple

from sync_search.core.automaton import Automaton
from sync_search.core.canonical import canonical_form
from sync_search.errors import InvalidArgumentError
from sync_search.generator.pool import Pool

logger = logging.getLogger(__name__)

MAX_UNARY_STATES = 8

Tree = Tuple["Tree", ...]


@lru_cache(maxsize=None)
def _forests(total: int) -> Tuple[Tuple[Tree, ...], ...]:
    """Multisets of rooted trees with `total` nodes, each a sorted tuple."""
    if total == 0:
        return ((),)
    found = set()
    for size in range(1, total + 1):
        for tree in _rooted_trees(size):
            for rest in _forests(total - size):
                found.add(tuple(sorted((tree,) + rest)))
    return tuple(sorted(found))


@lru_cache(maxsize=None)
def _rooted_trees(size: int) -> Tuple[Tree, ...]:
    return _forests(size - 1)


@lru_cache(maxsize=None)
def _components(size: int) -> Tuple[Tuple[Tree, ...], ...]:
    """Cycles of rooted trees with `size` nodes, up to rotation."""
    found = set()

    def extend(prefix: Tuple[Tree, ...], left: int):
        if left == 0:
            found.add(min(prefix[i:] + prefix[:i] for i in range(len(prefix))))
            return
        for part in range(1, left + 1):
            for tree in _rooted_trees(part):
                extend(prefix + (tree,), left - part)

    extend((), size)
    return tuple(sorted(found))


def _graphs(total: int, smallest: int = 1) -> List[List[Tuple[Tree, ...]]]:
    """Multisets of components, listed by non-decreasing component size."""
    if total == 0:
        return [[]]
    shapes = []
    for size in range(smallest, total + 1):
        for component in _components(size):
            for rest in _graphs(total - size, size):
                shapes.append([component] + rest)
    return shapes


def _place(tree: Tree, node: int, image: List[int]) -> None:
    for child in tree:
        image.append(node)
        _place(child, len(image) - 1, image)


def _realize(shape: List[Tuple[Tree, ...]]) -> Tuple[int, ...]:
    """
    Functional graph of a shape: cycle nodes of each component come first,
    tree nodes are appended as they are placed.
    """
    image: List[int] = []
    for component in shape:
        base = len(image)
        length = len(component)
        image.extend(base + (i + 1) % length for i in range(length))
        for i, tree in enumerate(component):
            _place(tree, base + i, image)
    return tuple(image)


def enumerate_unary(n: int) -> Pool:
    if not 1 <= n <= MAX_UNARY_STATES:
        raise InvalidArgumentError(f"unary seeds need 1 <= n <= {MAX_UNARY_STATES}, got {n}")
    keys = {canonical_form(Automaton((_realize(shape),))) for shape in _graphs(n)}
    logger.info(f"✅ {len(keys)} unary classes on {n} states")
    return Pool.from_keys(n, 1, keys)
