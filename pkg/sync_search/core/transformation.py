# sync_search/core/transformation.py

"""
Self-maps of the state set {0, ..., n-1}.

A Transformation is either a single letter of an automaton or an element of
its transition semigroup. Composition reads left to right: compose(t1, t2)
applies t1 first, then t2, matching the way words act on states.
"""

from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, Optional, Tuple

from sync_search.errors import AutomatonError


@dataclass(frozen=True)
class Transformation:
    image: Tuple[int, ...]
    n: int = field(init=False, compare=False)

    def __post_init__(self):
        image = tuple(int(q) for q in self.image)
        n = len(image)
        for q in image:
            if not 0 <= q < n:
                raise AutomatonError(f"image entry {q} out of range [0, {n})")
        object.__setattr__(self, "image", image)
        object.__setattr__(self, "n", n)

    def __call__(self, q: int) -> int:
        return self.image[q]

    def __len__(self) -> int:
        return self.n

    def key(self) -> bytes:
        """Fixed-width byte key (one byte per state)."""
        return bytes(self.image)

    @classmethod
    def from_key(cls, key: bytes) -> "Transformation":
        return cls(tuple(key))


def identity(n: int) -> Transformation:
    return Transformation(tuple(range(n)))


def constant(n: int, q: int = 0) -> Transformation:
    return Transformation((q,) * n)


def apply(t: Transformation, states: Iterable[int]) -> FrozenSet[int]:
    """Image of a state set under t."""
    image = t.image
    return frozenset(image[q] for q in states)


def compose(t1: Transformation, t2: Transformation) -> Transformation:
    """t1 then t2: result(q) = t2(t1(q))."""
    if t1.n != t2.n:
        raise AutomatonError(f"cannot compose maps on {t1.n} and {t2.n} states")
    second = t2.image
    return Transformation(tuple(second[q] for q in t1.image))


def power(t: Transformation, exponent: int) -> Transformation:
    if exponent < 0:
        raise AutomatonError("negative exponent")
    result = identity(t.n)
    for _ in range(exponent):
        result = compose(result, t)
    return result


def rank(t: Transformation) -> int:
    """Number of distinct image values."""
    return len(set(t.image))


@dataclass(frozen=True)
class OneClusterProfile:
    one_cluster: bool
    m: int
    level: int
    cycle: FrozenSet[int]
    lemma2_sink: Optional[int] = None


def functional_profile(t: Transformation) -> OneClusterProfile:
    """
    Shape of the functional graph of t.

    The recurrent states are the image of t^n. The map is one-cluster when
    they form a single cycle. `level` is the largest tail depth, and
    `lemma2_sink` is set when every state of maximal depth lands on the same
    cycle state after `level` steps (only reported for level >= 1).
    """
    n = t.n
    image = t.image

    stable = list(range(n))
    for _ in range(n):
        stable = [image[q] for q in stable]
    recurrent = frozenset(stable)

    start = min(recurrent)
    orbit = 1
    q = image[start]
    while q != start:
        orbit += 1
        q = image[q]
    one_cluster = orbit == len(recurrent)

    depth = [0] * n
    for q in range(n):
        steps, cur = 0, q
        while cur not in recurrent:
            cur = image[cur]
            steps += 1
        depth[q] = steps
    level = max(depth)

    sink = None
    if one_cluster and level >= 1:
        landing = set()
        for q in range(n):
            if depth[q] != level:
                continue
            cur = q
            for _ in range(level):
                cur = image[cur]
            landing.add(cur)
        if len(landing) == 1:
            sink = landing.pop()

    return OneClusterProfile(
        one_cluster=one_cluster,
        m=len(recurrent),
        level=level,
        cycle=recurrent,
        lemma2_sink=sink,
    )
