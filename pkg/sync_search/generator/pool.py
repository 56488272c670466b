# sync_search/generator/pool.py

"""
Pools of pairwise non-isomorphic automata, kept as sorted canonical keys.
"""

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Tuple

from sync_search.core.automaton import Automaton
from sync_search.core.canonical import canonical_form, decode_canonical
from sync_search.errors import PoolError


@dataclass(frozen=True)
class Pool:
    n: int
    k: int
    members: Tuple[bytes, ...] = ()

    def __post_init__(self):
        members = tuple(bytes(m) for m in self.members)
        width = 2 + self.n * self.k
        for i, key in enumerate(members):
            if len(key) != width or key[0] != self.n or key[1] != self.k:
                raise PoolError(f"member {i} is not an n={self.n} k={self.k} canonical key")
            if i and members[i - 1] >= key:
                raise PoolError("pool members must be strictly increasing")
        object.__setattr__(self, "members", members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[bytes]:
        return iter(self.members)

    def automata(self) -> Iterator[Automaton]:
        for key in self.members:
            yield decode_canonical(key)

    @classmethod
    def from_keys(cls, n: int, k: int, keys: Iterable[bytes]) -> "Pool":
        return cls(n=n, k=k, members=tuple(sorted(set(keys))))

    @classmethod
    def from_automata(cls, n: int, k: int, automata: Iterable[Automaton], letter_perms: bool = True) -> "Pool":
        return cls.from_keys(n, k, (canonical_form(a, letter_perms) for a in automata))


def merge(pools: Sequence[Pool]) -> Pool:
    """Sorted union of pools over the same n and k."""
    if not pools:
        raise PoolError("nothing to merge")
    n, k = pools[0].n, pools[0].k
    for pool in pools[1:]:
        if (pool.n, pool.k) != (n, k):
            raise PoolError(f"cannot merge n={pool.n} k={pool.k} into n={n} k={k}")
    return Pool.from_keys(n, k, (key for pool in pools for key in pool.members))
