# sync_search/semigroup/onecluster_scan.py

"""
Bounds from one-cluster elements of the transition semigroup.

A word of length s inducing a one-cluster map with cycle length m >= 2
survives in every extension, so its bound holds for every synchronizing
extension too.

Only the plain bound is used for dropping. The unique-sink decrease is
carried as `adjusted` for display; it is not a valid bound in general
(the unary map 1 0 3 0 has adjusted bound 6 and an extension with reset
length 7).
"""

from dataclasses import dataclass
from typing import Iterator, Optional

from sync_search.bounds.onecluster import theorem5_bound
from sync_search.core.automaton import Automaton
from sync_search.core.transformation import OneClusterProfile, Transformation, functional_profile
from sync_search.semigroup.closure import SemigroupTable


@dataclass(frozen=True)
class OneClusterBound:
    transformation: Transformation
    s: int
    profile: OneClusterProfile
    lemma2: bool
    bound: int
    adjusted: int


def one_cluster_bounds(automaton: Automaton, table: SemigroupTable) -> Iterator[OneClusterBound]:
    n = automaton.n
    for t, s in table.items():
        profile = functional_profile(t)
        if not profile.one_cluster or profile.m < 2:
            continue
        lemma2 = profile.lemma2_sink is not None and profile.level >= 1
        yield OneClusterBound(
            transformation=t,
            s=s,
            profile=profile,
            lemma2=lemma2,
            bound=theorem5_bound(n, profile.m, profile.level, s),
            adjusted=theorem5_bound(n, profile.m, profile.level, s, lemma2),
        )


def one_cluster_scan(automaton: Automaton, table: SemigroupTable, threshold: int = None) -> Optional[int]:
    """
    Least one-cluster bound over the table, or None without one-cluster
    elements. With a threshold, the first bound below it is returned as is.
    """
    best = None
    for item in one_cluster_bounds(automaton, table):
        if threshold is not None and item.bound < threshold:
            return item.bound
        if best is None or item.bound < best:
            best = item.bound
    return best
