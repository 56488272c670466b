# sync_search/sieve/procedure.py

"""
The per-automaton sieve.

Synchronizing candidates either get reported or are discarded; extensions of
a synchronizing automaton are never irreducibly synchronizing, so nothing on
that path is stored. Non-synchronizing candidates are stored for the next
run unless a bound shows every synchronizing extension falls short of the
threshold, or a letter is redundant.

Bounds are compared strictly: a candidate is dropped only when the bound is
below the threshold, since reports include lengths equal to it.
"""

import logging

from sync_search.bounds.franklpin import prop2_bound, prop3_bound, rank_descent_bound
from sync_search.core.automaton import Automaton, find_twin_pairs, is_strongly_connected
from sync_search.semigroup.closure import enumerate_semigroup, is_reducible_generating_set
from sync_search.semigroup.onecluster_scan import one_cluster_scan
from sync_search.sieve.config import SieveConfig
from sync_search.sieve.verdict import DropReason, Verdict
from sync_search.synchro.pairs import compressible_pairs
from sync_search.synchro.reset import is_irreducibly_synchronizing, reset_analysis

logger = logging.getLogger(__name__)


def _sieve_synchronizing(automaton: Automaton, cfg: SieveConfig) -> Verdict:
    n, k = automaton.n, automaton.k
    if not is_strongly_connected(automaton):
        return Verdict.drop(DropReason.NOT_REPORTABLE, detail="not_strongly_connected")

    if cfg.prop2 and k == 2 and cfg.threshold > 2 * n - 2:
        if prop2_bound(automaton, cfg.prop2_condition) is not None:
            return Verdict.drop(DropReason.NOT_REPORTABLE, bound=2 * n - 2, detail="prop2")

    if cfg.twin_pairs and cfg.assume_cerny_below and n >= 5 and cfg.threshold > prop3_bound(n):
        if find_twin_pairs(automaton):
            return Verdict.drop(DropReason.NOT_REPORTABLE, bound=prop3_bound(n), detail="twin_pair")

    if not is_irreducibly_synchronizing(automaton):
        return Verdict.drop(DropReason.NOT_REPORTABLE, detail="reducible_alphabet")

    analysis = reset_analysis(automaton)
    if analysis.reset_length >= cfg.threshold:
        return Verdict.report(analysis.reset_length, analysis.reset_word)
    return Verdict.drop(DropReason.NOT_REPORTABLE, detail="short_reset")


def _sieve_non_synchronizing(automaton: Automaton, cfg: SieveConfig, pairs) -> Verdict:
    if cfg.theorem2 or cfg.theorem4:
        analysis = reset_analysis(automaton)
        bound = rank_descent_bound(automaton, analysis, pairs, cfg.theorem2, cfg.theorem4)
        if bound < cfg.threshold:
            return Verdict.drop(DropReason.BOUND_RANK_DESCENT, bound=bound)

    if cfg.one_cluster:
        table = enumerate_semigroup(automaton, cfg.semigroup_cap)
        if table.complete:
            bound = one_cluster_scan(automaton, table, cfg.threshold)
            if bound is not None and bound < cfg.threshold:
                return Verdict.drop(DropReason.BOUND_ONE_CLUSTER, bound=bound)

    if cfg.reducible_generators and is_reducible_generating_set(automaton, cfg.semigroup_cap):
        return Verdict.drop(DropReason.REDUCIBLE_GENERATORS)

    return Verdict.store()


def sieve(automaton: Automaton, cfg: SieveConfig) -> Verdict:
    pairs = compressible_pairs(automaton)
    if pairs.all_compressible:
        verdict = _sieve_synchronizing(automaton, cfg)
    else:
        verdict = _sieve_non_synchronizing(automaton, cfg, pairs)
    logger.debug("🔍 %s -> %s %s", automaton.delta, verdict.kind.value, verdict.reason.value if verdict.reason else "")
    return verdict
