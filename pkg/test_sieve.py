# test_sieve.py

import logging

import pytest
from pydantic import ValidationError

from conftest import all_tables
from sync_search.core.automaton import Automaton, cerny_automaton, is_strongly_connected
from sync_search.core.canonical import canonical_automaton, canonical_form, decode_canonical
from sync_search.core.textfmt import format_automaton
from sync_search.errors import InvalidArgumentError, SyncSearchError
from sync_search.generator.extensions import extension_keys
from sync_search.generator.poolfile import read_pool
from sync_search.generator.unary import enumerate_unary
from sync_search.sieve.config import SieveConfig, default_threshold
from sync_search.sieve.procedure import sieve
from sync_search.sieve.runner import pipeline, run, sieve_unary, write_run
from sync_search.sieve.verdict import DropReason, RunStats, Verdict, VerdictKind
from sync_search.synchro.pairs import is_synchronizing
from sync_search.synchro.reset import is_irreducibly_synchronizing, reset_length

CYCLE4 = Automaton(((1, 2, 3, 0),))

# every binary 4-state class with reset length 9
SLOWEST_FOUR = {
    canonical_form(Automaton(((1, 2, 3, 0), (1, 1, 2, 3)))),
    canonical_form(Automaton(((1, 2, 0, 3), (3, 3, 2, 1)))),
}


def _reportable(automaton, threshold):
    return (
        is_synchronizing(automaton)
        and is_strongly_connected(automaton)
        and is_irreducibly_synchronizing(automaton)
        and reset_length(automaton) >= threshold
    )


def _classes(n, k):
    """Every k-letter class on n states, built by unpruned extension."""
    keys = set(enumerate_unary(n))
    for _ in range(k - 1):
        keys = {child for key in keys for child in extension_keys(decode_canonical(key))}
    return keys


def _brute_force_reports(n, k, threshold, exhaustive=False):
    found = set()
    for arity in range(1, k + 1):
        if exhaustive:
            keys = {canonical_form(a) for a in all_tables(n, arity)}
        else:
            keys = _classes(n, arity)
        found |= {key for key in keys if _reportable(decode_canonical(key), threshold)}
    return found


def _pipeline_reports(n, k, threshold, **overrides):
    result = pipeline(n, k, SieveConfig(threshold=threshold, **overrides))
    return {row.key for row in result.reports}


# ----------------------------
# Config
# ----------------------------

def test_default_threshold():
    assert default_threshold(7) == 23
    assert default_threshold(6) == 15
    assert default_threshold(2) == 3
    assert default_threshold(3) == 3


def test_config_validation():
    with pytest.raises(ValidationError):
        SieveConfig(threshold=0)
    with pytest.raises(ValidationError):
        SieveConfig(threshold=5, unknown=True)
    with pytest.raises(ValidationError):
        SieveConfig(threshold=5, prop2_condition="always")
    cfg = SieveConfig(threshold=5)
    with pytest.raises(TypeError):
        cfg.threshold = 6


def test_without_exclusions():
    cfg = SieveConfig(threshold=9).without_exclusions()
    assert cfg.threshold == 9
    assert not any([cfg.theorem2, cfg.theorem4, cfg.one_cluster, cfg.reducible_generators, cfg.twin_pairs, cfg.prop2])


# ----------------------------
# Single verdicts
# ----------------------------

def test_sieve_reports_cerny(c4):
    verdict = sieve(c4, SieveConfig(threshold=9))
    assert verdict.kind is VerdictKind.REPORT
    assert verdict.reset_length == 9
    assert len(verdict.reset_word) == 9
    assert verdict.synchronizing_path


def test_sieve_short_reset(c4):
    verdict = sieve(c4, SieveConfig(threshold=10))
    assert verdict.reason is DropReason.NOT_REPORTABLE
    assert verdict.detail == "short_reset"


def test_sieve_stores_cycle():
    assert sieve(CYCLE4, SieveConfig(threshold=9)).kind is VerdictKind.STORE


def test_sieve_drops_cycle_on_rank_descent():
    verdict = sieve(CYCLE4, SieveConfig(threshold=11))
    assert verdict.reason is DropReason.BOUND_RANK_DESCENT
    assert verdict.bound == 10
    assert not verdict.synchronizing_path


def test_sieve_drops_on_one_cluster():
    cfg = SieveConfig(threshold=11, theorem2=False, theorem4=False)
    verdict = sieve(CYCLE4, cfg)
    assert verdict.reason is DropReason.BOUND_ONE_CLUSTER
    assert verdict.bound == 10
    assert sieve(CYCLE4, cfg.without_exclusions()).kind is VerdictKind.STORE


def test_sieve_one_cluster_skipped_when_capped():
    cfg = SieveConfig(threshold=11, theorem2=False, theorem4=False, semigroup_cap=2)
    assert sieve(CYCLE4, cfg).kind is VerdictKind.STORE


def test_sieve_keeps_parent_of_slow_extension():
    # 1 0 3 0 extended by 2 1 0 0 resets in 7 steps
    parent = Automaton(((1, 0, 3, 0),))
    assert reset_length(parent.extend((2, 1, 0, 0))) == 7
    verdict = sieve(parent, SieveConfig(threshold=7))
    assert verdict.reason is not DropReason.BOUND_ONE_CLUSTER
    assert verdict.kind is VerdictKind.STORE


def test_sieve_debug_log(caplog, c4):
    caplog.set_level(logging.DEBUG, logger="sync_search.sieve.procedure")
    sieve(c4, SieveConfig(threshold=9))
    record = [r for r in caplog.records if r.name == "sync_search.sieve.procedure"][-1]
    assert record.args
    assert record.getMessage().endswith("-> report ")


def test_sieve_drops_reducible():
    # second letter is the square of the first
    automaton = Automaton(((1, 2, 3, 0), (2, 3, 0, 1)))
    cfg = SieveConfig(threshold=9, theorem2=False, theorem4=False, one_cluster=False)
    assert sieve(automaton, cfg).reason is DropReason.REDUCIBLE_GENERATORS


def test_sieve_constant():
    verdict = sieve(Automaton(((0, 0, 0, 0),)), SieveConfig(threshold=9))
    assert verdict.kind is VerdictKind.DROP
    assert verdict.reason is DropReason.NOT_REPORTABLE
    assert verdict.detail == "not_strongly_connected"


def test_sieve_prop2_shortcut():
    # an involution and an idempotent
    automaton = Automaton(((1, 0), (0, 0)))
    verdict = sieve(automaton, SieveConfig(threshold=3))
    assert verdict.detail == "prop2"
    assert verdict.bound == 2
    assert sieve(automaton, SieveConfig(threshold=3, prop2=False)).detail == "reducible_alphabet"
    assert sieve(automaton, SieveConfig(threshold=2)).detail == "reducible_alphabet"


def test_sieve_twin_shortcut():
    # 0 and 1 are twins: letter 0 swaps them, letter 1 sends both to 2
    automaton = Automaton(((1, 0, 3, 4, 2), (2, 2, 0, 2, 4)))
    assert is_synchronizing(automaton)
    verdict = sieve(automaton, SieveConfig(threshold=11, assume_cerny_below=True))
    assert verdict.detail == "twin_pair"
    assert verdict.bound == 10
    assert sieve(automaton, SieveConfig(threshold=11)).detail == "short_reset"
    assert sieve(automaton, SieveConfig(threshold=10, assume_cerny_below=True)).detail != "twin_pair"


def test_verdict_helpers():
    assert Verdict.store().kind is VerdictKind.STORE
    assert Verdict.drop(DropReason.REDUCIBLE_GENERATORS).reason is DropReason.REDUCIBLE_GENERATORS


# ----------------------------
# Stats
# ----------------------------

def test_stats_rows():
    stats = RunStats(n=4, k=2, threshold=9)
    stats.record(Verdict.report(9, ()))
    stats.record(Verdict.drop(DropReason.NOT_REPORTABLE))
    stats.record(Verdict.drop(DropReason.BOUND_RANK_DESCENT, bound=5))
    stats.record(Verdict.drop(DropReason.BOUND_ONE_CLUSTER, bound=5))
    stats.record(Verdict.store())
    stats.check()
    assert dict(stats.rows()) == {
        "generated": 5,
        "synchronizing": 2,
        "reported": 1,
        "non_synchronizing": 3,
        "after_bound_rank_descent": 2,
        "after_bound_one_cluster": 1,
        "after_reducible_generators": 1,
        "stored": 1,
    }
    assert stats.to_text().startswith("#stats n=4 k=2 threshold=9\ngenerated\t5\n")


def test_stats_check_fails():
    stats = RunStats(n=4, k=2, threshold=9)
    stats.generated = 3
    with pytest.raises(SyncSearchError):
        stats.check()


# ----------------------------
# Runs
# ----------------------------

def test_unary_sieve():
    result = sieve_unary(4, SieveConfig(threshold=9))
    assert result.reports == []
    assert result.stats.generated == 19
    assert canonical_form(CYCLE4) in result.pool_out
    result.stats.check()


def test_single_state_run():
    result = run(enumerate_unary(1), SieveConfig(threshold=1))
    assert result.stats.generated == 1
    assert len(result.pool_out) == 0
    assert result.reports == []


def test_pipeline_slowest_four_states():
    assert _pipeline_reports(4, 2, 9) == SLOWEST_FOUR
    assert _brute_force_reports(4, 2, 9) == SLOWEST_FOUR


def test_second_slowest_class_is_reportable():
    automaton = Automaton(((1, 2, 0, 3), (3, 3, 2, 1)))
    assert reset_length(automaton) == 9
    assert _reportable(automaton, 9)
    assert sieve(automaton, SieveConfig(threshold=9)).kind is VerdictKind.REPORT


def test_pipeline_nothing_above_cerny():
    assert _pipeline_reports(4, 2, 10) == set()


def test_smaller_dstar_warmup_keeps_results():
    assert _pipeline_reports(4, 2, 9, m_max=2) == SLOWEST_FOUR
    with pytest.raises(ValidationError):
        SieveConfig(threshold=9, m_max=1)


def test_pipeline_rejects_empty_alphabet():
    with pytest.raises(InvalidArgumentError):
        pipeline(3, 0, SieveConfig(threshold=3))


@pytest.mark.parametrize("n,threshold", [(2, 1), (3, 1), (3, 4)])
def test_pipeline_matches_exhaustive_binary(n, threshold):
    assert _pipeline_reports(n, 2, threshold) == _brute_force_reports(n, 2, threshold, exhaustive=True)


def test_pipeline_cerny_three_reported():
    assert canonical_form(Automaton(((1, 2, 0), (1, 1, 2)))) in _pipeline_reports(3, 2, 4)


@pytest.mark.parametrize("threshold", [4, 9])
def test_pipeline_matches_brute_force_four_states(threshold):
    assert _pipeline_reports(4, 2, threshold) == _brute_force_reports(4, 2, threshold)


@pytest.mark.parametrize("n", [2, 3])
def test_pipeline_matches_brute_force_ternary(n):
    assert _pipeline_reports(n, 3, 1) == _brute_force_reports(n, 3, 1)


@pytest.mark.slow
@pytest.mark.parametrize("threshold", [4, 9])
def test_pipeline_matches_brute_force_ternary_four_states(threshold):
    assert _pipeline_reports(4, 3, threshold) == _brute_force_reports(4, 3, threshold)


def test_pipeline_without_exclusions_agrees():
    cfg = dict(theorem2=False, theorem4=False, one_cluster=False, reducible_generators=False, prop2=False)
    assert _pipeline_reports(4, 2, 4, **cfg) == _pipeline_reports(4, 2, 4)


def test_jobs_do_not_change_results(tmp_path):
    cfg = SieveConfig(threshold=4)
    serial = pipeline(3, 2, cfg, jobs=1, workdir=tmp_path / "serial")
    parallel = pipeline(3, 2, cfg, jobs=2, workdir=tmp_path / "parallel")
    assert serial.reports == parallel.reports
    for name in ["pool.k1.aut", "pool.k2.aut", "reports.k2.tsv", "stats.k2.txt"]:
        assert (tmp_path / "serial" / name).read_text() == (tmp_path / "parallel" / name).read_text()


def test_write_run(tmp_path):
    cfg = SieveConfig(threshold=9)
    result = run(sieve_unary(4, cfg).pool_out, cfg)
    write_run(result, tmp_path)
    assert read_pool(tmp_path / "pool.k2.aut") == result.pool_out
    reports = (tmp_path / "reports.k2.tsv").read_text().splitlines()
    assert reports == [format_automaton(decode_canonical(key)) + "\t9\t1\t1" for key in sorted(SLOWEST_FOUR)]
    assert format_automaton(canonical_automaton(cerny_automaton(4))) + "\t9\t1\t1" in reports
    stats = (tmp_path / "stats.k2.txt").read_text()
    assert stats.startswith("#stats n=4 k=2 threshold=9")
