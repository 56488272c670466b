# sync_search/sieve/runner.py

"""
Runs of the sieve over whole pools.

A run has two data-parallel phases: parents are expanded into canonical
children (merged and sorted in the parent process), then the children are
sieved in that sorted order. Outputs therefore do not depend on the number
of worker processes.
"""

import logging
import multiprocessing as mp
import time
from dataclasses import dataclass, field
from functools import partial
from pathlib import Path
from typing import Callable, Iterable, List, Optional, Sequence

from sync_search.bounds.onecluster import warm_cache
from sync_search.core.canonical import decode_canonical
from sync_search.errors import InvalidArgumentError
from sync_search.generator.extensions import extension_keys
from sync_search.generator.pool import Pool
from sync_search.generator.poolfile import ReportRow, write_pool, write_reports
from sync_search.generator.unary import enumerate_unary
from sync_search.sieve.config import SieveConfig
from sync_search.sieve.procedure import sieve
from sync_search.sieve.verdict import RunStats, Verdict, VerdictKind

logger = logging.getLogger(__name__)

CHUNK_SIZE = 64


@dataclass
class RunResult:
    reports: List[ReportRow]
    pool_out: Pool
    stats: RunStats


@dataclass
class PipelineResult:
    reports: List[ReportRow]
    runs: List[RunResult] = field(default_factory=list)


def _children(key: bytes, letter_perms: bool) -> List[bytes]:
    return list(extension_keys(decode_canonical(key), letter_perms))


def _verdict(key: bytes, cfg: SieveConfig) -> Verdict:
    return sieve(decode_canonical(key), cfg)


def _map(func: Callable, items: Sequence, jobs: int) -> List:
    if jobs <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    with mp.Pool(processes=jobs) as workers:
        return list(workers.imap(func, items, chunksize=CHUNK_SIZE))


def sieve_keys(keys: Sequence[bytes], n: int, k: int, cfg: SieveConfig, jobs: int = 1) -> RunResult:
    """Sieve already-deduplicated canonical keys, in sorted order."""
    keys = sorted(keys)
    verdicts = _map(partial(_verdict, cfg=cfg), keys, jobs)

    stats = RunStats(n=n, k=k, threshold=cfg.threshold)
    reports, stored = [], []
    for key, verdict in zip(keys, verdicts):
        stats.record(verdict)
        if verdict.kind is VerdictKind.REPORT:
            reports.append(ReportRow(key=key, reset_length=verdict.reset_length, word=verdict.reset_word))
        elif verdict.kind is VerdictKind.STORE:
            stored.append(key)
    stats.check()

    logger.info(
        f"✅ n={n} k={k}: {stats.generated} sieved, {stats.reported} reported, "
        f"{stats.stored} stored, {stats.generated - stats.reported - stats.stored} dropped"
    )
    return RunResult(reports=reports, pool_out=Pool.from_keys(n, k, stored), stats=stats)


def sieve_unary(n: int, cfg: SieveConfig, jobs: int = 1) -> RunResult:
    """Sieve the unary seeds themselves; the survivors form the k=1 pool."""
    warm_cache(min(n, cfg.m_max))
    seeds = enumerate_unary(n)
    return sieve_keys(seeds.members, n, 1, cfg, jobs)


def run(pool_in: Pool, cfg: SieveConfig, jobs: int = 1) -> RunResult:
    """Sieve every one-letter extension of every member of pool_in."""
    n, k = pool_in.n, pool_in.k + 1
    warm_cache(min(n, cfg.m_max))

    started = time.time()
    logger.info(f"🔍 extending {len(pool_in)} automata (n={n}, k={pool_in.k}) with {jobs} job(s)")
    batches = _map(partial(_children, letter_perms=cfg.letter_perms), list(pool_in.members), jobs)
    children = sorted({key for batch in batches for key in batch})
    logger.info(f"✅ {len(children)} distinct children in {time.time() - started:.1f}s")

    return sieve_keys(children, n, k, cfg, jobs)


def write_run(result: RunResult, workdir) -> None:
    workdir = Path(workdir)
    k = result.stats.k
    write_pool(result.pool_out, workdir / f"pool.k{k}.aut")
    write_reports(result.reports, workdir / f"reports.k{k}.tsv")
    stats_path = workdir / f"stats.k{k}.txt"
    stats_path.write_text(result.stats.to_text())
    logger.info(f"💾 stats written to {stats_path}")


def pipeline(n: int, k: int, cfg: SieveConfig, jobs: int = 1, workdir: Optional[Path] = None) -> PipelineResult:
    """Unary sieve followed by k-1 extension runs; reports of every run merged."""
    if k < 1:
        raise InvalidArgumentError(f"alphabet size must be >= 1, got {k}")

    result = sieve_unary(n, cfg, jobs)
    runs = [result]
    if workdir is not None:
        write_run(result, workdir)

    for _ in range(k - 1):
        result = run(result.pool_out, cfg, jobs)
        runs.append(result)
        if workdir is not None:
            write_run(result, workdir)

    return PipelineResult(reports=merge_reports(r.reports for r in runs), runs=runs)


def merge_reports(batches: Iterable[List[ReportRow]]) -> List[ReportRow]:
    return sorted((row for batch in batches for row in batch), key=lambda r: r.key)
