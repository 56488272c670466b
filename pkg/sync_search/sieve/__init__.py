from sync_search.sieve.config import SieveConfig, default_threshold
from sync_search.sieve.procedure import sieve
from sync_search.sieve.runner import PipelineResult, RunResult, pipeline, run, sieve_keys, sieve_unary, write_run
from sync_search.sieve.verdict import DropReason, RunStats, Verdict, VerdictKind
