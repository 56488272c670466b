# sync_search/cli.py

"""
Command-line interface.

Commands: unary, extend, search, bound, reset, dstar, stats.
Exit codes: 0 success, 1 usage error, 2 input, format or I/O error.
Results go to stdout; logging goes to stderr.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List

from sync_search.bounds.franklpin import build_bound_report
from sync_search.bounds.onecluster import (
    D,
    Dstar,
    competitor_bounds,
    corollary2_bound,
    prime_cycle_bound,
    rough_estimate_bound,
    sum_dstar,
)
from sync_search.core.automaton import cerny_automaton
from sync_search.core.textfmt import format_automaton, read_automata
from sync_search.errors import InvalidArgumentError, SyncSearchError
from sync_search.generator.poolfile import read_pool, write_pool, write_reports
from sync_search.generator.unary import MAX_UNARY_STATES
from sync_search.semigroup.closure import enumerate_semigroup
from sync_search.semigroup.onecluster_scan import one_cluster_bounds
from sync_search.sieve.config import SieveConfig, default_threshold
from sync_search.sieve.procedure import sieve
from sync_search.sieve.runner import RunResult, pipeline, run, sieve_unary
from sync_search.synchro.pairs import compressible_pairs
from sync_search.synchro.reset import reset_analysis
from sync_search.utils.config import AppConfig, load_config

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2


class UsageError(Exception):
    """Flag values that parse but do not make sense together."""


class Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a value >= 1, got {value}")
    return value


def _add_sieve_flags(parser: argparse.ArgumentParser):
    parser.add_argument("--threshold", type=_positive, help="report reset lengths >= this (default n^2-5n+9)")
    parser.add_argument("--jobs", type=_positive, help="worker processes")
    parser.add_argument("--semigroup-cap", type=_positive, help="largest semigroup enumerated per automaton")
    parser.add_argument("--assume-cerny-below", action="store_true", help="enable the twin-pair shortcut")
    parser.add_argument("--no-theorem2", "--no-frankl", dest="no_theorem2", action="store_true")
    parser.add_argument("--no-theorem4", action="store_true")
    parser.add_argument("--no-one-cluster", action="store_true")
    parser.add_argument("--no-reducible", action="store_true")
    parser.add_argument("--no-twin-pairs", action="store_true")
    parser.add_argument("--no-prop2", action="store_true")
    parser.add_argument("--no-exclusions", action="store_true", help="turn every exclusion off")


def _sieve_config(args, app: AppConfig, n: int) -> SieveConfig:
    exclusions = app.sieve.exclusions
    cfg = SieveConfig(
        threshold=args.threshold or app.search.threshold or default_threshold(n),
        semigroup_cap=args.semigroup_cap or app.sieve.semigroup_cap,
        assume_cerny_below=args.assume_cerny_below or app.sieve.assume_cerny_below,
        letter_perms=app.search.letter_permutations,
        m_max=app.onecluster.m_max,
        prop2_condition=app.sieve.prop2_condition,
        theorem2=exclusions.theorem2 and not args.no_theorem2,
        theorem4=exclusions.theorem4 and not args.no_theorem4,
        one_cluster=exclusions.one_cluster and not args.no_one_cluster,
        reducible_generators=exclusions.reducible_generators and not args.no_reducible,
        twin_pairs=exclusions.twin_pairs and not args.no_twin_pairs,
        prop2=exclusions.prop2 and not args.no_prop2,
    )
    if args.no_exclusions:
        cfg = cfg.without_exclusions()
    return cfg


def _jobs(args, app: AppConfig) -> int:
    return args.jobs or app.search.jobs


def _check_states(n: int):
    if not 1 <= n <= MAX_UNARY_STATES:
        raise UsageError(f"--n must be between 1 and {MAX_UNARY_STATES}, got {n}")


def _write_outputs(result: RunResult, args):
    write_pool(result.pool_out, args.out)
    if args.report:
        write_reports(result.reports, args.report)
    if args.stats:
        Path(args.stats).write_text(result.stats.to_text())
    sys.stdout.write(result.stats.to_text())


def cmd_unary(args, app: AppConfig) -> int:
    _check_states(args.n)
    cfg = _sieve_config(args, app, args.n)
    _write_outputs(sieve_unary(args.n, cfg, _jobs(args, app)), args)
    return EXIT_OK


def cmd_extend(args, app: AppConfig) -> int:
    pool = read_pool(args.in_path, app.search.letter_permutations)
    cfg = _sieve_config(args, app, pool.n)
    _write_outputs(run(pool, cfg, _jobs(args, app)), args)
    return EXIT_OK


def cmd_search(args, app: AppConfig) -> int:
    _check_states(args.n)
    cfg = _sieve_config(args, app, args.n)
    result = pipeline(args.n, args.k, cfg, _jobs(args, app), Path(args.workdir))
    for row in result.reports:
        print(row.to_tsv())
    return EXIT_OK


def _bound_lines(automaton, app: AppConfig, threshold: int) -> List[str]:
    n = automaton.n
    analysis = reset_analysis(automaton)
    pairs = compressible_pairs(automaton)
    report = build_bound_report(automaton, analysis, pairs)

    lines = [f"automaton\t{format_automaton(automaton)}"]
    lines.append(f"synchronizing\t{'yes' if analysis.synchronizing else 'no'}")
    if analysis.synchronizing:
        lines.append(f"reset_length\t{analysis.reset_length}")
    lines.append(f"min_rank\t{report.min_rank}")
    lines.append(f"min_rank_word_length\t{report.min_rank_word_length}")
    lines.append(f"pairs\t{report.pair_count}")
    lines.append(f"height\t{report.height}")
    greedy = " ".join(f"{r}:{p}" for r, p in sorted(report.greedy_lengths.items()))
    lines.append(f"greedy\t{greedy or '-'}")
    lines.append(f"rank_descent\t{report.rank_descent_bound}")

    table = enumerate_semigroup(automaton, app.sieve.semigroup_cap)
    lines.append(f"semigroup\t{len(table)}\t{'complete' if table.complete else 'capped'}")
    best = None
    for item in one_cluster_bounds(automaton, table):
        profile = item.profile
        eq2, eq3 = competitor_bounds(n, profile.m, profile.level)
        prime = f" prime_cycle={prime_cycle_bound(n, profile.m, profile.level)}" if _is_prime(profile.m) else ""
        lines.append(
            f"one_cluster\t{' '.join(map(str, item.transformation.image))}\t"
            f"s={item.s} m={profile.m} level={profile.level} lemma2={'yes' if item.lemma2 else 'no'} "
            f"theorem5={item.bound} adjusted={item.adjusted} corollary2={corollary2_bound(n, profile.m)} "
            f"eq2={eq2} eq3={eq3} rough={rough_estimate_bound(n, profile.m)}{prime}"
        )
        best = item.bound if best is None else min(best, item.bound)
    report.best_one_cluster_bound = best
    lines.append(f"best_one_cluster\t{best if best is not None else '-'}")

    cfg = SieveConfig(
        threshold=threshold,
        semigroup_cap=app.sieve.semigroup_cap,
        assume_cerny_below=app.sieve.assume_cerny_below,
        letter_perms=app.search.letter_permutations,
        m_max=app.onecluster.m_max,
        prop2_condition=app.sieve.prop2_condition,
        **app.sieve.exclusions.dict(),
    )
    verdict = sieve(automaton, cfg)
    report.verdict = verdict.kind.value if verdict.reason is None else f"{verdict.kind.value}:{verdict.reason.value}"
    lines.append(f"verdict\t{report.verdict}\tthreshold={threshold}")
    return lines


def cmd_bound(args, app: AppConfig) -> int:
    blocks = []
    for automaton in read_automata(args.in_path):
        threshold = args.threshold or app.search.threshold or default_threshold(automaton.n)
        blocks.append("\n".join(_bound_lines(automaton, app, threshold)))
    print("\n\n".join(blocks))
    return EXIT_OK


def cmd_reset(args, app: AppConfig) -> int:
    automata = [cerny_automaton(args.cerny)] if args.cerny else read_automata(args.in_path)
    for automaton in automata:
        analysis = reset_analysis(automaton)
        text = format_automaton(automaton)
        if analysis.synchronizing:
            word = " ".join(str(a) for a in analysis.reset_word)
            print(f"{text}\t{analysis.reset_length}\t{word}")
        else:
            print(f"{text}\tnone\trank={analysis.min_rank}")
    return EXIT_OK


def _is_prime(m: int) -> bool:
    return m >= 2 and all(m % d for d in range(2, int(m ** 0.5) + 1))


def cmd_dstar(args, app: AppConfig) -> int:
    if not 2 <= args.max_m <= app.onecluster.m_max:
        raise UsageError(f"--max-m must be between 2 and {app.onecluster.m_max}")
    composite = [m for m in range(4, args.max_m + 1) if not _is_prime(m)]

    print("# D*(m,k) for k=2..m-1, then the sum over k=2..m-2")
    for m in composite:
        values = [Dstar(m, k) for k in range(2, m)]
        print(f"{m} {' '.join(map(str, values))}\t{sum(values[:-1])}")

    print("# sum of D*(m,k) over k=1..m-1")
    print("m\t" + " ".join(str(m) for m in composite))
    print("sum\t" + " ".join(str(sum_dstar(m)) for m in composite))

    if args.with_d:
        print("# D(m,k) for k=1..m-1")
        for m in range(2, args.max_m + 1):
            print(f"{m} " + " ".join(str(D(m, k)) for k in range(1, m)))
    return EXIT_OK


def cmd_stats(args, app: AppConfig) -> int:
    if args.in_path:
        paths = [Path(args.in_path)]
    else:
        paths = sorted(
            Path(args.workdir).glob("stats.k*.txt"),
            key=lambda p: int(p.name[len("stats.k"):-len(".txt")]),
        )
        if not paths:
            raise SyncSearchError(f"no stats files in {args.workdir}")
    for path in paths:
        sys.stdout.write(path.read_text())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = Parser(prog="sync-search", description="Exhaustive search for slowly synchronizing automata.")
    parser.add_argument("--config", help="YAML config file (default config/config.yaml)")
    commands = parser.add_subparsers(dest="command", required=True)

    unary = commands.add_parser("unary", help="sieve the unary seeds into a pool")
    unary.add_argument("--n", type=int, required=True)
    unary.add_argument("--out", required=True)
    unary.add_argument("--report")
    unary.add_argument("--stats")
    _add_sieve_flags(unary)
    unary.set_defaults(handler=cmd_unary)

    extend = commands.add_parser("extend", help="extend a pool by one letter and sieve")
    extend.add_argument("--in", dest="in_path", required=True)
    extend.add_argument("--out", required=True)
    extend.add_argument("--report")
    extend.add_argument("--stats")
    _add_sieve_flags(extend)
    extend.set_defaults(handler=cmd_extend)

    search = commands.add_parser("search", help="unary run plus k-1 extension runs in a work directory")
    search.add_argument("--n", type=int, required=True)
    search.add_argument("--k", type=_positive, required=True)
    search.add_argument("--workdir", required=True)
    _add_sieve_flags(search)
    search.set_defaults(handler=cmd_search)

    bound = commands.add_parser("bound", help="print every bound for each automaton in a file")
    bound.add_argument("--in", dest="in_path", required=True)
    bound.add_argument("--threshold", type=_positive)
    bound.set_defaults(handler=cmd_bound)

    reset = commands.add_parser("reset", help="shortest reset word")
    source = reset.add_mutually_exclusive_group(required=True)
    source.add_argument("--in", dest="in_path")
    source.add_argument("--cerny", type=_positive, metavar="N")
    reset.set_defaults(handler=cmd_reset)

    dstar = commands.add_parser("dstar", help="print the D* tables")
    dstar.add_argument("--max-m", type=int, default=12)
    dstar.add_argument("--with-d", action="store_true")
    dstar.set_defaults(handler=cmd_dstar)

    stats = commands.add_parser("stats", help="print run statistics")
    where = stats.add_mutually_exclusive_group(required=True)
    where.add_argument("--workdir")
    where.add_argument("--in", dest="in_path")
    stats.set_defaults(handler=cmd_stats)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    try:
        app = load_config(args.config)
    except SyncSearchError as e:
        logger.error(f"❌ {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    root = logging.getLogger()
    root.setLevel(app.logging.level)
    for handler in root.handlers:
        handler.setFormatter(logging.Formatter(app.logging.format))

    try:
        return args.handler(args, app)
    except (UsageError, InvalidArgumentError) as e:
        logger.error(f"❌ {e}")
        print(f"{parser.prog}: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (SyncSearchError, OSError) as e:
        logger.error(f"❌ {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
