# sync_search/generator/poolfile.py

"""
Plain-text pool and report files.

Pool file: a header `#pool n=<n> k=<k> count=<c>` followed by one automaton
per line in the core text format, lines sorted lexicographically.

Report file (TSV): automaton text, reset length, strongly-connected flag,
irreducible flag.
"""

import logging
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, List, Tuple

from sync_search.core.canonical import canonical_form, decode_canonical
from sync_search.core.textfmt import format_automaton, iter_automata
from sync_search.errors import PoolError
from sync_search.generator.pool import Pool

logger = logging.getLogger(__name__)

HEADER = re.compile(r"^#pool\s+n=(\d+)\s+k=(\d+)\s+count=(\d+)\s*$")


@dataclass(frozen=True)
class ReportRow:
    key: bytes
    reset_length: int
    strongly_connected: bool = True
    irreducible: bool = True
    word: Tuple[int, ...] = ()

    @property
    def text(self) -> str:
        return format_automaton(decode_canonical(self.key))

    def to_tsv(self) -> str:
        return f"{self.text}\t{self.reset_length}\t{int(self.strongly_connected)}\t{int(self.irreducible)}"


def pool_lines(pool: Pool) -> List[str]:
    lines = sorted(format_automaton(a) for a in pool.automata())
    return [f"#pool n={pool.n} k={pool.k} count={len(pool)}"] + lines


def write_pool(pool: Pool, path) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text("\n".join(pool_lines(pool)) + "\n")
    logger.info(f"💾 {len(pool)} automata written to {path}")


def read_pool(path, letter_perms: bool = True) -> Pool:
    """
    Read a pool file. Members are re-canonicalized, so hand-written pools in
    any labeling are accepted; malformed lines raise with their line number.
    """
    source = str(path)
    with open(path, "r") as f:
        lines = f.readlines()
    if not lines:
        raise PoolError(f"{source}: empty pool file")

    match = HEADER.match(lines[0].strip())
    if not match:
        raise PoolError(f"{source}:1: bad pool header {lines[0].strip()!r}")
    n, k, count = (int(g) for g in match.groups())

    keys = set()
    for line_no, automaton in iter_automata(lines[1:], source=source, start=2):
        if (automaton.n, automaton.k) != (n, k):
            raise PoolError(f"{source}:{line_no}: automaton has n={automaton.n} k={automaton.k}, pool has n={n} k={k}")
        keys.add(canonical_form(automaton, letter_perms))

    pool = Pool.from_keys(n, k, keys)
    if len(pool) != count:
        raise PoolError(f"{source}: header says count={count}, found {len(pool)} distinct automata")
    return pool


def write_reports(rows: Iterable[ReportRow], path) -> int:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    lines = [row.to_tsv() for row in sorted(rows, key=lambda r: r.key)]
    path.write_text("".join(line + "\n" for line in lines))
    logger.info(f"💾 {len(lines)} reports written to {path}")
    return len(lines)
