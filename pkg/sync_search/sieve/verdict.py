# sync_search/sieve/verdict.py

"""
Sieve outcomes and per-run bookkeeping.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple

from sync_search.errors import SyncSearchError


class VerdictKind(str, Enum):
    REPORT = "report"
    STORE = "store"
    DROP = "drop"


class DropReason(str, Enum):
    BOUND_RANK_DESCENT = "bound_rank_descent"
    BOUND_ONE_CLUSTER = "bound_one_cluster"
    REDUCIBLE_GENERATORS = "reducible_generators"
    NOT_REPORTABLE = "not_reportable"


# Exclusions applied to non-synchronizing candidates, in the order they run.
EXCLUSION_ORDER = (
    DropReason.BOUND_RANK_DESCENT,
    DropReason.BOUND_ONE_CLUSTER,
    DropReason.REDUCIBLE_GENERATORS,
)


@dataclass(frozen=True)
class Verdict:
    kind: VerdictKind
    reason: Optional[DropReason] = None
    reset_length: Optional[int] = None
    reset_word: Optional[Tuple[int, ...]] = None
    bound: Optional[int] = None
    detail: str = ""

    @classmethod
    def report(cls, length: int, word: Tuple[int, ...]) -> "Verdict":
        return cls(VerdictKind.REPORT, reset_length=length, reset_word=word)

    @classmethod
    def store(cls) -> "Verdict":
        return cls(VerdictKind.STORE)

    @classmethod
    def drop(cls, reason: DropReason, bound: int = None, detail: str = "") -> "Verdict":
        return cls(VerdictKind.DROP, reason=reason, bound=bound, detail=detail)

    @property
    def synchronizing_path(self) -> bool:
        return self.kind is VerdictKind.REPORT or self.reason is DropReason.NOT_REPORTABLE


@dataclass
class RunStats:
    n: int
    k: int
    threshold: int
    generated: int = 0
    reported: int = 0
    stored: int = 0
    dropped: Dict[DropReason, int] = field(default_factory=lambda: {r: 0 for r in DropReason})

    def record(self, verdict: Verdict):
        self.generated += 1
        if verdict.kind is VerdictKind.REPORT:
            self.reported += 1
        elif verdict.kind is VerdictKind.STORE:
            self.stored += 1
        else:
            self.dropped[verdict.reason] += 1

    @property
    def synchronizing(self) -> int:
        return self.reported + self.dropped[DropReason.NOT_REPORTABLE]

    def check(self):
        total = self.reported + self.stored + sum(self.dropped.values())
        if total != self.generated:
            raise SyncSearchError(f"stats do not add up: {total} accounted for, {self.generated} generated")

    def rows(self) -> List[Tuple[str, int]]:
        """Exclusion name and the number of candidates still standing after it."""
        remaining = self.generated - self.synchronizing
        rows = [
            ("generated", self.generated),
            ("synchronizing", self.synchronizing),
            ("reported", self.reported),
            ("non_synchronizing", remaining),
        ]
        for reason in EXCLUSION_ORDER:
            remaining -= self.dropped[reason]
            rows.append((f"after_{reason.value}", remaining))
        rows.append(("stored", self.stored))
        return rows

    def to_text(self) -> str:
        header = f"#stats n={self.n} k={self.k} threshold={self.threshold}\n"
        return header + "".join(f"{name}\t{count}\n" for name, count in self.rows())
