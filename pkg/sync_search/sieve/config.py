# sync_search/sieve/config.py

from typing import Literal

from pydantic import BaseModel, Field

from sync_search.bounds.onecluster import DEFAULT_M_MAX
from sync_search.semigroup.closure import DEFAULT_CAP


def default_threshold(n: int) -> int:
    """n^2 - 5n + 9, never below 1."""
    return max(1, n * n - 5 * n + 9)


class SieveConfig(BaseModel):
    """Everything the per-automaton decision needs; picklable for worker processes."""

    threshold: int = Field(..., ge=1)
    semigroup_cap: int = Field(DEFAULT_CAP, ge=1)
    assume_cerny_below: bool = False
    letter_perms: bool = True
    # D* memo filled up to min(n, m_max) before workers fork
    m_max: int = Field(DEFAULT_M_MAX, ge=2, le=DEFAULT_M_MAX)

    theorem2: bool = True
    theorem4: bool = True
    one_cluster: bool = True
    reducible_generators: bool = True
    twin_pairs: bool = True
    prop2: bool = True
    prop2_condition: Literal["idempotent_or_involution", "involution_only"] = "idempotent_or_involution"

    class Config:
        frozen = True
        extra = "forbid"

    def without_exclusions(self) -> "SieveConfig":
        return self.copy(
            update=dict(
                theorem2=False,
                theorem4=False,
                one_cluster=False,
                reducible_generators=False,
                twin_pairs=False,
                prop2=False,
            )
        )
