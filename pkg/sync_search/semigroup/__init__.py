from sync_search.semigroup.closure import (
    DEFAULT_CAP,
    SemigroupTable,
    enumerate_semigroup,
    is_reducible_generating_set,
)
from sync_search.semigroup.onecluster_scan import OneClusterBound, one_cluster_bounds, one_cluster_scan
