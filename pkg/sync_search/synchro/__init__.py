from sync_search.synchro.pairs import PairTable, compressible_pairs, is_synchronizing, sync_height
from sync_search.synchro.reset import SyncAnalysis, is_irreducibly_synchronizing, reset_analysis, reset_length
