from sync_search.generator.extensions import extension_keys, extensions
from sync_search.generator.pool import Pool, merge
from sync_search.generator.poolfile import ReportRow, read_pool, write_pool, write_reports
from sync_search.generator.unary import enumerate_unary
