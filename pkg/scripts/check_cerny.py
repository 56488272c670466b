#!/usr/bin/env python3
"""
Desk check for sync-search.
Runs the known regression points with per-check timing:
- Černý automata reset lengths
- D* tables
- unary class counts
- a small exhaustive search
"""

import time
import logging
import os
import sys

# Add project root to Python path
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)) + "/..")

# Set up logging
logging.basicConfig(
    level=logging.INFO,
    format='%(asctime)s | %(levelname)s | %(message)s',
    datefmt='%H:%M:%S'
)

# Per-run summaries from the sieve are noise here
logging.getLogger("sync_search.sieve").setLevel(logging.WARNING)
logging.getLogger("sync_search.generator").setLevel(logging.WARNING)


def print_header(title):
    """Print a formatted section header."""
    print("\n" + "=" * 60)
    print(f" {title.upper()}")
    print("=" * 60)


def check_cerny(max_n=10):
    """Reset length of C_n must be (n-1)^2."""
    print_header("Černý automata")
    try:
        from sync_search.core.automaton import cerny_automaton
        from sync_search.synchro.reset import reset_length
        for n in range(3, max_n + 1):
            started = time.time()
            length = reset_length(cerny_automaton(n))
            mark = "✅" if length == (n - 1) ** 2 else "❌"
            print(f"{mark} C{n}: {length} (expected {(n - 1) ** 2}) in {time.time() - started:.2f}s")
    except Exception as e:
        logging.error(f"❌ Černý check failed: {e}")


def check_dstar():
    """Sums of D*(m,k) against the known values."""
    print_header("D* sums")
    expected = {4: 11, 6: 26, 8: 49, 9: 68, 10: 82, 12: 95}
    try:
        from sync_search.bounds.onecluster import sum_dstar
        started = time.time()
        for m, value in expected.items():
            got = sum_dstar(m)
            mark = "✅" if got == value else "❌"
            print(f"{mark} m={m}: {got} (expected {value})")
        print(f"⏱️ {time.time() - started:.2f}s")
    except Exception as e:
        logging.error(f"❌ D* check failed: {e}")


def check_unary_counts():
    """Conjugacy classes of self-maps."""
    print_header("Unary classes")
    expected = [1, 3, 7, 19, 47, 130, 343]
    try:
        from sync_search.generator.unary import enumerate_unary
        for n, value in enumerate(expected, start=1):
            started = time.time()
            got = len(enumerate_unary(n))
            mark = "✅" if got == value else "❌"
            print(f"{mark} n={n}: {got} (expected {value}) in {time.time() - started:.2f}s")
    except Exception as e:
        logging.error(f"❌ Unary count check failed: {e}")


def check_search(n=4, k=2, threshold=9):
    """Two binary 4-state classes meet (n-1)^2, C4 among them."""
    print_header(f"Search n={n} k={k} threshold={threshold}")
    try:
        from sync_search.sieve.config import SieveConfig
        from sync_search.sieve.runner import pipeline
        from sync_search.utils.config import get_config
        app = get_config()
        cfg = SieveConfig(threshold=threshold, semigroup_cap=app.sieve.semigroup_cap)
        started = time.time()
        result = pipeline(n, k, cfg, jobs=app.search.jobs)
        for row in result.reports:
            print(f"📝 {row.text}  reset={row.reset_length}")
        for run in result.runs:
            print(f"📊 k={run.stats.k}: " + ", ".join(f"{name}={count}" for name, count in run.stats.rows()))
        print(f"⏱️ {time.time() - started:.2f}s")
    except Exception as e:
        logging.error(f"❌ Search check failed: {e}")


if __name__ == "__main__":
    check_cerny()
    check_dstar()
    check_unary_counts()
    check_search()
