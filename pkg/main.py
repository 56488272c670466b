# main.py
"""
sync-search - exhaustive search for slowly synchronizing automata.
- Unary seeds, one-letter extensions, isomorphism rejection
- Frankl-Pin and one-cluster bounds prune hopeless candidates
- Reports strongly connected, irreducibly synchronizing automata above a threshold
"""

import logging
import sys

from sync_search.cli import main

# Setup logging; the level is raised or lowered from config/config.yaml by the CLI
logging.basicConfig(
    level=logging.INFO,
    format="%(asctime)s | %(levelname)s | %(message)s"
)

if __name__ == "__main__":
    sys.exit(main())
