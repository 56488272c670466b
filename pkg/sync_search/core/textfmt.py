# sync_search/core/textfmt.py

"""
One-line text format for automata:

    n k : d(0,a0) d(1,a0) ... d(n-1,a0) ; d(0,a1) ... ; ...

Example, the Černý automaton C4:  4 2 : 1 2 3 0 ; 1 1 2 3
"""

from typing import Iterator, List, Tuple

from sync_search.core.automaton import Automaton
from sync_search.errors import AutomatonError, AutomatonFormatError


def format_automaton(automaton: Automaton) -> str:
    rows = " ; ".join(" ".join(str(q) for q in row) for row in automaton.delta)
    return f"{automaton.n} {automaton.k} : {rows}"


def parse_automaton(text: str, line_no: int = None, source: str = None) -> Automaton:
    head, sep, body = text.strip().partition(":")
    if not sep:
        raise AutomatonFormatError("missing ':' separator", line_no, source)
    try:
        n, k = (int(part) for part in head.split())
    except ValueError:
        raise AutomatonFormatError(f"bad header {head.strip()!r}, expected 'n k'", line_no, source)

    chunks = body.split(";")
    if len(chunks) != k:
        raise AutomatonFormatError(f"expected {k} letters, found {len(chunks)}", line_no, source)

    rows = []
    for a, chunk in enumerate(chunks):
        try:
            row = tuple(int(q) for q in chunk.split())
        except ValueError:
            raise AutomatonFormatError(f"non-integer entry in letter {a}", line_no, source)
        if len(row) != n:
            raise AutomatonFormatError(f"letter {a} has {len(row)} entries, expected {n}", line_no, source)
        rows.append(row)

    try:
        return Automaton(tuple(rows))
    except AutomatonError as e:
        raise AutomatonFormatError(str(e), line_no, source)


def iter_automata(lines, source: str = None, start: int = 1) -> Iterator[Tuple[int, Automaton]]:
    """Parse automaton lines, skipping blanks and '#' comments. `start` numbers the first line."""
    for line_no, line in enumerate(lines, start=start):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield line_no, parse_automaton(stripped, line_no, source)


def read_automata(path) -> List[Automaton]:
    with open(path, "r") as f:
        return [automaton for _, automaton in iter_automata(f, source=str(path))]
