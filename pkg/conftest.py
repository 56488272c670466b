# conftest.py

import itertools

import pytest
from hypothesis import strategies as st

from sync_search.core.automaton import Automaton, cerny_automaton


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: exhaustive checks that take minutes")


@st.composite
def automata(draw, min_n=1, max_n=4, min_k=1, max_k=2):
    n = draw(st.integers(min_n, max_n))
    k = draw(st.integers(min_k, max_k))
    row = st.lists(st.integers(0, n - 1), min_size=n, max_size=n).map(tuple)
    return Automaton(tuple(draw(st.lists(row, min_size=k, max_size=k))))


@st.composite
def maps(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    return tuple(draw(st.lists(st.integers(0, n - 1), min_size=n, max_size=n)))


def all_tables(n, k):
    """Every n-state k-letter transition table."""
    rows = list(itertools.product(range(n), repeat=n))
    for table in itertools.product(rows, repeat=k):
        yield Automaton(table)


def run_word(automaton, states, word):
    states = set(states)
    for a in word:
        states = {automaton.delta[a][q] for q in states}
    return states


def brute_force_reset(automaton, max_length):
    """Lexicographically least shortest reset word up to max_length, or None."""
    full = range(automaton.n)
    for length in range(max_length + 1):
        for word in itertools.product(range(automaton.k), repeat=length):
            if len(run_word(automaton, full, word)) == 1:
                return word
    return None


@pytest.fixture
def c4():
    return cerny_automaton(4)


@pytest.fixture
def unary_cycle4():
    return Automaton(((1, 2, 3, 0),))
