# test_core.py

import itertools

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import all_tables, automata, maps
from sync_search.core.automaton import (
    Automaton,
    TwinPair,
    cerny_automaton,
    factor_twin,
    find_twin_pairs,
    is_strongly_connected,
    is_twin_pair,
    relabel,
    restrict,
)
from sync_search.core.canonical import canonical_automaton, canonical_form, decode_canonical
from sync_search.core.textfmt import format_automaton, iter_automata, parse_automaton
from sync_search.core.transformation import (
    Transformation,
    apply,
    compose,
    constant,
    functional_profile,
    identity,
    power,
    rank,
)
from sync_search.errors import AutomatonError, AutomatonFormatError
from sync_search.synchro.pairs import is_synchronizing
from sync_search.synchro.reset import reset_length

CYCLE4 = Transformation((1, 2, 3, 0))


# ----------------------------
# Transformations
# ----------------------------

def test_apply():
    assert apply(identity(4), {0, 2}) == {0, 2}
    assert apply(constant(3), {0, 1, 2}) == {0}
    assert apply(CYCLE4, {1, 3}) == {2, 0}


def test_compose():
    assert compose(identity(4), CYCLE4) == CYCLE4
    assert compose(CYCLE4, CYCLE4) == Transformation((2, 3, 0, 1))
    assert compose(constant(4), CYCLE4) == constant(4, 1)


def test_compose_size_mismatch():
    with pytest.raises(AutomatonError):
        compose(identity(3), identity(4))


def test_rank():
    assert rank(identity(5)) == 5
    assert rank(constant(5)) == 1
    assert rank(Transformation((0, 0, 1, 2))) == 3


def test_transformation_range_checked():
    with pytest.raises(AutomatonError):
        Transformation((0, 3, 1))


def test_key_roundtrip():
    t = Transformation((2, 0, 0, 1))
    assert Transformation.from_key(t.key()) == t


# ----------------------------
# Functional profile
# ----------------------------

def test_profile_cycle():
    profile = functional_profile(Transformation((1, 2, 3, 4, 0)))
    assert profile.one_cluster
    assert profile.m == 5
    assert profile.level == 0
    assert profile.lemma2_sink is None


def test_profile_constant():
    profile = functional_profile(constant(5))
    assert profile.one_cluster
    assert profile.m == 1
    assert profile.level == 1


def test_profile_single_tail():
    profile = functional_profile(Transformation((1, 0, 1, 2, 3)))
    assert profile.one_cluster
    assert profile.m == 2
    assert profile.level == 3
    assert profile.cycle == {0, 1}
    assert profile.lemma2_sink == 1


def test_profile_two_clusters():
    profile = functional_profile(Transformation((0, 1, 0)))
    assert not profile.one_cluster
    assert profile.lemma2_sink is None


def test_profile_two_tails_different_sinks():
    # 2 -> 0 and 3 -> 1 on the 2-cycle {0, 1}
    profile = functional_profile(Transformation((1, 0, 0, 1)))
    assert profile.one_cluster
    assert profile.level == 1
    assert profile.lemma2_sink is None


@given(maps(max_n=7))
@settings(deadline=None, max_examples=300)
def test_profile_invariants(image):
    t = Transformation(image)
    profile = functional_profile(t)
    n = t.n
    assert len(profile.cycle) == profile.m

    everything = set(range(n))
    assert apply(power(t, profile.level), everything) <= profile.cycle
    if profile.level >= 1:
        assert not apply(power(t, profile.level - 1), everything) <= profile.cycle

    if profile.one_cluster:
        start = min(profile.cycle)
        orbit = {start}
        q = t(start)
        while q != start:
            orbit.add(q)
            q = t(q)
        assert orbit == profile.cycle

    graph = nx.Graph()
    graph.add_nodes_from(range(n))
    graph.add_edges_from((q, t(q)) for q in range(n))
    assert profile.one_cluster == nx.is_connected(graph)


# ----------------------------
# Automata
# ----------------------------

def test_automaton_validation():
    with pytest.raises(AutomatonError):
        Automaton(((0, 1), (0,)))
    with pytest.raises(AutomatonError):
        Automaton(((0, 2),))
    with pytest.raises(AutomatonError):
        Automaton(())


def test_restrict(c4):
    assert restrict(c4, {0}) == Automaton(((1, 2, 3, 0),))
    assert restrict(c4, {0, 1}) == c4
    assert not is_synchronizing(restrict(c4, {0}))
    with pytest.raises(AutomatonError):
        restrict(c4, set())


def test_strongly_connected(c4):
    assert is_strongly_connected(Automaton(((1, 2, 3, 0),)))
    assert not is_strongly_connected(Automaton(((0, 0, 0),)))
    assert is_strongly_connected(c4)


@given(automata(max_n=6, max_k=3))
@settings(deadline=None, max_examples=200)
def test_strongly_connected_matches_reachability(automaton):
    def reachable(q):
        seen, todo = {q}, [q]
        while todo:
            p = todo.pop()
            for row in automaton.delta:
                if row[p] not in seen:
                    seen.add(row[p])
                    todo.append(row[p])
        return seen

    expected = all(len(reachable(q)) == automaton.n for q in range(automaton.n))
    assert is_strongly_connected(automaton) == expected


def test_twin_pairs():
    # letter 0 swaps 0 and 1, letter 1 merges them; state 2 falls into the pair
    automaton = Automaton(((1, 0, 0), (0, 0, 1)))
    assert TwinPair(0, 1) in find_twin_pairs(automaton)
    assert find_twin_pairs(cerny_automaton(4)) == []
    assert find_twin_pairs(Automaton(((0,),))) == []


def test_factor_twin():
    factor = factor_twin(Automaton(((1, 0),)), TwinPair(0, 1))
    assert factor == Automaton(((0,),))
    with pytest.raises(AutomatonError):
        factor_twin(cerny_automaton(4), TwinPair(0, 1))


def test_factor_twin_relabels_states():
    # states 1 and 3 are twins; 3 is folded into 1
    automaton = Automaton(((3, 1, 0, 1), (1, 3, 2, 1)))
    assert is_twin_pair(automaton, 1, 3)
    assert factor_twin(automaton, TwinPair(3, 1)) == Automaton(((1, 1, 0), (1, 1, 2)))


@given(automata(min_n=2, max_n=6, max_k=3))
@settings(deadline=None, max_examples=200)
def test_factor_twin_shape(automaton):
    for pair in find_twin_pairs(automaton):
        factor = factor_twin(automaton, pair)
        assert factor.n == automaton.n - 1
        assert factor.k == automaton.k


@st.composite
def split_twins(draw, min_n=1, max_n=5, max_k=3):
    """An automaton whose last state y = n is a twin of some z, built by splitting z in a factor."""
    factor = draw(automata(min_n=min_n, max_n=max_n, max_k=max_k))
    n = factor.n
    z = draw(st.integers(0, n - 1))
    y = n
    rows = []
    for row in factor.delta:
        # any arrow into z may land on either copy
        lifted = [draw(st.sampled_from([z, y])) if target == z else target for target in row]
        if row[z] == z:
            pair = draw(st.sampled_from([(z, z), (y, y), (z, y), (y, z)]))
        else:
            pair = (row[z], row[z])
        rows.append(tuple(lifted[:z] + [pair[0]] + lifted[z + 1:] + [pair[1]]))
    return Automaton(tuple(rows)), factor, TwinPair(z, y)


@given(automata(min_n=2, max_n=6, max_k=3))
@settings(deadline=None, max_examples=300)
def test_twin_pair_is_congruence(automaton):
    for pair in find_twin_pairs(automaton):
        block = {pair.x, pair.y}
        for row in automaton.delta:
            images = {row[pair.x], row[pair.y]}
            assert len(images) == 1 or images == block

        factor = factor_twin(automaton, pair)
        low, high = sorted(block)

        def merged(q):
            return low if q == high else (q - 1 if q > high else q)

        for a, row in enumerate(automaton.delta):
            for q in range(automaton.n):
                assert factor.delta[a][merged(q)] == merged(row[q])


@given(split_twins())
@settings(deadline=None, max_examples=300)
def test_split_twins_factor_back(case):
    automaton, factor, pair = case
    assert is_twin_pair(automaton, pair.x, pair.y)
    assert factor_twin(automaton, pair) == factor


@given(split_twins(min_n=2, max_n=5, max_k=2))
@settings(deadline=None, max_examples=500)
def test_twin_factor_keeps_reset_length(case):
    automaton, factor, pair = case
    if not (is_strongly_connected(automaton) and is_synchronizing(automaton)):
        return
    r = reset_length(automaton)
    assert is_strongly_connected(factor)
    assert is_synchronizing(factor)
    assert reset_length(factor) in (r - 1, r)

def test_cerny_text(c4):
    assert format_automaton(c4) == "4 2 : 1 2 3 0 ; 1 1 2 3"


# ----------------------------
# Text format
# ----------------------------

def test_parse_automaton(c4):
    assert parse_automaton("4 2 : 1 2 3 0 ; 1 1 2 3") == c4
    assert parse_automaton("  1 1 :0  ") == Automaton(((0,),))


@pytest.mark.parametrize(
    "text",
    [
        "4 2 1 2 3 0 ; 1 1 2 3",
        "4 : 1 2 3 0",
        "4 2 : 1 2 3 0",
        "4 2 : 1 2 3 ; 1 1 2 3",
        "4 2 : 1 2 3 x ; 1 1 2 3",
        "4 2 : 1 2 3 4 ; 1 1 2 3",
    ],
)
def test_parse_errors(text):
    with pytest.raises(AutomatonFormatError):
        parse_automaton(text)


def test_parse_error_carries_line():
    lines = ["# comment", "", "2 1 : 1 0", "2 1 : 1 5"]
    with pytest.raises(AutomatonFormatError) as info:
        list(iter_automata(lines, source="pool.aut"))
    assert info.value.line_no == 4
    assert "pool.aut:4:" in str(info.value)


@given(automata(max_n=8, max_k=3))
@settings(deadline=None)
def test_format_parse(automaton):
    assert parse_automaton(format_automaton(automaton)) == automaton


# ----------------------------
# Canonical forms
# ----------------------------

def _brute_force_canonical(automaton):
    n, k = automaton.n, automaton.k
    best = None
    for perm in itertools.permutations(range(n)):
        for letters in itertools.permutations(range(k)):
            table = relabel(automaton, perm, letters).delta
            if best is None or table < best:
                best = table
    return best


@given(automata(min_n=3, max_n=4, min_k=2, max_k=2), automata(min_n=3, max_n=4, min_k=2, max_k=2))
@settings(deadline=None, max_examples=300)
def test_canonical_form_separates_classes(a, b):
    same_class = a.n == b.n and _brute_force_canonical(a) == _brute_force_canonical(b)
    assert (canonical_form(a) == canonical_form(b)) == same_class


@given(automata(max_n=4, max_k=2))
@settings(deadline=None, max_examples=300)
def test_canonical_automaton_is_isomorphic(automaton):
    assert _brute_force_canonical(canonical_automaton(automaton)) == _brute_force_canonical(automaton)


@given(automata(max_n=6, max_k=3), st.randoms(use_true_random=False))
@settings(deadline=None, max_examples=200)
def test_canonical_form_invariant(automaton, rnd):
    states = list(range(automaton.n))
    letters = list(range(automaton.k))
    rnd.shuffle(states)
    rnd.shuffle(letters)
    assert canonical_form(relabel(automaton, states, letters)) == canonical_form(automaton)


def test_canonical_keys_match_classes_on_all_binary_three_state_tables():
    # the key picks one member per class, not necessarily the lex-least table
    classes = {}
    for automaton in all_tables(3, 2):
        classes.setdefault(_brute_force_canonical(automaton), set()).add(canonical_form(automaton))
    assert all(len(keys) == 1 for keys in classes.values())
    assert len({key for keys in classes.values() for key in keys}) == len(classes)
    for least, (key,) in classes.items():
        assert _brute_force_canonical(decode_canonical(key)) == least


def test_canonical_without_letter_permutations():
    a = Automaton(((0, 0), (1, 0)))
    b = Automaton(((1, 0), (0, 0)))
    assert canonical_form(a) == canonical_form(b)
    assert canonical_form(a, letter_perms=False) != canonical_form(b, letter_perms=False)


def test_canonical_roundtrip(c4):
    canonical = canonical_automaton(c4)
    assert canonical_form(canonical) == canonical_form(c4)
    assert canonical_automaton(canonical) == canonical
