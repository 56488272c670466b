from sync_search.core.automaton import (
    Automaton,
    TwinPair,
    cerny_automaton,
    factor_twin,
    find_twin_pairs,
    is_strongly_connected,
    relabel,
    restrict,
)
from sync_search.core.canonical import canonical_automaton, canonical_form, decode_canonical
from sync_search.core.textfmt import format_automaton, parse_automaton
from sync_search.core.transformation import (
    OneClusterProfile,
    Transformation,
    apply,
    compose,
    constant,
    functional_profile,
    identity,
    power,
    rank,
)
