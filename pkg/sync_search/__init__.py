"""
sync-search: exhaustive generation of small synchronizing automata with long
reset words, pruned by reset-length upper bounds.
"""

__version__ = "0.3.0"
