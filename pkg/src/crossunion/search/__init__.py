"""Exhaustive oracles for extremal cross s-union problems."""

from crossunion.search.exhaustive import (
    SearchResult,
    allowed_partners,
    max_antichain_in_downset,
    search_katona,
    search_max_pair_antichain,
    search_max_pair_general,
    search_max_triple_antichain,
    search_milner,
    search_min_pair,
    search_wong_tay,
)

__all__ = [
    "SearchResult",
    "allowed_partners",
    "max_antichain_in_downset",
    "search_katona",
    "search_max_pair_antichain",
    "search_max_pair_general",
    "search_max_triple_antichain",
    "search_milner",
    "search_min_pair",
    "search_wong_tay",
]
