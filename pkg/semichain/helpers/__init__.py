"""
Static data of the semichain library: defaults, published values and the
metadata behind help texts.
"""

from .defaults import DEFAULT_CONFIG, DEFAULT_SIZE_CAP
from .families_metadata import families_metadata, family_help
from .nodes_metadata import nodes_metadata
from .published_values import (
    FREE_BAND_LENGTHS,
    INTERVAL_LEAGUE_TABLE,
    INVERSE_LENGTHS,
    INVERSE_STAR_LENGTHS,
    KNOWN_F,
    KNOWN_FSTAR,
    LEAGUE_TABLE,
)

__all__ = [
    "DEFAULT_CONFIG",
    "DEFAULT_SIZE_CAP",
    "families_metadata",
    "family_help",
    "nodes_metadata",
    "FREE_BAND_LENGTHS",
    "INTERVAL_LEAGUE_TABLE",
    "INVERSE_LENGTHS",
    "INVERSE_STAR_LENGTHS",
    "KNOWN_F",
    "KNOWN_FSTAR",
    "LEAGUE_TABLE",
]
