"""
__init__.py file for leagues folder
"""

from .bounds import (
    closed_form_F,
    closed_form_F_witness,
    closed_form_Fstar,
    closed_form_Fstar_witness,
    league_lb,
    league_lb1,
    league_lb2,
    league_lb_interval,
    league_lb_witness,
    on_lower_bound,
    on_lower_bound_ratio,
    paired_points_witness,
    rank_expectation,
    rank_moments_direct,
    rank_variance,
    singleton_block_witness,
    tn_lower_bound,
)
from .certificate import LeagueCertificate, build_null_from_league
from .league import League, dumps_league, league_check, loads_league
from .partitions import SetPartition, enumerate_partitions, is_transversal, k_subsets
from .search import LeagueSearchResult, SearchStatus, max_content_exact

__all__ = [
    "League",
    "LeagueCertificate",
    "LeagueSearchResult",
    "SearchStatus",
    "SetPartition",
    "build_null_from_league",
    "closed_form_F",
    "closed_form_F_witness",
    "closed_form_Fstar",
    "closed_form_Fstar_witness",
    "dumps_league",
    "enumerate_partitions",
    "is_transversal",
    "k_subsets",
    "league_check",
    "league_lb",
    "league_lb1",
    "league_lb2",
    "league_lb_interval",
    "league_lb_witness",
    "loads_league",
    "max_content_exact",
    "on_lower_bound",
    "on_lower_bound_ratio",
    "paired_points_witness",
    "rank_expectation",
    "rank_moments_direct",
    "rank_variance",
    "singleton_block_witness",
    "tn_lower_bound",
]
