"""
__init__.py file for formulas folder

The table emitters live in `semichain.formulas.tables`; they depend on the
league search and are imported from there directly.
"""

from .bands import band_jclass_count, completely_regular_length, free_band_length
from .combinatorics import (
    binomial,
    factorial,
    gaussian_binomial,
    gl_order,
    gls_order,
    nmaps,
    nmaps_op,
    stirling2,
)
from .counting import null_subsemigroup_count_log2, tn_null_max_order
from .inverse import (
    JClassSummary,
    NamedInverseMonoid,
    brandt_length,
    family_order,
    inverse_length,
    inverse_length_half_form,
    inverse_star_brandt,
    inverse_star_length,
    monogenic_length,
    named_inverse_monoid_length,
    named_inverse_monoid_summaries,
    null_length,
)
from .linear import (
    SeriesApproximation,
    c_q,
    gls_league_bound,
    gls_league_content,
    gls_lower_bound,
    gls_rank_count,
)
from .named import family_length

__all__ = [
    "JClassSummary",
    "NamedInverseMonoid",
    "SeriesApproximation",
    "band_jclass_count",
    "binomial",
    "brandt_length",
    "c_q",
    "completely_regular_length",
    "factorial",
    "family_length",
    "family_order",
    "free_band_length",
    "gaussian_binomial",
    "gl_order",
    "gls_league_bound",
    "gls_league_content",
    "gls_lower_bound",
    "gls_order",
    "gls_rank_count",
    "inverse_length",
    "inverse_length_half_form",
    "inverse_star_brandt",
    "inverse_star_length",
    "monogenic_length",
    "named_inverse_monoid_length",
    "named_inverse_monoid_summaries",
    "nmaps",
    "nmaps_op",
    "null_length",
    "null_subsemigroup_count_log2",
    "stirling2",
    "tn_null_max_order",
]
