"""
Tests for the exact chain searches, the decomposition and certificate checks.
"""

import pytest
from pydantic import ValidationError

from semichain.finsemi import (
    classify,
    greens_structure,
    ideals,
    principal_factor,
    rees_quotient,
    subsemigroup_table,
)
from semichain.grouplen import omega
from semichain.oracle import (
    CertificateKind,
    ChainCertificate,
    DecompositionRule,
    SearchBudget,
    decompose_length,
    longest_chain_exact,
    longest_inverse_chain_exact,
    verify_chain,
)
from semichain.utils.errors import BudgetExceeded, NotDecomposable, NotInverse


def _length(table):
    length, _ = longest_chain_exact(table)
    return length


@pytest.mark.parametrize("m", range(1, 13))
def test_null_semigroup_length(family, m):
    assert _length(family(f"null:{m}")) == m - 1


@pytest.mark.parametrize("m, r", [(1, 2), (2, 3), (3, 4), (4, 1), (2, 6)])
def test_monogenic_length(family, m, r):
    assert _length(family(f"mono:{m},{r}")) == m + omega(r) - 1


@pytest.mark.parametrize("n", range(1, 13))
def test_cyclic_group_by_search(family, n):
    assert _length(family(f"cyc:{n}")) == omega(n)


@pytest.mark.parametrize(
    "text, expected", [("brandt:triv,2", 4), ("brandt:triv,3", 8), ("brandt:c2,2", 7)]
)
def test_brandt_by_search(family, text, expected):
    assert _length(family(text)) == expected


def test_search_returns_a_valid_certificate(family):
    S = family("I:2")
    length, certificate = longest_chain_exact(S)
    assert length == 6
    assert certificate.length == 6
    assert verify_chain(S, certificate)


def test_inverse_chain_lengths(family):
    assert longest_inverse_chain_exact(family("I:1"))[0] == 1
    length, certificate = longest_inverse_chain_exact(family("I:2"))
    assert length == 5
    assert certificate.kind == CertificateKind.INVERSE_SUBSEMIGROUP
    assert verify_chain(family("I:2"), certificate)


def test_inverse_chain_needs_inverse_semigroup(family):
    with pytest.raises(NotInverse):
        longest_inverse_chain_exact(family("T:2"))


def test_search_budget(family):
    with pytest.raises(BudgetExceeded) as info:
        longest_chain_exact(family("null:12"), SearchBudget(max_subsemigroups=50))
    assert info.value.exit_code == 3


def test_large_null_semigroup_skips_enumeration(family):
    length, certificate = longest_chain_exact(family("null:25"), SearchBudget(max_subsemigroups=1))
    assert length == 24
    assert len(certificate.subsets) == 25
    assert len(certificate.subsets[0]) == 1


def test_budget_from_config():
    budget = SearchBudget.from_config({"budget": {"max_millis": 500}, "threads": 3})
    assert budget.max_millis == 500
    assert budget.threads == 3
    assert budget.max_subsemigroups == 250_000


def test_certificate_length_must_match():
    with pytest.raises(ValidationError):
        ChainCertificate(length=3, subsets=[[0], [0, 1]])


def test_verify_chain_reports_violations(family):
    S = family("cyc:4")
    cases = {
        "empty": [[], [0, 1, 2, 3]],
        "outside": [[0], [0, 7]],
        "not closed": [[0], [0, 1]],
        "strictly contain": [[0, 2], [0, 2]],
    }
    for fragment, subsets in cases.items():
        verdict = verify_chain(S, ChainCertificate(subsets=subsets))
        assert not verdict
        assert fragment in verdict.violation


def test_verify_inverse_chain_on_non_inverse_table(family):
    certificate = ChainCertificate(kind=CertificateKind.INVERSE_SUBSEMIGROUP, subsets=[[0]])
    verdict = verify_chain(family("T:2"), certificate)
    assert not verdict.valid


@pytest.mark.parametrize(
    "text, expected, rule",
    [
        ("mono:3,4", 4, DecompositionRule.IDEAL_PEEL),
        ("I:2", 6, DecompositionRule.REGULAR_SUM),
        ("brandt:c2,2", 7, DecompositionRule.REGULAR_SUM),
        ("null:6", 5, DecompositionRule.NULL),
        ("cyc:12", 3, DecompositionRule.GROUP),
    ],
)
def test_decompose_length(family, text, expected, rule):
    length, trace = decompose_length(family(text))
    assert length == expected
    assert trace.rule == rule
    assert trace.length == length


def test_decompose_agrees_with_search(family, rectangular_band):
    tables = [family(text) for text in ("POI:2", "POPI:2", "fb2", "O:3")]
    for table in tables + [rectangular_band]:
        assert decompose_length(table)[0] == _length(table)


def test_decompose_uses_closed_forms_for_brandt_factor(family):
    _, trace = decompose_length(family("brandt:c2,3"))
    rules = {child.rule for child in trace.children}
    assert DecompositionRule.BRANDT in rules


def test_decompose_falls_back_and_can_fail(family):
    # the rank-2 factor of T_3 has no closed form and needs the search
    with pytest.raises(NotDecomposable) as info:
        decompose_length(family("T:3"), SearchBudget(max_subsemigroups=2))
    assert info.value.exit_code == 4


ADDITIVITY_CORPUS = [
    "null:2",
    "null:3",
    "null:5",
    "mono:1,2",
    "mono:2,2",
    "mono:3,2",
    "mono:2,3",
    "mono:3,3",
    "mono:4,1",
    "mono:1,4",
    "cyc:6",
    "sym:3",
    "brandt:triv,2",
    "brandt:triv,3",
    "brandt:c2,2",
    "I:1",
    "I:2",
    "POI:2",
    "POPI:2",
    "fb2",
    "T:2",
    "O:3",
]


@pytest.mark.parametrize("text", ADDITIVITY_CORPUS)
def test_length_is_additive_over_ideals(family, text):
    S = family(text)
    total = _length(S)
    for ideal in ideals(S):
        inner, _ = subsemigroup_table(S, ideal)
        assert total == _length(inner) + _length(rees_quotient(S, ideal))


def test_rectangular_band_additivity(rectangular_band):
    for ideal in ideals(rectangular_band):
        inner, _ = subsemigroup_table(rectangular_band, ideal)
        assert _length(rectangular_band) == _length(inner) + _length(
            rees_quotient(rectangular_band, ideal)
        )


REGULAR_CORPUS = [
    "cyc:6",
    "sym:3",
    "mono:1,4",
    "brandt:triv,2",
    "fb2",
    "I:1",
    "I:2",
    "POI:2",
    "T:2",
]


@pytest.mark.parametrize("text", REGULAR_CORPUS)
def test_regular_length_is_the_sum_of_principal_factors(family, text):
    S = family(text)
    assert classify(S).regular
    greens = greens_structure(S)
    factors = [principal_factor(S, j, greens) for j in range(greens.j_count)]
    assert _length(S) == sum(_length(factor) for factor in factors) - 1


def test_rectangular_band_is_its_own_principal_factor_sum(rectangular_band):
    greens = greens_structure(rectangular_band)
    assert greens.j_count == 1
    assert _length(rectangular_band) == _length(principal_factor(rectangular_band, 0, greens)) - 1


@pytest.mark.parametrize("text", ["I:2", "O:3", "fb2", "brandt:c2,2"])
def test_certificate_does_not_depend_on_thread_count(family, text):
    S = family(text)
    single = longest_chain_exact(S, SearchBudget(threads=1))
    pooled = longest_chain_exact(S, SearchBudget(threads=4))
    assert single == pooled
    assert verify_chain(S, pooled[1])
