import math

import pytest
from pydantic import ValidationError

from semichain.formulas import stirling2
from semichain.helpers.published_values import KNOWN_F, KNOWN_FSTAR
from semichain.leagues import (
    League,
    SearchStatus,
    SetPartition,
    build_null_from_league,
    closed_form_F,
    closed_form_F_witness,
    closed_form_Fstar,
    closed_form_Fstar_witness,
    dumps_league,
    enumerate_partitions,
    is_transversal,
    league_check,
    league_lb,
    league_lb1,
    league_lb2,
    league_lb_interval,
    league_lb_witness,
    loads_league,
    max_content_exact,
    on_lower_bound,
    on_lower_bound_ratio,
    paired_points_witness,
    rank_expectation,
    rank_moments_direct,
    rank_variance,
    singleton_block_witness,
    tn_lower_bound,
)
from semichain.oracle import verify_chain
from semichain.utils.errors import MissingExactValues, TableTooLarge


def test_partition_counts():
    assert len(list(enumerate_partitions(6, 3))) == stirling2(6, 3)
    assert len(list(enumerate_partitions(6, 3, interval=True))) == math.comb(5, 2)
    assert all(p.is_interval() for p in enumerate_partitions(5, 2, interval=True))


def test_partitions_are_normalised():
    assert SetPartition(((3, 1), (2,))) == SetPartition(((2,), (1, 3)))
    with pytest.raises(ValueError):
        SetPartition(((1, 2), (4,)))


def test_transversal():
    partition = SetPartition(((1, 2), (3,)))
    assert is_transversal((1, 3), partition)
    assert not is_transversal((1, 2), partition)
    with pytest.raises(ValueError):
        is_transversal((1,), partition)


def test_league_model_checks_shape():
    with pytest.raises(ValidationError):
        League(n=4, k=2, partitions=[], subsets=[[1, 2, 3]])
    with pytest.raises(ValidationError):
        League(n=4, k=2, partitions=[[[1, 2], [3, 4]]], subsets=[[1, 2]], content=5)
    with pytest.raises(ValidationError):
        League(n=4, k=2, interval=True, partitions=[[[1, 3], [2, 4]]], subsets=[])


def test_league_check_finds_transversals():
    bad = League(n=3, k=2, partitions=[[[1, 2], [3]]], subsets=[[1, 3]])
    good = League(n=3, k=2, partitions=[[[1, 2], [3]]], subsets=[[1, 2]])
    assert not league_check(bad)
    assert league_check(good)
    assert loads_league(dumps_league(good)) == good


def test_lower_bound_values():
    assert league_lb1(7, 3) == 620
    assert league_lb2(7, 3) == 450
    assert league_lb(7, 3) == 620
    assert league_lb2(5, 1) == 0
    with pytest.raises(ValueError):
        league_lb(3, 4)


@pytest.mark.parametrize("n", range(3, 13))
def test_interval_bounds_sum_to_binomial(n):
    assert sum(league_lb_interval(n, k) for k in range(1, n + 1)) == math.comb(2 * n - 3, n)


@pytest.mark.parametrize("n, k", [(5, 3), (6, 3), (6, 4), (7, 3), (7, 5)])
def test_bound_witnesses(n, k):
    first = singleton_block_witness(n, k)
    second = paired_points_witness(n, k)
    assert first.content == league_lb1(n, k) and league_check(first)
    assert second.content == league_lb2(n, k) and league_check(second)
    assert league_lb_witness(n, k).content == league_lb(n, k)

    interval = singleton_block_witness(n, k, interval=True)
    assert interval.content == league_lb_interval(n, k) and league_check(interval)


def test_closed_forms_agree_with_published_optima():
    for (n, k), value in KNOWN_F.items():
        assert closed_form_F(n, k) in (None, value)
    for (n, k), value in KNOWN_FSTAR.items():
        assert closed_form_Fstar(n, k) in (None, value)
    assert closed_form_F(7, 6) == 20
    assert closed_form_F(7, 2) == 45
    assert closed_form_Fstar(7, 2) == 20
    assert closed_form_F(7, 4) is None


@pytest.mark.parametrize("n", range(3, 9))
def test_closed_form_witnesses(n):
    for k in {2, n - 1}:
        general = closed_form_F_witness(n, k)
        assert general.content == closed_form_F(n, k)
        assert league_check(general)

        interval = closed_form_Fstar_witness(n, k)
        assert interval.interval
        assert interval.content == closed_form_Fstar(n, k)
        assert league_check(interval)


@pytest.mark.parametrize(
    "n, k, interval, expected",
    [(4, 3, False, 3), (5, 3, False, 28), (5, 4, False, 6), (6, 2, False, 21), (5, 3, True, 12)],
)
def test_exact_search(n, k, interval, expected):
    result = max_content_exact(n, k, interval=interval)
    assert result.status == SearchStatus.EXACT
    assert result.optimum == expected
    assert result.witness.content == expected
    assert league_check(result.witness)


def test_exact_search_interval_six_four():
    assert max_content_exact(6, 4, interval=True).optimum == 30


def test_exact_search_with_threads():
    assert max_content_exact(5, 3, threads=2).optimum == 28


@pytest.mark.slow
def test_exact_search_six_four():
    result = max_content_exact(6, 4)
    assert result.optimum == 125
    assert league_check(result.witness)


@pytest.mark.slow
def test_symmetry_does_not_change_the_optimum():
    assert max_content_exact(6, 3, symmetry=True).optimum == 150


@pytest.mark.slow
def test_exact_search_seven_three():
    result = max_content_exact(7, 3)
    assert result.status == SearchStatus.EXACT
    assert result.optimum == KNOWN_F[(7, 3)] == 760
    assert league_check(result.witness)


def test_exact_search_seven_five():
    result = max_content_exact(7, 5)
    assert result.status == SearchStatus.EXACT
    assert result.optimum == KNOWN_F[(7, 5)] == 390
    assert league_check(result.witness)


@pytest.mark.long_run
def test_exact_search_seven_four():
    result = max_content_exact(7, 4, threads=4)
    assert result.status == SearchStatus.EXACT
    assert result.optimum == KNOWN_F[(7, 4)] == 1350


def test_exhausted_search_reports_lower_bound():
    result = max_content_exact(7, 3, max_nodes=1)
    assert result.status == SearchStatus.LOWER_BOUND_ONLY
    assert result.optimum >= 620
    assert result.witness.content == result.optimum
    assert league_check(result.witness)


def test_tn_lower_bound():
    assert tn_lower_bound(1) == 0
    assert tn_lower_bound(4) == 23
    assert tn_lower_bound(5, use_exact_f=True) == 329
    assert tn_lower_bound(4, use_exact_f=True, exact_values={}) == 3 * 2 + 3 * 6 - 1
    with pytest.raises(MissingExactValues):
        tn_lower_bound(8, use_exact_f=True)


def test_on_lower_bound():
    assert on_lower_bound(2) == (-1, 0)
    assert on_lower_bound(4) == (4, 4)
    for n in range(2, 9):
        assert on_lower_bound_ratio(n) == on_lower_bound(n)[0]


@pytest.mark.parametrize("n", range(1, 8))
def test_rank_moments(n):
    direct = rank_moments_direct(n)
    assert direct["expectation"] == rank_expectation(n)
    assert direct["variance"] == rank_variance(n)


def test_certificate_from_league():
    league = singleton_block_witness(4, 3)
    built = build_null_from_league(4, league)
    assert built.table.size == 256
    assert len(built.null_part) == 18
    assert built.certificate.length == 18
    assert len(built.certificate.subsets[0]) == 88
    assert verify_chain(built.table, built.certificate)


def test_certificate_limits():
    with pytest.raises(TableTooLarge):
        build_null_from_league(6, singleton_block_witness(6, 3))
    with pytest.raises(ValueError):
        build_null_from_league(4, singleton_block_witness(4, 1))
    with pytest.raises(ValueError):
        build_null_from_league(5, singleton_block_witness(4, 3))
