import pytest

from semichain.finsemi import CayleyTable, ElementSet, build_family, parse_family
from semichain.finsemi.table import subsemigroup_table
from semichain.formulas import brandt_length, family_length
from semichain.grouplen import (
    GroupLengthMethod,
    derived_subgroup,
    group_length,
    is_normal,
    is_soluble,
    length_symmetric,
    omega,
    permutation_degree,
    quotient_group,
    subgroup_chain_exact,
)
from semichain.utils.errors import NotAGroup, SearchTooLarge


def _group(text):
    return build_family(parse_family(text))


def _quaternion_group():
    # element 4*s + u is (-1)^s times the unit u in (1, i, j, k)
    units = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ]
    table = []
    for a in range(8):
        row = []
        for b in range(8):
            sign, unit = units[a % 4][b % 4]
            row.append(4 * ((a // 4 + b // 4 + sign) % 2) + unit)
        table.append(row)
    return CayleyTable(table, name="Q_8")


def _exact(G):
    return subgroup_chain_exact(G)[0]


def _exact_of_subgroup(G, N):
    table, _ = subsemigroup_table(G, N)
    return _exact(table)


def test_omega():
    assert omega(1) == 0
    assert omega(360) == 6
    assert omega(97) == 1
    with pytest.raises(ValueError):
        omega(0)


def test_length_of_symmetric_groups():
    expected = [0, 1, 2, 4, 5, 6, 7, 10, 11, 12, 13, 15]
    assert [length_symmetric(n) for n in range(1, 13)] == expected


@pytest.mark.parametrize("n", [1, 2, 4, 6, 8, 9, 12])
def test_cyclic_group_length_is_omega(n):
    result = group_length(_group(f"cyc:{n}"))
    assert result.length == omega(n)
    assert result.method == GroupLengthMethod.SOLUBLE_OMEGA


def test_small_symmetric_groups_are_soluble():
    for n in (2, 3, 4):
        G = _group(f"sym:{n}")
        assert is_soluble(G)
        assert group_length(G).length == length_symmetric(n)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_symmetric_formula_matches_subgroup_search(n):
    assert _exact(_group(f"sym:{n}")) == length_symmetric(n)


def test_derived_subgroup_of_s3_is_a3():
    assert len(derived_subgroup(_group("sym:3"))) == 3


@pytest.mark.parametrize("text", ["cyc:12", "cyc:8", "sym:3", "sym:4"])
def test_omega_agrees_with_subgroup_search_on_soluble_groups(text):
    G = _group(text)
    assert is_soluble(G)
    assert group_length(G).length == _exact(G) == omega(G.size)


def test_quaternion_group():
    Q8 = _quaternion_group()
    assert is_soluble(Q8)
    result = group_length(Q8)
    assert result.length == 3
    assert result.method == GroupLengthMethod.SOLUBLE_OMEGA
    assert _exact(Q8) == 3


def test_length_is_additive_over_the_centre_of_q8():
    Q8 = _quaternion_group()
    centre = ElementSet.of(8, [0, 4])
    assert is_normal(Q8, centre)
    quotient = quotient_group(Q8, centre)
    assert quotient.size == 4
    assert _exact(Q8) == _exact_of_subgroup(Q8, centre) + _exact(quotient)


def test_length_is_additive_over_normal_subgroups_of_s4():
    G = _group("sym:4")
    klein_labels = ("[1,2,3,4]", "[2,1,4,3]", "[3,4,1,2]", "[4,3,2,1]")
    klein = ElementSet.of(G.size, [G.labels.index(label) for label in klein_labels])
    alternating = derived_subgroup(G)
    assert len(alternating) == 12

    for N in (klein, alternating):
        assert is_normal(G, N)
        assert _exact(G) == _exact_of_subgroup(G, N) + _exact(quotient_group(G, N))


def test_quotient_rejects_non_normal_subgroups():
    G = _group("sym:3")
    transposition = ElementSet.of(G.size, [G.labels.index("[1,2,3]"), G.labels.index("[2,1,3]")])
    assert not is_normal(G, transposition)
    with pytest.raises(ValueError):
        quotient_group(G, transposition)


def test_permutation_degree():
    assert permutation_degree(_group("sym:4")) == 4
    assert permutation_degree(_group("sym:1")) == 1
    assert permutation_degree(_group("cyc:6")) is None
    assert permutation_degree(_group("I:2")) is None

    s3 = _group("sym:3")
    shuffled = list(s3.labels)
    shuffled[1], shuffled[2] = shuffled[2], shuffled[1]
    assert permutation_degree(CayleyTable(s3.product, labels=shuffled)) is None


def test_insoluble_symmetric_group_uses_the_closed_form():
    G = _group("sym:5")
    assert not is_soluble(G)
    result = group_length(G, search_cap=10)
    assert result.method == GroupLengthMethod.SYMMETRIC_FORMULA
    assert result.length == length_symmetric(5) == 5
    assert result.chain is None


def test_brandt_over_s5_uses_the_closed_form():
    spec = parse_family("brandt:s5,2")
    assert family_length(spec, group_search_cap=10) == brandt_length(5, 120, 2)


@pytest.mark.slow
def test_unlabelled_s5_goes_through_the_subgroup_search():
    labelled = _group("sym:5")
    G = CayleyTable(labelled.product)
    result = group_length(G)
    assert result.method == GroupLengthMethod.EXACT_SEARCH
    assert result.length == length_symmetric(5)
    assert len(result.chain) == result.length + 1
    assert result.chain[-1] == list(range(G.size))


def test_subgroup_search_respects_cap():
    with pytest.raises(SearchTooLarge):
        subgroup_chain_exact(_group("sym:4"), search_cap=10)


def test_group_length_rejects_non_groups():
    with pytest.raises(NotAGroup):
        group_length(_group("null:3"))
