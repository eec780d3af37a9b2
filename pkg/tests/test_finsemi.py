"""
Tests for tables, families, Green's structure, ideals and the closed-subset lattice.
"""

import json
import math
import random

import pytest

from semichain.finsemi import (
    CayleyTable,
    ElementSet,
    FamilyKind,
    FamilySpec,
    build_family,
    classify,
    closure,
    dumps_table,
    enumerate_closed_subsets,
    greens_structure,
    h_class_group,
    ideals,
    is_closed,
    is_ideal,
    loads_table,
    monogenic_index_period,
    parse_family,
    principal_factor,
    rees_quotient,
    subsemigroup_table,
    validate_table,
)
from semichain.utils.errors import (
    BudgetExceeded,
    FamilyParseError,
    IndexOutOfRange,
    NonAssociative,
    NotAnIdeal,
    NotClosed,
    SizeCapExceeded,
    TableValidationError,
)


def test_validate_table_accepts_cyclic_group():
    table = validate_table(3, [0, 1, 2, 1, 2, 0, 2, 0, 1])
    assert table.size == 3
    assert table.mul(2, 2) == 1


def test_validate_table_reports_first_non_associative_triple():
    with pytest.raises(NonAssociative) as info:
        validate_table(2, [1, 0, 0, 0])
    assert info.value.witness == (0, 0, 1)
    assert info.value.exit_code == 2


def test_validate_table_rejects_out_of_range_entry():
    with pytest.raises(IndexOutOfRange) as info:
        validate_table(2, [0, 0, 0, 2])
    assert info.value.position == (1, 1)


def test_validate_table_rejects_wrong_entry_count():
    with pytest.raises(TableValidationError):
        validate_table(2, [0, 0, 0])


def test_table_is_read_only():
    table = CayleyTable([[0, 0], [0, 1]])
    with pytest.raises(ValueError):
        table.product[0, 0] = 1


@pytest.mark.parametrize(
    "text, size",
    [
        ("T:3", 27),
        ("O:3", math.comb(5, 2)),
        ("I:2", 7),
        ("I:3", 34),
        ("POI:3", math.comb(6, 3)),
        ("POPI:3", 1 + 3 * math.comb(6, 3) // 2),
        ("brandt:c2,2", 9),
        ("brandt:triv,3", 10),
        ("null:5", 5),
        ("mono:3,4", 6),
        ("cyc:6", 6),
        ("sym:4", 24),
        ("fb2", 6),
    ],
)
def test_build_family_sizes(text, size):
    spec = parse_family(text)
    assert spec.expected_size() == size
    assert build_family(spec).size == size


def test_rees_matrix_size(rectangular_band):
    assert rectangular_band.size == 6


def test_built_families_are_associative(family):
    for text in ("T:3", "POPI:3", "brandt:c2,2", "mono:2,3", "fb2"):
        table = family(text)
        flat = [entry for row in table.rows for entry in row]
        validate_table(table.size, flat)


def test_maps_compose_left_to_right(family):
    T2 = family("T:2")
    # index order follows the image tuples: [1,1], [1,2], [2,1], [2,2]
    const_1, identity, swap, const_2 = range(4)
    assert T2.mul(identity, swap) == swap
    assert T2.mul(swap, const_1) == const_1
    # apply the constant first, then the swap
    assert T2.mul(const_1, swap) == const_2


def test_size_cap_is_enforced():
    with pytest.raises(SizeCapExceeded) as info:
        build_family(FamilySpec.full_transformation(5), size_cap=1000)
    assert info.value.size == 3125


@pytest.mark.parametrize("text", ["Q:3", "T3", "mono:3", "brandt:q2,2", "null:x"])
def test_parse_family_rejects_malformed_strings(text):
    with pytest.raises(FamilyParseError):
        parse_family(text)


def test_parse_family_kinds():
    assert parse_family("I:4").kind == FamilyKind.SYMMETRIC_INVERSE
    assert parse_family("brandt:s3,2").group.size == 6
    assert parse_family("fb2").kind == FamilyKind.FREE_BAND_2


def test_text_and_json_formats_load_the_same_table(family):
    table = family("brandt:triv,2")
    from_json = loads_table(dumps_table(table))
    from_text = loads_table(dumps_table(table, fmt="text"))
    assert from_json == table
    assert from_text == table
    assert json.loads(dumps_table(table))["size"] == 5


def test_text_format_rejects_short_rows():
    with pytest.raises(TableValidationError):
        loads_table("2\n0 0\n0\n")


def test_closure_of_generator_in_monogenic(family):
    S = family("mono:3,4")
    generated = closure(S, ElementSet.of(S.size, [0]))
    assert generated.members() == list(range(S.size))
    assert generated.closed


def test_closure_of_square_of_generator(family):
    S = family("mono:3,4")
    # s^2 generates {s^2, s^4, s^6}
    generated = closure(S, ElementSet.of(S.size, [1]))
    assert 0 not in generated
    assert is_closed(S, generated)


@pytest.mark.parametrize("m, r", [(1, 1), (1, 6), (3, 4), (5, 2)])
def test_index_and_period_of_the_generator(family, m, r):
    S = family(f"mono:{m},{r}")
    assert monogenic_index_period(S, 0) == (m, r)


def test_index_and_period_of_other_powers(family):
    S = family("mono:3,4")
    # s^2 has powers s^2, s^4, s^6, s^4
    assert monogenic_index_period(S, 1) == (2, 2)
    assert monogenic_index_period(family("cyc:6"), 2) == (1, 3)
    with pytest.raises(ValueError):
        monogenic_index_period(S, S.size)


@pytest.mark.parametrize("text", ["T:3", "I:2", "brandt:c2,2", "fb2", "mono:4,6"])
@pytest.mark.parametrize("seed", range(5))
def test_closure_is_closed_and_idempotent(family, text, seed):
    S = family(text)
    rng = random.Random(seed)
    members = rng.sample(range(S.size), rng.randint(1, min(4, S.size)))
    start = ElementSet.of(S.size, members)
    generated = closure(S, start)
    assert start.issubset(generated)
    assert is_closed(S, generated)
    assert closure(S, generated) == generated


def test_subsemigroup_table_rejects_open_subset(family):
    S = family("cyc:4")
    with pytest.raises(NotClosed):
        subsemigroup_table(S, ElementSet.of(S.size, [1]))


def test_subsemigroup_table_reindexes_members(family):
    S = family("cyc:4")
    sub, index_map = subsemigroup_table(S, ElementSet.of(S.size, [0, 2]))
    assert index_map == [0, 2]
    assert sub.size == 2
    assert sub.mul(1, 1) == 0


def test_classify_named_families(family):
    inverse = classify(family("I:2"))
    assert inverse.inverse and inverse.regular
    assert not inverse.group

    null = classify(family("null:4"))
    assert null.null and not null.regular

    band = classify(family("fb2"))
    assert band.band and band.completely_regular

    group = classify(family("sym:3"))
    assert group.group and group.inverse and group.completely_regular

    T3 = classify(family("T:3"))
    assert T3.regular and not T3.inverse


def test_greens_counts_of_rectangular_band(rectangular_band):
    counts = greens_structure(rectangular_band).class_counts()
    assert counts == {"L": 3, "R": 2, "H": 6, "J": 1}


def test_greens_structure_of_T3(family):
    greens = greens_structure(family("T:3"))
    assert greens.j_count == 3
    assert greens.h_count == 13
    assert greens.l_count + greens.r_count == 12


def test_j_order_of_brandt(family):
    S = family("brandt:triv,2")
    greens = greens_structure(S)
    assert greens.j_count == 2
    zero = greens.j_class(S.size - 1)
    top = greens.j_class(0)
    assert greens.is_below(zero, top)
    assert greens.maximal_j_classes() == [top]


def test_principal_factor_of_brandt_top_class(family):
    S = family("brandt:c2,2")
    greens = greens_structure(S)
    top = greens.j_class(0)
    factor = principal_factor(S, top, greens)
    assert factor.size == 9
    assert (factor.product == S.product).all()


def test_h_class_group(family):
    S = family("brandt:c2,2")
    greens = greens_structure(S)
    group = h_class_group(S, greens, greens.j_class(0))
    assert group is not None and group.size == 2
    assert h_class_group(family("null:3"), greens_structure(family("null:3")), 1) is None


def test_ideals_are_unions_of_down_closed_classes(family):
    S = family("mono:3,2")
    found = ideals(S)
    # the kernel {s^3, s^4} and the chain of ideals above it
    assert [len(ideal) for ideal in found] == [2, 3, 4]
    assert all(is_ideal(S, ideal) for ideal in found)


def test_rees_quotient_collapses_ideal(family):
    S = family("brandt:triv,2")
    zero = ElementSet.of(S.size, [S.size - 1])
    quotient = rees_quotient(S, zero)
    assert (quotient.product == S.product).all()

    with pytest.raises(NotAnIdeal):
        rees_quotient(S, ElementSet.of(S.size, [0]))


def test_lattice_of_null_semigroup(family):
    lattice = enumerate_closed_subsets(family("null:4"))
    # every nonempty subset holding the zero
    assert len(lattice) == 8
    length, chain = lattice.longest_chain()
    assert length == 3
    assert len(chain) == 4


def test_lattice_budget(family):
    with pytest.raises(BudgetExceeded):
        enumerate_closed_subsets(family("null:12"), max_subsets=100)
