import pytest

from semichain.formulas.tables import (
    TABLE_IDS,
    free_band_table,
    inverse_table,
    league_table,
    reproduce_table,
)
from semichain.helpers.published_values import KNOWN_F, KNOWN_FSTAR


def _known(n, k):
    return KNOWN_F.get((n, k))


def test_free_band_table_matches():
    report = free_band_table()
    assert report.cell("l(B_n)", "5") == "3323778"
    assert report.cell("l(B_n)", "6") == "33022614177128"
    assert report.discrepancies == []


def test_inverse_table_cells():
    report = inverse_table()
    assert report.table == 3
    assert report.cell("l(POPI_n)", "9") == "109987"
    assert report.cell("l(I_n)", "4") == "116"
    assert report.columns[0] == "S"
    assert len(report.rows) == 4


def test_starred_inverse_table_reports_discrepancies():
    report = inverse_table(starred=True)
    assert report.table == 4
    assert report.cell("l*(POI_n)", "1") == "1"
    found = {(d.row, d.column): d for d in report.discrepancies}
    assert ("l*(I_n)", "3") in found
    assert found[("l*(I_n)", "3")].published == 15
    assert found[("l*(I_n)", "3")].computed == 16


def test_league_table_layout_and_bound_discrepancy():
    report = league_table(exact_value=_known)
    assert report.table == 1
    assert report.columns[:3] == ["n", "Total", "k=2"]
    assert report.cell("5", "k=3") == "28,28"
    assert report.cell("6", "Total") == "5382,5130"
    # the default run leaves out the long search at n = 7, k = 4
    assert report.cell("7", "k=4").startswith("?,")
    assert report.cell("7", "Total").startswith("?,")

    bound_notes = {(d.row, d.column) for d in report.discrepancies if d.note == "bound"}
    assert ("4", "k=3") in bound_notes


@pytest.mark.parametrize("interval, known", [(False, KNOWN_F), (True, KNOWN_FSTAR)])
def test_league_tables_by_search_match_published_optima(interval, known):
    report = league_table(interval=interval, max_n=6)
    for n in range(3, 7):
        for k in range(2, n):
            exact, _ = report.cell(str(n), f"k={k}").split(",")
            assert int(exact) == known[(n, k)]
    assert not any(d.note == "exact" for d in report.discrepancies)


def test_league_table_long_run_fills_every_cell():
    report = league_table(long_run=True, exact_value=_known)
    assert report.cell("7", "k=4") == "1350,1350"
    assert not any(d.note == "exact" for d in report.discrepancies)


@pytest.mark.slow
def test_interval_table_by_search():
    report = reproduce_table(2)
    assert report.cell("7", "k=4") == "150,150"
    assert report.cell("4", "Total") == "5,5"
    assert not any(d.note == "exact" for d in report.discrepancies)


def test_tsv_rendering():
    text = free_band_table(max_n=3).to_tsv()
    assert text.splitlines() == ["S\t1\t2\t3", "l(B_n)\t0\t4\t34"]


def test_reproduce_table_rejects_unknown_id():
    assert TABLE_IDS == (1, 2, 3, 4, 5)
    with pytest.raises(ValueError):
        reproduce_table(6)
