"""
Published values of league optima and chain lengths.

Each league table maps n to a row of (exact, bound) pairs: first the row
total, then the ranks k = 2 .. n-1. The general table totals weight each
rank by k!, the interval table totals do not.
"""

from typing import Dict, List, Tuple

Cell = Tuple[int, int]

LEAGUE_TABLE: Dict[int, List[Cell]] = {
    2: [(0, 0)],
    3: [(2, 2), (1, 1)],
    4: [(24, 18), (3, 3), (3, 2)],
    5: [(330, 326), (9, 7), (28, 28), (6, 6)],
    6: [(5382, 5130), (21, 15), (150, 150), (125, 125), (12, 10)],
    7: [(98250, 93782), (45, 31), (760, 620), (1350, 1350), (390, 390), (20, 15)],
}

INTERVAL_LEAGUE_TABLE: Dict[int, List[Cell]] = {
    2: [(0, 0)],
    3: [(1, 1), (1, 1)],
    4: [(5, 5), (3, 3), (2, 2)],
    5: [(22, 21), (6, 6), (12, 12), (4, 3)],
    6: [(88, 84), (12, 10), (40, 40), (30, 30), (6, 4)],
    7: [(345, 330), (20, 15), (100, 100), (150, 150), (66, 60), (9, 5)],
}

# named inverse monoids, n = 1 .. 9
INVERSE_LENGTHS: Dict[str, List[int]] = {
    "I": [1, 6, 25, 116, 722, 5956, 59243, 667500, 8296060],
    "Istar": [0, 2, 17, 180, 3298, 88431, 3064050, 130905678, 6732227475],
    "POI": [1, 5, 17, 53, 167, 550, 1899, 6809, 25067],
    "POPI": [1, 6, 24, 92, 363, 1483, 6191, 26077, 109987],
}

INVERSE_STAR_LENGTHS: Dict[str, List[int]] = {
    "I": [1, 5, 15, 39, 96, 229, 533, 1217, 2742],
    "Istar": [0, 2, 11, 49, 223, 1065, 5337, 28231, 158939],
    "POI": [1, 4, 11, 26, 57, 120, 247, 502, 1013],
    "POPI": [1, 6, 17, 44, 97, 208, 429, 884, 1814],
}

# free band lengths, n = 1 .. 6
FREE_BAND_LENGTHS: List[int] = [0, 4, 34, 1264, 3323778, 33022614177128]


def _rank_cells(table: Dict[int, List[Cell]], column: int) -> Dict[Tuple[int, int], int]:
    return {
        (n, k): row[k - 1][column]
        for n, row in table.items()
        for k in range(2, len(row) + 1)
    }


KNOWN_F: Dict[Tuple[int, int], int] = _rank_cells(LEAGUE_TABLE, 0)
KNOWN_FSTAR: Dict[Tuple[int, int], int] = _rank_cells(INTERVAL_LEAGUE_TABLE, 0)
PUBLISHED_F_BOUNDS: Dict[Tuple[int, int], int] = _rank_cells(LEAGUE_TABLE, 1)
PUBLISHED_FSTAR_BOUNDS: Dict[Tuple[int, int], int] = _rank_cells(INTERVAL_LEAGUE_TABLE, 1)
