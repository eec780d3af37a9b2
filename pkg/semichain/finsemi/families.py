"""
Constructors for the named families of finite semigroups.

Maps act on the right: the product f*g is "apply f, then g". Transformation
families are indexed by the lexicographic order of their image tuples, with
an undefined point sorting after every defined image.
"""

import itertools
import math
import re
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..helpers.defaults import DEFAULT_SIZE_CAP
from ..utils.errors import FamilyParseError, SizeCapExceeded, UnsupportedFamily
from ..utils.logging import get_logger
from .table import CayleyTable

logger = get_logger(__name__)


class FamilyKind(str, Enum):
    FULL_TRANSFORMATION = "FullTransformation"
    ORDER_PRESERVING = "OrderPreserving"
    SYMMETRIC_INVERSE = "SymmetricInverse"
    POI = "POI"
    POPI = "POPI"
    BRANDT = "Brandt"
    REES_MATRIX = "ReesMatrixOverGroup"
    NULL = "Null"
    CYCLIC_GROUP = "CyclicGroup"
    SYMMETRIC_GROUP = "SymmetricGroup"
    MONOGENIC = "Monogenic"
    FREE_BAND_2 = "FreeBand2"


_TRANSFORMATION_KINDS = {
    FamilyKind.FULL_TRANSFORMATION,
    FamilyKind.ORDER_PRESERVING,
    FamilyKind.SYMMETRIC_INVERSE,
    FamilyKind.POI,
    FamilyKind.POPI,
    FamilyKind.SYMMETRIC_GROUP,
}

_SHORT_NAMES = {
    FamilyKind.FULL_TRANSFORMATION: "T",
    FamilyKind.ORDER_PRESERVING: "O",
    FamilyKind.SYMMETRIC_INVERSE: "I",
    FamilyKind.POI: "POI",
    FamilyKind.POPI: "POPI",
    FamilyKind.NULL: "Null",
    FamilyKind.CYCLIC_GROUP: "C",
    FamilyKind.SYMMETRIC_GROUP: "S",
}


@dataclass(frozen=True)
class FamilySpec:
    """
    A named semigroup family with its parameters.

    Only the fields relevant to `kind` are set; `__post_init__` checks them.
    Prefer the classmethod constructors, e.g. `FamilySpec.brandt(c2, 2)`.
    """

    kind: FamilyKind
    n: Optional[int] = None
    m: Optional[int] = None
    r: Optional[int] = None
    group: Optional[CayleyTable] = None
    rows: Optional[int] = None
    cols: Optional[int] = None
    matrix: Optional[Tuple[Tuple[int, ...], ...]] = None

    def __post_init__(self):
        kind = self.kind
        if kind in _TRANSFORMATION_KINDS or kind in (
            FamilyKind.CYCLIC_GROUP,
            FamilyKind.BRANDT,
        ):
            _require_positive("n", self.n)
        if kind == FamilyKind.NULL:
            _require_positive("m", self.m)
        if kind == FamilyKind.MONOGENIC:
            _require_positive("m", self.m)
            _require_positive("r", self.r)
        if kind in (FamilyKind.BRANDT, FamilyKind.REES_MATRIX) and self.group is None:
            raise ValueError(f"{kind.value} needs a group table")
        if kind == FamilyKind.REES_MATRIX:
            _require_positive("rows", self.rows)
            _require_positive("cols", self.cols)
            if self.matrix is None or len(self.matrix) != self.cols or any(
                len(row) != self.rows for row in self.matrix
            ):
                raise ValueError(
                    f"sandwich matrix must have {self.cols} rows of {self.rows} entries"
                )
            if any(not 0 <= p < self.group.size for row in self.matrix for p in row):
                raise ValueError("sandwich matrix entries must be group indices")

    @classmethod
    def full_transformation(cls, n: int) -> "FamilySpec":
        return cls(FamilyKind.FULL_TRANSFORMATION, n=n)

    @classmethod
    def order_preserving(cls, n: int) -> "FamilySpec":
        return cls(FamilyKind.ORDER_PRESERVING, n=n)

    @classmethod
    def symmetric_inverse(cls, n: int) -> "FamilySpec":
        return cls(FamilyKind.SYMMETRIC_INVERSE, n=n)

    @classmethod
    def poi(cls, n: int) -> "FamilySpec":
        return cls(FamilyKind.POI, n=n)

    @classmethod
    def popi(cls, n: int) -> "FamilySpec":
        return cls(FamilyKind.POPI, n=n)

    @classmethod
    def brandt(cls, group: CayleyTable, n: int) -> "FamilySpec":
        return cls(FamilyKind.BRANDT, n=n, group=group)

    @classmethod
    def rees_matrix(
        cls, group: CayleyTable, rows: int, cols: int, matrix: Sequence[Sequence[int]]
    ) -> "FamilySpec":
        return cls(
            FamilyKind.REES_MATRIX,
            group=group,
            rows=rows,
            cols=cols,
            matrix=tuple(tuple(int(p) for p in row) for row in matrix),
        )

    @classmethod
    def null(cls, m: int) -> "FamilySpec":
        return cls(FamilyKind.NULL, m=m)

    @classmethod
    def cyclic_group(cls, n: int) -> "FamilySpec":
        return cls(FamilyKind.CYCLIC_GROUP, n=n)

    @classmethod
    def symmetric_group(cls, n: int) -> "FamilySpec":
        return cls(FamilyKind.SYMMETRIC_GROUP, n=n)

    @classmethod
    def monogenic(cls, m: int, r: int) -> "FamilySpec":
        return cls(FamilyKind.MONOGENIC, m=m, r=r)

    @classmethod
    def free_band_2(cls) -> "FamilySpec":
        return cls(FamilyKind.FREE_BAND_2)

    @property
    def name(self) -> str:
        kind = self.kind
        if kind in _SHORT_NAMES:
            return f"{_SHORT_NAMES[kind]}_{self.n if self.n is not None else self.m}"
        if kind == FamilyKind.BRANDT:
            return f"B({self.group.name or 'G'},{self.n})"
        if kind == FamilyKind.REES_MATRIX:
            return f"M({self.group.name or 'G'};{self.rows},{self.cols})"
        if kind == FamilyKind.MONOGENIC:
            return f"Mono({self.m},{self.r})"
        return "FB_2"

    def expected_size(self) -> int:
        """The order of the family member, computed without building it."""
        kind, n = self.kind, self.n
        if kind == FamilyKind.FULL_TRANSFORMATION:
            return n**n
        if kind == FamilyKind.ORDER_PRESERVING:
            return math.comb(2 * n - 1, n)
        if kind == FamilyKind.SYMMETRIC_INVERSE:
            return sum(math.comb(n, i) ** 2 * math.factorial(i) for i in range(n + 1))
        if kind == FamilyKind.POI:
            return math.comb(2 * n, n)
        if kind == FamilyKind.POPI:
            return 1 + n * math.comb(2 * n, n) // 2
        if kind == FamilyKind.BRANDT:
            return n * n * self.group.size + 1
        if kind == FamilyKind.REES_MATRIX:
            return self.rows * self.group.size * self.cols
        if kind == FamilyKind.NULL:
            return self.m
        if kind == FamilyKind.CYCLIC_GROUP:
            return n
        if kind == FamilyKind.SYMMETRIC_GROUP:
            return math.factorial(n)
        if kind == FamilyKind.MONOGENIC:
            return self.m + self.r - 1
        if kind == FamilyKind.FREE_BAND_2:
            return 6
        raise UnsupportedFamily(f"unknown family kind {kind!r}")


def _require_positive(field: str, value: Optional[int]) -> None:
    if value is None or value < 1:
        raise ValueError(f"family parameter `{field}` must be a positive integer, got {value!r}")


# ---------------------------------------------------------------------------
# transformation-like families
# ---------------------------------------------------------------------------


def _is_cyclic_rotation_of_increasing(images: Sequence[int]) -> bool:
    descents = sum(
        1 for i in range(len(images)) if images[i] > images[(i + 1) % len(images)]
    )
    return descents <= 1


def _partial_maps(n: int, images_for) -> List[Tuple[int, ...]]:
    """Partial maps with domain any subset, images chosen by `images_for(d)`."""
    maps = []
    for d in range(n + 1):
        for domain in itertools.combinations(range(n), d):
            for images in images_for(d):
                image_map = [n] * n
                for point, image in zip(domain, images):
                    image_map[point] = image
                maps.append(tuple(image_map))
    return maps


def _transformation_elements(spec: FamilySpec) -> List[Tuple[int, ...]]:
    """Image tuples of the family's maps; the value n stands for "undefined"."""
    n, kind = spec.n, spec.kind
    if kind == FamilyKind.FULL_TRANSFORMATION:
        return list(itertools.product(range(n), repeat=n))
    if kind == FamilyKind.ORDER_PRESERVING:
        return list(itertools.combinations_with_replacement(range(n), n))
    if kind == FamilyKind.SYMMETRIC_GROUP:
        return list(itertools.permutations(range(n)))
    if kind == FamilyKind.SYMMETRIC_INVERSE:
        return _partial_maps(n, lambda d: itertools.permutations(range(n), d))
    if kind == FamilyKind.POI:
        return _partial_maps(n, lambda d: itertools.combinations(range(n), d))
    if kind == FamilyKind.POPI:
        return _partial_maps(
            n,
            lambda d: (
                images
                for images in itertools.permutations(range(n), d)
                if _is_cyclic_rotation_of_increasing(images)
            ),
        )
    raise UnsupportedFamily(f"{kind.value} is not a transformation family")


def _map_label(images: Sequence[int], n: int) -> str:
    return "[" + ",".join("-" if x == n else str(x + 1) for x in images) + "]"


def transformation_table(
    maps: Sequence[Sequence[int]], n: int
) -> Tuple[np.ndarray, List[Tuple[int, ...]]]:
    """
    Multiplication table of a composition-closed set of (partial) maps.

    Args:
        maps: image tuples over {0..n-1}, with n meaning "undefined".
        n: the number of points.

    Returns:
        the table and the maps in index order (sorted by image tuple).
    """
    ordered = np.array(sorted(set(tuple(m) for m in maps)), dtype=np.int64).reshape(-1, n)
    count = len(ordered)
    weights = (n + 1) ** np.arange(n - 1, -1, -1, dtype=np.int64)
    keys = ordered @ weights

    # undefined stays undefined
    extended = np.concatenate([ordered, np.full((count, 1), n, dtype=np.int64)], axis=1)
    table = np.empty((count, count), dtype=np.int64)
    for f in range(count):
        # row g of the composite is g(f(i)) over i, for every g at once
        composite_keys = extended[:, ordered[f]] @ weights
        found = np.searchsorted(keys, composite_keys)
        if (found >= count).any() or (keys[np.minimum(found, count - 1)] != composite_keys).any():
            raise UnsupportedFamily("map set is not closed under composition")
        table[f] = found
    return table, [tuple(int(x) for x in row) for row in ordered]


# ---------------------------------------------------------------------------
# everything else
# ---------------------------------------------------------------------------


def _cyclic_table(n: int) -> np.ndarray:
    return np.add.outer(np.arange(n), np.arange(n)) % n


def _brandt_table(group: CayleyTable, n: int) -> Tuple[np.ndarray, List[str]]:
    order = group.size
    zero = n * n * order

    def index(i: int, g: int, j: int) -> int:
        return (i * order + g) * n + j

    table = np.full((zero + 1, zero + 1), zero, dtype=np.int64)
    labels = [""] * (zero + 1)
    triples = list(itertools.product(range(n), range(order), range(n)))
    for i, g, j in triples:
        labels[index(i, g, j)] = f"({i + 1},{group.label(g)},{j + 1})"
        for k, h, l in triples:
            if j == k:
                table[index(i, g, j), index(k, h, l)] = index(i, group.mul(g, h), l)
    labels[zero] = "0"
    return table, labels


def _rees_matrix_table(spec: FamilySpec) -> Tuple[np.ndarray, List[str]]:
    group, rows, cols, matrix = spec.group, spec.rows, spec.cols, spec.matrix
    order = group.size

    def index(i: int, g: int, lam: int) -> int:
        return (i * order + g) * cols + lam

    size = rows * order * cols
    table = np.empty((size, size), dtype=np.int64)
    labels = [""] * size
    triples = list(itertools.product(range(rows), range(order), range(cols)))
    for i, g, lam in triples:
        labels[index(i, g, lam)] = f"({i + 1},{group.label(g)},{lam + 1})"
        for j, h, mu in triples:
            middle = group.mul(group.mul(g, matrix[lam][j]), h)
            table[index(i, g, lam), index(j, h, mu)] = index(i, middle, mu)
    return table, labels


def _monogenic_table(m: int, r: int) -> np.ndarray:
    # element i is s^(i+1)
    exponents = np.arange(1, m + r)
    total = np.add.outer(exponents, exponents)
    reduced = np.where(total >= m + r, m + (total - m) % r, total)
    return reduced - 1


_FREE_BAND_2_LABELS = ["a", "b", "ab", "ba", "aba", "bab"]


def _free_band_2_table() -> np.ndarray:
    # a word of the free band on {a, b} is fixed by its first letter, last
    # letter and content; every product of two words has content {a, b}
    # unless both factors are the same generator
    first_last = [("a", "a"), ("b", "b"), ("a", "b"), ("b", "a"), ("a", "a"), ("b", "b")]
    full_content = {("a", "b"): 2, ("b", "a"): 3, ("a", "a"): 4, ("b", "b"): 5}
    table = np.empty((6, 6), dtype=np.int64)
    for x in range(6):
        for y in range(6):
            if x == y and x < 2:
                table[x, y] = x
            else:
                table[x, y] = full_content[(first_last[x][0], first_last[y][1])]
    return table


def build_family(spec: FamilySpec, size_cap: int = DEFAULT_SIZE_CAP) -> CayleyTable:
    """
    Build the multiplication table of a family member.

    Args:
        spec: the family and its parameters.
        size_cap: refuse to build anything with more elements than this.

    Returns:
        CayleyTable: the table, named after the family.

    Raises:
        SizeCapExceeded: the family member is larger than `size_cap`.
        UnsupportedFamily: the kind has no constructor.
    """
    size = spec.expected_size()
    if size > size_cap:
        raise SizeCapExceeded(spec.name, size, size_cap)

    logger.debug(f"Building {spec.name} with {size} elements")

    kind = spec.kind
    labels: Optional[List[str]] = None
    if kind in _TRANSFORMATION_KINDS:
        table, maps = transformation_table(_transformation_elements(spec), spec.n)
        labels = [_map_label(images, spec.n) for images in maps]
    elif kind == FamilyKind.CYCLIC_GROUP:
        table = _cyclic_table(spec.n)
    elif kind == FamilyKind.BRANDT:
        table, labels = _brandt_table(spec.group, spec.n)
    elif kind == FamilyKind.REES_MATRIX:
        table, labels = _rees_matrix_table(spec)
    elif kind == FamilyKind.NULL:
        table = np.zeros((spec.m, spec.m), dtype=np.int64)
    elif kind == FamilyKind.MONOGENIC:
        table = _monogenic_table(spec.m, spec.r)
        labels = [f"s^{i + 1}" for i in range(size)]
    elif kind == FamilyKind.FREE_BAND_2:
        table = _free_band_2_table()
        labels = list(_FREE_BAND_2_LABELS)
    else:
        raise UnsupportedFamily(f"no constructor for {kind.value}")

    if len(table) != size:
        raise UnsupportedFamily(
            f"{spec.name}: built {len(table)} elements, expected {size}"
        )
    return CayleyTable(table, labels=labels, name=spec.name)


# ---------------------------------------------------------------------------
# the command line mini-grammar
# ---------------------------------------------------------------------------

_GROUP_PATTERN = re.compile(r"^(triv|c(\d+)|s(\d+))$")


def parse_group(text: str, size_cap: int = DEFAULT_SIZE_CAP) -> CayleyTable:
    """
    Build a group from `triv`, `c<k>` or `s<k>`.
    """
    match = _GROUP_PATTERN.match(text.strip().lower())
    if not match:
        raise FamilyParseError(f"unknown group `{text}`; use triv, c<k> or s<k>")
    if match.group(1) == "triv":
        spec = FamilySpec.cyclic_group(1)
    elif match.group(2) is not None:
        spec = FamilySpec.cyclic_group(int(match.group(2)))
    else:
        spec = FamilySpec.symmetric_group(int(match.group(3)))
    try:
        return build_family(spec, size_cap)
    except ValueError as e:
        raise FamilyParseError(f"invalid group `{text}`") from e


def parse_family(text: str, size_cap: int = DEFAULT_SIZE_CAP) -> FamilySpec:
    """
    Parse the family mini-grammar used on the command line.

    Accepted forms: `T:n`, `O:n`, `I:n`, `POI:n`, `POPI:n`,
    `brandt:<group>,<n>`, `null:m`, `mono:m,r`, `cyc:n`, `sym:n`, `fb2`.

    Raises:
        FamilyParseError: on anything else.
    """
    source = text.strip()
    if source.lower() == "fb2":
        return FamilySpec.free_band_2()

    head, sep, tail = source.partition(":")
    if not sep:
        raise FamilyParseError(f"family `{text}` has no `:` separator")
    args = [arg.strip() for arg in tail.split(",")]
    head = head.strip()

    simple = {
        "T": FamilySpec.full_transformation,
        "O": FamilySpec.order_preserving,
        "I": FamilySpec.symmetric_inverse,
        "POI": FamilySpec.poi,
        "POPI": FamilySpec.popi,
        "null": FamilySpec.null,
        "cyc": FamilySpec.cyclic_group,
        "sym": FamilySpec.symmetric_group,
    }
    try:
        if head in simple:
            if len(args) != 1:
                raise FamilyParseError(f"`{head}` takes one parameter, got `{tail}`")
            return simple[head](int(args[0]))
        if head == "mono":
            if len(args) != 2:
                raise FamilyParseError(f"`mono` takes m,r, got `{tail}`")
            return FamilySpec.monogenic(int(args[0]), int(args[1]))
        if head == "brandt":
            if len(args) != 2:
                raise FamilyParseError(f"`brandt` takes <group>,<n>, got `{tail}`")
            return FamilySpec.brandt(parse_group(args[0], size_cap), int(args[1]))
    except ValueError as e:
        raise FamilyParseError(f"invalid family parameters in `{text}`") from e

    raise FamilyParseError(f"unknown family `{head}` in `{text}`")
