"""
Null subsemigroups of T_n built from leagues, and the chain certificates
they give.
"""

import itertools
from typing import List, NamedTuple, Tuple

from ..finsemi.families import FamilySpec, build_family
from ..finsemi.table import CayleyTable, ElementSet
from ..helpers.defaults import DEFAULT_SIZE_CAP
from ..oracle.models import ChainCertificate
from ..utils.errors import TableTooLarge
from ..utils.logging import get_logger
from .league import League, league_check
from .partitions import SetPartition

logger = get_logger(__name__)

MAX_CERTIFICATE_POINTS = 5


class LeagueCertificate(NamedTuple):
    table: CayleyTable
    null_part: ElementSet
    certificate: ChainCertificate


def map_index(images: Tuple[int, ...], n: int) -> int:
    """Index in the T_n table of the map with 0-based `images`."""
    index = 0
    for image in images:
        index = index * n + image
    return index


def _maps_with(partition: SetPartition, subset: List[int], n: int) -> List[int]:
    """Every map with kernel `partition` and image `subset`, as T_n indices."""
    indices = []
    for targets in itertools.permutations(subset):
        images = [0] * n
        for block, target in zip(partition.blocks, targets):
            for point in block:
                images[point - 1] = target - 1
        indices.append(map_index(tuple(images), n))
    return indices


def build_null_from_league(
    n: int,
    league: League,
    size_cap: int = DEFAULT_SIZE_CAP,
    max_points: int = MAX_CERTIFICATE_POINTS,
) -> LeagueCertificate:
    """
    The maps of T_n whose kernel is a partition of the league and whose
    image is one of its subsets, with the chain that adds them one at a time
    on top of the ideal of maps of rank below k.

    A product of two such maps has rank below k, since the image of the
    first is never a transversal of the kernel of the second; so every set
    on the chain is a subsemigroup.

    Raises:
        TableTooLarge: n exceeds `max_points`.
        ValueError: the league is for another n, has rank 1, or is invalid.
    """
    if n > max_points:
        raise TableTooLarge(
            f"T_{n} has {n ** n} elements; certificates are built up to n = {max_points}"
        )
    if league.n != n:
        raise ValueError(f"league is on {league.n} points, not {n}")
    if league.k < 2:
        raise ValueError("the ideal below rank 1 is empty; use k >= 2")
    if not league_check(league):
        raise ValueError("league has a subset that is a transversal of one of its partitions")

    table = build_family(FamilySpec.full_transformation(n), size_cap=size_cap)

    ideal = [
        index
        for index in range(table.size)
        if len(set(_images_of(index, n))) < league.k
    ]
    added: List[int] = []
    for partition in league.partition_objects():
        for subset in league.subsets:
            added.extend(_maps_with(partition, subset, n))
    added.sort()

    chain = [list(ideal)]
    current = set(ideal)
    for index in added:
        current.add(index)
        chain.append(sorted(current))

    logger.info(
        f"League of content {league.content} gives {len(added)} maps above "
        f"an ideal of {len(ideal)} in T_{n}"
    )
    return LeagueCertificate(
        table=table,
        null_part=ElementSet.of(table.size, added),
        certificate=ChainCertificate(subsets=chain),
    )


def _images_of(index: int, n: int) -> List[int]:
    images = []
    for _ in range(n):
        index, image = divmod(index, n)
        images.append(image)
    return images[::-1]
