"""
Leagues: families of k-partitions and k-subsets with no transversal pairs.
"""

from typing import Any, List, Optional

from pydantic import BaseModel, model_validator

from .partitions import SetPartition, is_transversal


class League(BaseModel):
    """
    A league (P, S) of rank k on {1..n}.

    `content` is |P| * |S|; it is filled in when omitted and checked when
    given. Use `league_check` for the no-transversal property, which the
    model does not enforce so that invalid candidates can be represented.
    """

    n: int
    k: int
    interval: bool = False
    partitions: List[List[List[int]]]
    subsets: List[List[int]]
    content: Optional[int] = None

    @model_validator(mode="after")
    def check_shape(self) -> "League":
        if not 1 <= self.k <= self.n:
            raise ValueError(f"need 1 <= k <= n, got n={self.n}, k={self.k}")
        for subset in self.subsets:
            if len(subset) != self.k or len(set(subset)) != self.k:
                raise ValueError(f"{subset} is not a {self.k}-subset")
            if not all(1 <= p <= self.n for p in subset):
                raise ValueError(f"{subset} is not a subset of 1..{self.n}")
        for blocks in self.partitions:
            partition = SetPartition(tuple(tuple(b) for b in blocks))
            if partition.block_count != self.k or partition.n != self.n:
                raise ValueError(f"{blocks} is not a {self.k}-partition of 1..{self.n}")
            if self.interval and not partition.is_interval():
                raise ValueError(f"{blocks} is not an interval partition")

        expected = len(self.partitions) * len(self.subsets)
        if self.content is None:
            self.content = expected
        elif self.content != expected:
            raise ValueError(f"content {self.content} != |P| * |S| = {expected}")
        return self

    @classmethod
    def build(
        cls,
        n: int,
        k: int,
        partitions: List[SetPartition],
        subsets: List[Any],
        interval: bool = False,
    ) -> "League":
        return cls(
            n=n,
            k=k,
            interval=interval,
            partitions=[p.to_lists() for p in partitions],
            subsets=[sorted(s) for s in subsets],
        )

    @classmethod
    def empty(cls, n: int, k: int, interval: bool = False) -> "League":
        return cls(n=n, k=k, interval=interval, partitions=[], subsets=[])

    def partition_objects(self) -> List[SetPartition]:
        return [SetPartition(tuple(tuple(b) for b in blocks)) for blocks in self.partitions]


def league_check(league: League) -> bool:
    """True when no subset of the league is a transversal of any of its partitions."""
    partitions = league.partition_objects()
    return not any(
        is_transversal(subset, partition)
        for partition in partitions
        for subset in league.subsets
    )


def dumps_league(league: League) -> str:
    return league.model_dump_json()


def loads_league(text: str) -> League:
    return League.model_validate_json(text)
