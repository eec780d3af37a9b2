"""
Exact maximisation of league content by branch and bound.

The search runs over the subset side. For a family S of k-subsets the best
partition side is forced: every k-partition with no transversal in S. The
pairs (S, P) that are closed in both directions are enumerated with
Close-by-One, so each is visited once, and a subtree is cut when even its
most optimistic extension cannot reach the best content found so far.
"""

import threading
import time
from enum import Enum
from typing import List, Optional, Tuple

from pydantic import BaseModel, Field, model_validator

from ..utils.concurrency import run_concurrently
from ..utils.logging import get_logger
from .bounds import league_lb, league_lb_witness
from .league import League
from .partitions import enumerate_partitions, is_transversal, k_subsets

logger = get_logger(__name__)

# relabelling points preserves content, so one root subset suffices from here on
SYMMETRY_THRESHOLD = 7


class SearchStatus(str, Enum):
    EXACT = "exact"
    LOWER_BOUND_ONLY = "lowerBoundOnly"


class LeagueSearchResult(BaseModel):
    optimum: int = Field(ge=0)
    witness: League
    status: SearchStatus
    nodes_explored: int = Field(default=0, ge=0)

    @model_validator(mode="after")
    def check_witness(self) -> "LeagueSearchResult":
        if self.status == SearchStatus.EXACT and self.witness.content != self.optimum:
            raise ValueError(
                f"exact optimum {self.optimum} but witness content {self.witness.content}"
            )
        return self


class _SharedBest:
    """A best-so-far content shared by concurrent branches; it only grows."""

    def __init__(self, value: int):
        self._value = value
        self._lock = threading.Lock()

    @property
    def value(self) -> int:
        return self._value

    def offer(self, value: int) -> None:
        with self._lock:
            if value > self._value:
                self._value = value


class _Exhausted(Exception):
    pass


class _BranchSearch:
    """
    Depth-first Close-by-One below one node.

    Every node is a closed pair: `items` is a bitmask over subsets, `extent`
    a bitmask over partitions, and `items` holds every subset compatible
    with all of `extent`.
    """

    def __init__(
        self,
        compat: List[int],
        shared: _SharedBest,
        deadline: Optional[float],
        max_nodes: Optional[int],
    ):
        self.compat = compat
        self.shared = shared
        self.deadline = deadline
        self.max_nodes = max_nodes
        self.best_value = 0
        self.best: Optional[Tuple[int, int]] = None
        self.nodes = 0
        self.exhausted = False

    def closure(self, extent: int) -> int:
        items = 0
        for t, mask in enumerate(self.compat):
            if mask & extent == extent:
                items |= 1 << t
        return items

    def child(self, items: int, extent: int, t: int) -> Optional[Tuple[int, int]]:
        """The child reached by adding subset t, or None when not canonical."""
        new_extent = extent & self.compat[t]
        new_items = self.closure(new_extent)
        below = (1 << t) - 1
        if new_items & below != items & below:
            return None
        return new_items, new_extent

    def bound(self, items: int, extent: int, last: int) -> int:
        """
        Largest content reachable by adding subsets after `last`: adding j of
        them leaves at most the j-th largest |extent & compat[t]| partitions.
        """
        size = items.bit_count()
        values = []
        for t in range(last + 1, len(self.compat)):
            if items >> t & 1:
                continue
            value = (extent & self.compat[t]).bit_count()
            if value:
                values.append(value)
        values.sort(reverse=True)
        best = size * extent.bit_count()
        for j, value in enumerate(values, start=1):
            best = max(best, (size + j) * value)
        return best

    def tick(self) -> None:
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise _Exhausted()
        if self.deadline is not None and self.nodes % 256 == 0 and time.monotonic() > self.deadline:
            raise _Exhausted()

    def visit(self, items: int, extent: int) -> None:
        value = items.bit_count() * extent.bit_count()
        if value > self.best_value:
            self.best_value = value
            self.best = (items, extent)
            self.shared.offer(value)
            logger.debug(f"league content {value} found")

    def children(self, items: int, extent: int, last: int) -> List[Tuple[int, int, int]]:
        found = []
        for t in range(last + 1, len(self.compat)):
            if items >> t & 1:
                continue
            nxt = self.child(items, extent, t)
            if nxt is not None:
                found.append((nxt[0], nxt[1], t))
        return found

    def explore(self, items: int, extent: int, last: int) -> None:
        self.tick()
        self.visit(items, extent)
        threshold = max(self.best_value, self.shared.value)
        if self.bound(items, extent, last) < threshold:
            return
        for node in self.children(items, extent, last):
            self.explore(*node)

    def run(self, items: int, extent: int, last: int) -> "_BranchSearch":
        try:
            self.explore(items, extent, last)
        except _Exhausted:
            self.exhausted = True
        return self


def _compatibility(n: int, k: int, interval: bool):
    partitions = list(enumerate_partitions(n, k, interval=interval))
    subsets = k_subsets(n, k)
    compat = []
    for subset in subsets:
        mask = 0
        for index, partition in enumerate(partitions):
            if not is_transversal(subset, partition):
                mask |= 1 << index
        compat.append(mask)
    return partitions, subsets, compat


def max_content_exact(
    n: int,
    k: int,
    interval: bool = False,
    max_millis: Optional[int] = None,
    threads: int = 1,
    symmetry: Optional[bool] = None,
    max_nodes: Optional[int] = None,
    verbose: bool = False,
) -> LeagueSearchResult:
    """
    The largest content of a league of rank k on {1..n}, F(n, k), or F*(n, k)
    over interval partitions.

    Args:
        n, k: the league shape, 1 <= k <= n.
        interval: restrict the partition side to interval partitions.
        max_millis: wall-clock budget; None searches to completion.
        threads: root branches explored concurrently.
        symmetry: fix the first subset to {1..k}. Ignored for interval
            leagues, whose partitions are not closed under relabelling.
            None turns it on from n = 7.
        max_nodes: optional cap on explored nodes per branch.
        verbose: show a progress bar over the root branches.

    Returns:
        LeagueSearchResult: status `lowerBoundOnly` when a budget ran out,
        with the better of the best league found and the bound construction.
    """
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")

    if symmetry is None:
        symmetry = n >= SYMMETRY_THRESHOLD
    symmetry = symmetry and not interval

    partitions, subsets, compat = _compatibility(n, k, interval)
    full_extent = (1 << len(partitions)) - 1
    deadline = time.monotonic() + max_millis / 1000 if max_millis is not None else None
    seed = league_lb(n, k, interval)
    shared = _SharedBest(seed)

    def searcher() -> _BranchSearch:
        return _BranchSearch(compat, shared, deadline, max_nodes)

    # the root pair and its canonical children; with symmetry only the child
    # holding {1..k}, expanded one level so its subtrees can run in parallel
    root = searcher()
    root_items = root.closure(full_extent)
    root.visit(root_items, full_extent)
    frontier = root.children(root_items, full_extent, -1)
    if symmetry and frontier and frontier[0][2] == 0:
        anchor = frontier[0]
        root.visit(anchor[0], anchor[1])
        frontier = root.children(*anchor)
        root.nodes = 2
    else:
        root.nodes = 1

    logger.debug(
        f"league search n={n} k={k} interval={interval}: {len(subsets)} subsets, "
        f"{len(partitions)} partitions, {len(frontier)} root branches"
    )

    tasks = [
        (lambda node=node: searcher().run(*node)) for node in frontier
    ]
    branches = run_concurrently(tasks, threads=threads, desc="league branches", verbose=verbose)

    best_value, best = root.best_value, root.best
    for branch in branches:
        if branch.best_value > best_value:
            best_value, best = branch.best_value, branch.best
    nodes = root.nodes + sum(branch.nodes for branch in branches)
    exhausted = any(branch.exhausted for branch in branches)

    if best is None:
        witness = League.empty(n, k, interval)
    else:
        items, extent = best
        witness = League.build(
            n,
            k,
            [p for index, p in enumerate(partitions) if extent >> index & 1],
            [s for index, s in enumerate(subsets) if items >> index & 1],
            interval=interval,
        )

    if exhausted:
        logger.warning(
            f"league search n={n} k={k} stopped after {nodes} nodes; "
            f"reporting the lower bound {max(best_value, seed)}"
        )
        if seed > best_value:
            witness = league_lb_witness(n, k, interval)
            best_value = seed
        return LeagueSearchResult(
            optimum=best_value,
            witness=witness,
            status=SearchStatus.LOWER_BOUND_ONLY,
            nodes_explored=nodes,
        )

    if best_value < seed:
        # a complete search never finishes below a valid construction
        raise RuntimeError(f"league search ended at {best_value} below the bound {seed}")

    return LeagueSearchResult(
        optimum=best_value,
        witness=witness,
        status=SearchStatus.EXACT,
        nodes_explored=nodes,
    )
