"""
Value objects of the exact searches.
"""

from enum import Enum
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field, model_validator

from ..finsemi.table import ElementSet, mask_members
from ..helpers.defaults import DEFAULT_CONFIG


class CertificateKind(str, Enum):
    SUBSEMIGROUP = "subsemigroup"
    INVERSE_SUBSEMIGROUP = "inverseSubsemigroup"


class ChainCertificate(BaseModel):
    """
    A chain of closed subsets witnessing a length.

    Serialises as `{"kind": ..., "length": L, "subsets": [[...], ...]}` with
    0-based element indices; `length` is always len(subsets) - 1.
    """

    kind: CertificateKind = CertificateKind.SUBSEMIGROUP
    length: Optional[int] = None
    subsets: List[List[int]]

    @model_validator(mode="after")
    def check_length(self) -> "ChainCertificate":
        expected = len(self.subsets) - 1
        if self.length is None:
            self.length = expected
        elif self.length != expected:
            raise ValueError(
                f"length {self.length} does not match {len(self.subsets)} subsets"
            )
        return self

    @classmethod
    def from_masks(
        cls, masks: List[int], kind: CertificateKind = CertificateKind.SUBSEMIGROUP
    ) -> "ChainCertificate":
        return cls(kind=kind, subsets=[mask_members(mask) for mask in masks])

    def element_sets(self, size: int) -> List[ElementSet]:
        return [ElementSet.of(size, subset) for subset in self.subsets]


class SearchBudget(BaseModel):
    """Limits of an exhaustive search."""

    max_subsemigroups: int = Field(
        default=DEFAULT_CONFIG["budget"]["max_subsemigroups"], ge=1
    )
    max_millis: int = Field(default=DEFAULT_CONFIG["budget"]["max_millis"], ge=1)
    threads: int = Field(default=1, ge=1)

    @classmethod
    def from_config(cls, config: Optional[Dict[str, Any]] = None) -> "SearchBudget":
        """Read the `budget` sub-dict of a graph configuration."""
        config = config or {}
        budget = dict(config.get("budget") or {})
        if config.get("threads") is not None:
            budget.setdefault("threads", config["threads"])
        return cls(**{key: value for key, value in budget.items() if value is not None})
