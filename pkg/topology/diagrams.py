import logging
import math
from typing import Iterable, List, Literal, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_serializer, field_validator, model_validator

from utils.errors import EpsMaxMismatch, MixedDimensions, NonFinitePair

logger = logging.getLogger(__name__)

ESSENTIAL = "inf"


class PersistencePair(BaseModel):
    """A homology class born at `birth` and dying at `death` (None: never dies, ESSENTIAL)."""

    model_config = ConfigDict(frozen=True)

    dim: Literal[0, 1]
    birth: float = Field(ge=0)
    death: Optional[float] = None

    @field_validator("death", mode="before")
    @classmethod
    def _parse_essential(cls, value):
        if isinstance(value, str) and value.strip().lower() == ESSENTIAL:
            return None
        return value

    @field_serializer("death")
    def _dump_essential(self, death: Optional[float]):
        return ESSENTIAL if death is None else death

    @model_validator(mode="after")
    def _check_order(self):
        if self.death is not None and self.death < self.birth:
            raise ValueError(f"death {self.death} precedes birth {self.birth}")
        return self

    @property
    def is_essential(self) -> bool:
        return self.death is None

    @property
    def is_zero_persistence(self) -> bool:
        return self.death is not None and self.death == self.birth

    def persistence(self, eps_max: float) -> float:
        """Lifetime; essential classes live until the truncation scale."""
        return (eps_max if self.death is None else self.death) - self.birth

    def sort_key(self) -> Tuple[int, float, float]:
        return self.dim, self.birth, math.inf if self.death is None else self.death


class PersistenceDiagram(BaseModel):
    eps_max: float = Field(ge=0)
    pairs: List[PersistencePair] = []

    def __len__(self) -> int:
        return len(self.pairs)

    @property
    def dims(self) -> set:
        return {p.dim for p in self.pairs}

    def restrict(self, dim: int) -> "PersistenceDiagram":
        return PersistenceDiagram(eps_max=self.eps_max, pairs=[p for p in self.pairs if p.dim == dim])

    def sorted_pairs(self) -> List[PersistencePair]:
        return sorted(self.pairs, key=PersistencePair.sort_key)

    def canonical(self) -> "PersistenceDiagram":
        """Same multiset in the stable (dim, birth, death) order used for serialization."""
        return PersistenceDiagram(eps_max=self.eps_max, pairs=self.sorted_pairs())

    def without_zero_persistence(self) -> "PersistenceDiagram":
        return PersistenceDiagram(eps_max=self.eps_max, pairs=[p for p in self.pairs if not p.is_zero_persistence])

    def finitized(self) -> "PersistenceDiagram":
        """Replace every ESSENTIAL death by the diagram's truncation scale."""
        pairs = [
            p.model_copy(update={"death": self.eps_max}) if p.is_essential else p
            for p in self.pairs
        ]
        return PersistenceDiagram(eps_max=self.eps_max, pairs=pairs)

    def points(self) -> np.ndarray:
        """(k, 2) array of finite (birth, death) rows, in sorted order."""
        if any(p.is_essential for p in self.pairs):
            raise NonFinitePair()
        pairs = self.sorted_pairs()
        return np.array([(p.birth, p.death) for p in pairs], dtype=np.float64).reshape(len(pairs), 2)

    def as_tuples(self) -> List[Tuple[int, float, float]]:
        return [p.sort_key() for p in self.sorted_pairs()]


def single_dimension(*diagrams: PersistenceDiagram) -> Optional[int]:
    """The one homology dimension shared by all diagrams (None if all are empty)."""
    dims = set()
    for d in diagrams:
        dims |= d.dims
    if len(dims) > 1:
        raise MixedDimensions(dims)
    return next(iter(dims), None)


def finitize_common(x: PersistenceDiagram, y: PersistenceDiagram) -> Tuple[PersistenceDiagram, PersistenceDiagram]:
    """Finitize two diagrams from the same pipeline run; they must share eps_max."""
    if x.eps_max != y.eps_max:
        raise EpsMaxMismatch(x.eps_max, y.eps_max)
    return x.finitized(), y.finitized()


def persistent_betti(d: PersistenceDiagram, dim: int, threshold: float) -> int:
    """Number of dimension-`dim` classes whose lifetime strictly exceeds `threshold`."""
    if threshold < 0:
        raise ValueError(f"threshold must be nonnegative, got {threshold}")
    return sum(1 for p in d.pairs if p.dim == dim and p.persistence(d.eps_max) > threshold)


def from_tuples(rows: Iterable[Tuple[int, float, Optional[float]]], eps_max: float) -> PersistenceDiagram:
    return PersistenceDiagram(
        eps_max=eps_max,
        pairs=[PersistencePair(dim=dim, birth=birth, death=death) for dim, birth, death in rows],
    )
