"""
Base Bound Interface - Bound kinds, validity metadata and the abstract evaluator
"""

import math
from abc import ABC, abstractmethod
from enum import Enum
from typing import Any, Dict

import numpy as np
from pydantic import BaseModel, ConfigDict

from errors import DomainError
from reference.base import ArrayLike, as_finite_array, as_output


class ValidityInterval(BaseModel):
    """Closed x-interval on which a bound's inequality is claimed."""

    model_config = ConfigDict(frozen=True)

    lower: float = 0.0
    upper: float = math.inf

    def contains(self, x: ArrayLike) -> np.ndarray:
        """Element-wise membership test."""
        arr = np.asarray(x, dtype=np.float64)
        return (arr >= self.lower) & (arr <= self.upper)

    def clip(self, lower: float, upper: float) -> tuple[float, float]:
        """Intersect [lower, upper] with this interval."""
        return max(lower, self.lower), min(upper, self.upper)


class BoundInfo(BaseModel):
    """Descriptive metadata for one bound formula."""

    model_config = ConfigDict(frozen=True)

    symbol: str
    citation: str
    guaranteed_upper_bound: bool
    validity: ValidityInterval = ValidityInterval()


class BoundKind(str, Enum):
    """The nine closed-form formulas; values double as CLI names."""

    POLYA = "polya"
    KOUBA = "kouba"
    ALZER = "alzer"
    ABREU = "abreu"
    NEUMANN = "neumann"
    YANG = "yang"
    BERCU = "bercu"
    EIDOUS = "eidous"
    EIDOUS_STAR = "eidous_star"

    @property
    def info(self) -> BoundInfo:
        return BOUND_INFO[self]

    @property
    def guaranteed_upper_bound(self) -> bool:
        return self.info.guaranteed_upper_bound

    @property
    def validity_interval(self) -> ValidityInterval:
        return self.info.validity

    @property
    def symbol(self) -> str:
        return self.info.symbol


BOUND_INFO: Dict[BoundKind, BoundInfo] = {
    BoundKind.POLYA: BoundInfo(symbol="PO", citation="Polya (1949)", guaranteed_upper_bound=True),
    BoundKind.KOUBA: BoundInfo(symbol="KO", citation="Kouba (2006)", guaranteed_upper_bound=True),
    BoundKind.ALZER: BoundInfo(symbol="AL", citation="Alzer (2010)", guaranteed_upper_bound=True),
    BoundKind.ABREU: BoundInfo(symbol="AB", citation="Abreu (2012)", guaranteed_upper_bound=True),
    BoundKind.NEUMANN: BoundInfo(symbol="NE", citation="Neuman (2013)", guaranteed_upper_bound=True),
    BoundKind.YANG: BoundInfo(symbol="YA", citation="Yang et al. (2018)", guaranteed_upper_bound=True),
    # 0 <= y <= 4.418 with y = x / sqrt(2)
    BoundKind.BERCU: BoundInfo(
        symbol="BE",
        citation="Bercu (2020)",
        guaranteed_upper_bound=True,
        validity=ValidityInterval(lower=0.0, upper=6.248),
    ),
    BoundKind.EIDOUS: BoundInfo(symbol="EI", citation="quartic-corrected Polya bound", guaranteed_upper_bound=True),
    # Approximation only: crosses Phi, neither an upper nor a lower bound
    BoundKind.EIDOUS_STAR: BoundInfo(
        symbol="EI*", citation="rounded-coefficient approximation", guaranteed_upper_bound=False
    ),
}


class BoundValue(BaseModel):
    """One bound evaluation with its out-of-validity flag."""

    kind: BoundKind
    x: float
    value: float
    out_of_validity: bool


class BaseBound(ABC):
    """Abstract base class for closed-form upper bounds of Phi."""

    kind: BoundKind

    def __init__(self):
        """Initialize bound with the metadata of its kind."""
        self.info = self.kind.info

    @property
    def name(self) -> str:
        return self.kind.value

    @abstractmethod
    def formula(self, x: np.ndarray) -> np.ndarray:
        """Evaluate the closed form on a validated non-negative array."""
        pass

    def evaluate(self, x: ArrayLike) -> ArrayLike:
        """
        Evaluate the bound.

        Args:
            x: Finite, non-negative scalar or array

        Returns:
            Bound value(s), float for scalar input

        Raises:
            DomainError: For non-finite or negative x
        """
        arr, scalar = as_finite_array(x)
        if np.any(arr < 0.0):
            raise DomainError(f"{self.name}: bounds are stated for x >= 0; reflect negative x explicitly")
        with np.errstate(over="ignore", under="ignore"):
            values = self.formula(arr)
        return as_output(np.asarray(values, dtype=np.float64), scalar)

    def out_of_validity(self, x: ArrayLike) -> np.ndarray:
        """True where x lies outside the validity interval."""
        return ~self.info.validity.contains(x)

    def get_bound_info(self) -> Dict[str, Any]:
        """Get information about this bound."""
        return {
            "name": self.name,
            "symbol": self.info.symbol,
            "citation": self.info.citation,
            "guaranteed_upper_bound": self.info.guaranteed_upper_bound,
            "validity": [self.info.validity.lower, self.info.validity.upper],
        }
