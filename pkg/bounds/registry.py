"""
Bound Registry - Registration, lookup and the evaluation entry points
"""

from typing import Any, Dict, List, Optional, Union

import numpy as np
from loguru import logger

from errors import DomainError, UnknownBoundError
from reference.base import SQRT2, ArrayLike, as_finite_array, as_output
from .base import BaseBound, BoundKind, BoundValue
from .elementary import AlzerBound, BercuBound, NeumannBound, YangBound
from .mills import AbreuBound, KoubaBound
from .polya_family import EidousBound, EidousStarBound, PolyaBound

KindLike = Union[BoundKind, str]


class BoundRegistry:
    """Registry for managing available bounds."""

    def __init__(self):
        """Initialize bound registry."""
        self._bounds: Dict[BoundKind, BaseBound] = {}

    def register_bound(self, bound: BaseBound) -> None:
        """
        Register a bound in the registry.

        Args:
            bound: Bound instance to register; replaces any bound of the same kind
        """
        self._bounds[bound.kind] = bound

    def resolve(self, kind: KindLike) -> BoundKind:
        """
        Map a BoundKind or its CLI name to a registered kind.

        Raises:
            UnknownBoundError: If the name is not registered
        """
        if isinstance(kind, BoundKind):
            resolved: Optional[BoundKind] = kind
        else:
            try:
                resolved = BoundKind(str(kind).strip().lower().replace("-", "_"))
            except ValueError:
                resolved = None
        if resolved is None or resolved not in self._bounds:
            raise UnknownBoundError(f"Unknown bound '{kind}'. Available: {', '.join(self.list_bounds())}")
        return resolved

    def get_bound(self, kind: KindLike) -> BaseBound:
        """Get a bound by kind or name."""
        return self._bounds[self.resolve(kind)]

    def list_bounds(self) -> List[str]:
        """Get list of all registered bound names."""
        return [kind.value for kind in self._bounds]

    def guaranteed_kinds(self) -> List[BoundKind]:
        """Registered kinds that carry an upper-bound guarantee."""
        return [kind for kind in self._bounds if kind.guaranteed_upper_bound]

    def get_registry_info(self) -> Dict[str, Any]:
        """Get comprehensive information about the registry."""
        return {
            "total_bounds": len(self._bounds),
            "bounds": {kind.value: bound.get_bound_info() for kind, bound in self._bounds.items()},
        }


def create_default_registry() -> BoundRegistry:
    """Registry holding all nine formulas in table-column order."""
    registry = BoundRegistry()
    for bound in (
        KoubaBound(),
        AlzerBound(),
        AbreuBound(),
        NeumannBound(),
        YangBound(),
        BercuBound(),
        PolyaBound(),
        EidousBound(),
        EidousStarBound(),
    ):
        registry.register_bound(bound)
    return registry


default_registry = create_default_registry()


def eval_bound(kind: KindLike, x: ArrayLike) -> ArrayLike:
    """
    Evaluate a closed-form bound of Phi.

    Args:
        kind: BoundKind or CLI name
        x: Finite, non-negative scalar or array

    Returns:
        Bound value(s); outside the validity interval the formula is still evaluated

    Raises:
        UnknownBoundError: For an unregistered name
        DomainError: For negative or non-finite x
    """
    return default_registry.get_bound(kind).evaluate(x)


def eval_bound_checked(kind: KindLike, x: float) -> BoundValue:
    """Scalar evaluation that also reports whether x is outside the validity interval."""
    bound = default_registry.get_bound(kind)
    value = bound.evaluate(x)
    outside = bool(bound.out_of_validity(x))
    if outside:
        logger.warning("{} evaluated at x={} outside its validity interval", bound.name, x)
    return BoundValue(kind=bound.kind, x=float(x), value=float(value), out_of_validity=outside)


def q_bound_lower(kind: KindLike, x: ArrayLike) -> ArrayLike:
    """
    Lower bound of Q(x) = 1 - Phi(x) implied by an upper bound of Phi.

    For eidous_star the result is an approximation only.
    """
    resolved = default_registry.resolve(kind)
    if not resolved.guaranteed_upper_bound:
        logger.debug("{} carries no bound guarantee; Q value is an approximation", resolved.value)
    arr, scalar = as_finite_array(x)
    value = np.asarray(eval_bound(resolved, arr), dtype=np.float64)
    return as_output(1.0 - value, scalar)


def erf_bound_upper(kind: KindLike, y: ArrayLike) -> ArrayLike:
    """
    Upper bound of erf(y) via erf(y) = 2 Phi(sqrt(2) y) - 1.

    Raises:
        DomainError: For negative or non-finite y
    """
    arr, scalar = as_finite_array(y, "y")
    if np.any(arr < 0.0):
        raise DomainError("y must be >= 0")
    value = np.asarray(eval_bound(kind, SQRT2 * arr), dtype=np.float64)
    return as_output(2.0 * value - 1.0, scalar)
