"""Weighted point sets: validation, weight normalization, finiteness classification.

A distribution is a set of n support points in d dimensions with non-negative
masses. Weights are accepted as counts or masses and are normalized to the
probability simplex before any distance computation, so both marginals of the
transport problem always balance.
"""

import enum
from dataclasses import dataclass

import numpy as np

from .errors import (
    NegativeWeightError,
    ShapeError,
    WeightLengthError,
    WeightSumError,
)

__all__ = [
    "DiscreteDistribution",
    "Finiteness",
    "validate",
    "normalize",
    "classify_finiteness",
]


@dataclass(frozen=True)
class DiscreteDistribution:
    """n weighted points in d dimensions.

    ``points`` has shape (n, d), ``weights`` shape (n,). Arrays are read-only;
    all operations return new instances. ``normalized`` is True once weights
    have been scaled to sum to one.
    """

    points: np.ndarray
    weights: np.ndarray
    normalized: bool = False

    @property
    def size(self) -> int:
        return self.points.shape[0]

    @property
    def dim(self) -> int:
        return self.points.shape[1]


def _freeze(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


def validate(points, weights=None) -> DiscreteDistribution:
    """Check raw arrays and build a distribution.

    1D point input is reshaped to (n, 1). Missing weights are synthesized as
    uniform. Raises ShapeError for inputs that are not 1D/2D numeric arrays,
    WeightLengthError / NegativeWeightError / WeightSumError for bad weights.
    """
    try:
        pts = np.asarray(points, dtype=np.float64)
    except (ValueError, TypeError) as exc:
        raise ShapeError(f"points are not a numeric array: {exc}") from None
    if pts.ndim > 2:
        raise ShapeError(f"points must be a 1D or 2D array, got {pts.ndim} axes")
    if pts.ndim == 0:
        raise ShapeError("points must be a non-empty 1D or 2D array, got a scalar")
    if pts.ndim == 1:
        pts = pts.reshape(-1, 1)
    if pts.shape[0] == 0:
        raise ShapeError("points must contain at least one observation")
    if pts.shape[1] == 0:
        raise ShapeError("points must have at least one coordinate per observation")

    n = pts.shape[0]
    if weights is None:
        w = np.ones(n, dtype=np.float64)
    else:
        try:
            w = np.asarray(weights, dtype=np.float64)
        except (ValueError, TypeError) as exc:
            raise WeightLengthError(f"weights are not a numeric array: {exc}") from None
        if w.ndim != 1 or w.shape[0] != n:
            raise WeightLengthError(
                f"weights must be a flat array of length {n}, got shape {w.shape}"
            )
        if np.any(w < 0):
            raise NegativeWeightError("weights must be non-negative")
        total = float(w.sum())
        if not np.isfinite(total) or total <= 0:
            raise WeightSumError(f"weight sum must be positive and finite, got {total}")
        w = w.copy()

    return DiscreteDistribution(_freeze(pts.copy()), _freeze(w))


def normalize(dist: DiscreteDistribution) -> DiscreteDistribution:
    """Scale weights to total mass one. Idempotent; points are untouched."""
    if dist.normalized:
        return dist
    w = dist.weights / dist.weights.sum()
    return DiscreteDistribution(dist.points, _freeze(w), normalized=True)


class Finiteness(enum.Enum):
    """Whether a distance is computable, infinite, or undefined."""

    FINITE = "finite"
    INFINITE = "infinite"
    UNDEFINED = "undefined"


def classify_finiteness(u: DiscreteDistribution, v: DiscreteDistribution) -> Finiteness:
    """Classify a pair of distributions by their special coordinate values.

    Any NaN coordinate makes the distance undefined. Infinite coordinates on
    exactly one side force an infinite distance; on both sides the result is
    sign-dependent and therefore undefined as well.
    """
    if np.isnan(u.points).any() or np.isnan(v.points).any():
        return Finiteness.UNDEFINED
    u_inf = bool(np.isinf(u.points).any())
    v_inf = bool(np.isinf(v.points).any())
    if u_inf and v_inf:
        return Finiteness.UNDEFINED
    if u_inf or v_inf:
        return Finiteness.INFINITE
    return Finiteness.FINITE
