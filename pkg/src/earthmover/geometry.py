"""Pairwise Euclidean ground costs between two supports."""

import numpy as np

from .distributions import DiscreteDistribution
from .errors import DimensionMismatchError

__all__ = ["pairwise_costs"]


def pairwise_costs(u: DiscreteDistribution, v: DiscreteDistribution) -> np.ndarray:
    """n x m matrix of Euclidean distances between support points.

    Entries are exactly zero iff the points coincide coordinate-for-coordinate.
    No overflow guard: coordinates are assumed to be of ordinary magnitude.
    """
    if u.dim != v.dim:
        raise DimensionMismatchError(
            f"distributions have different dimensionality: {u.dim} vs {v.dim}"
        )
    diff = u.points[:, None, :] - v.points[None, :, :]
    return np.sqrt(np.einsum("ijk,ijk->ij", diff, diff))
