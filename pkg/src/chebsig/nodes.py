"""Legendre nodes, node-set comparisons, and floating-point node probes."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .cheb import UNIT_DOMAIN, Domain, NodeKind, NodeSet

__all__ = [
    "DistanceProfile",
    "legendre_points",
    "uniform_points",
    "compare_nodes",
    "mean_distance",
    "smallest_nonzero_midpoint",
]


@dataclass(frozen=True)
class DistanceProfile:
    """Per-point geometric mean of the distances to all other points."""

    points: np.ndarray
    gm_distance: np.ndarray

    def __post_init__(self):
        p = np.asarray(self.points, dtype=float)
        g = np.asarray(self.gm_distance, dtype=float)
        if p.size != g.size:
            raise ValueError("points and gm_distance lengths differ")
        for arr, name in ((p, "points"), (g, "gm_distance")):
            arr = arr.copy()
            arr.flags.writeable = False
            object.__setattr__(self, name, arr)


def _legendre_and_derivative(n: int, x: np.ndarray):
    """P_n(x) and P_n'(x) by the three-term recurrence."""
    p_prev = np.ones_like(x)
    p = x.copy()
    for m in range(2, n + 1):
        p_prev, p = p, ((2 * m - 1) * x * p - (m - 1) * p_prev) / m
    dp = n * (x * p - p_prev) / (x * x - 1.0)
    return p, dp


def legendre_points(count: int, max_iter: int = 100) -> NodeSet:
    """Roots of the degree-count Legendre polynomial on [-1, 1], ascending.

    Newton iteration on the recurrence, started from the classical
    cos(pi (4k-1) / (4n+2)) guesses, run until every update is below 1e-15.

    Raises
    ------
    RuntimeError
        If Newton has not converged after ``max_iter`` sweeps (not expected
        for any count <= 1e4).
    """
    if count < 1:
        raise ValueError("legendre_points requires count >= 1")
    if count == 1:
        return NodeSet(NodeKind.LEGENDRE, np.zeros(1), UNIT_DOMAIN)
    k = np.arange(1, count + 1)
    x = np.cos(np.pi * (4 * k - 1) / (4 * count + 2))
    for _ in range(max_iter):
        p, dp = _legendre_and_derivative(count, x)
        dx = p / dp
        x -= dx
        if np.max(np.abs(dx)) < 1e-15:
            break
    else:
        raise RuntimeError(f"Legendre Newton iteration stalled for count={count}")
    return NodeSet(NodeKind.LEGENDRE, np.sort(x), UNIT_DOMAIN)


def uniform_points(count: int, domain: Domain = UNIT_DOMAIN) -> NodeSet:
    """count equally spaced points spanning the domain, endpoints included."""
    if count < 2:
        raise ValueError("uniform_points requires count >= 2")
    return NodeSet(NodeKind.UNIFORM, np.linspace(domain.a, domain.b, count), domain)


def compare_nodes(a: NodeSet, b: NodeSet) -> float:
    """Largest absolute gap between two equally sized node sets.

    Both sets are compared in ascending order (NodeSet points already are).
    """
    if len(a) != len(b):
        raise ValueError(f"node counts differ: {len(a)} vs {len(b)}")
    return float(np.max(np.abs(a.points - b.points)))


def mean_distance(points) -> DistanceProfile:
    """Geometric mean distance from each point to the other points.

    Entry j is (prod_{i != j} |x_j - x_i|)^(1/(count-1)); the zero
    self-distance is excluded, otherwise every entry would vanish.
    Computed through logarithms so large point sets neither overflow nor
    underflow the product.
    """
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 1 or pts.size < 2:
        raise ValueError("need at least 2 points")
    diff = np.abs(pts[:, None] - pts[None, :])
    off_diag = ~np.eye(pts.size, dtype=bool)
    if np.any(diff[off_diag] == 0.0):
        raise ValueError("points must be distinct")
    logs = np.zeros_like(diff)
    np.log(diff, where=off_diag, out=logs)
    gm = np.exp(logs.sum(axis=1) / (pts.size - 1))
    return DistanceProfile(pts, gm)


def smallest_nonzero_midpoint(limit: int = 10 ** 6) -> int:
    """First even n >= 2 whose middle second-kind node is nonzero in binary64.

    The midpoint entry is cos((n/2) pi / n) computed exactly as written,
    with pi the nearest binary64 value: multiply by the index first, then
    divide by n, then take the cosine.  Deterministic on IEEE-754 hardware.
    """
    n = 2
    while n <= limit:
        if math.cos((n // 2) * math.pi / n) != 0.0:
            return n
        n += 2
    raise RuntimeError(f"no nonzero midpoint found for even n up to {limit}")
