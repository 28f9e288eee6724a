"""Brute-force planar polygon predicates (numpy, O(n*m) over segment pairs)."""

from __future__ import annotations

import numpy as np


def signed_area(points: np.ndarray) -> float:
    x, y = points[:, 0], points[:, 1]
    return 0.5 * float(np.dot(x, np.roll(y, -1)) - np.dot(np.roll(x, -1), y))


def edges(points: np.ndarray, closed: bool = True):
    a = np.asarray(points, dtype=float)
    b = np.roll(a, -1, axis=0) if closed else a[1:]
    if not closed:
        a = a[:-1]
    return a, b


def _cross(o, a, b):
    return (a[..., 0] - o[..., 0]) * (b[..., 1] - o[..., 1]) - (a[..., 1] - o[..., 1]) * (
        b[..., 0] - o[..., 0]
    )


def crossing_pairs(a1, b1, a2, b2, tol: float = 0.0) -> np.ndarray:
    """Boolean matrix of segment pairs that properly cross.

    Pairs meeting only at an endpoint, or collinear, are not counted.
    """
    p = a1[:, None, :]
    q = b1[:, None, :]
    r = a2[None, :, :]
    s = b2[None, :, :]
    d1 = _cross(p, q, r)
    d2 = _cross(p, q, s)
    d3 = _cross(r, s, p)
    d4 = _cross(r, s, q)
    return ((d1 > tol) & (d2 < -tol) | (d1 < -tol) & (d2 > tol)) & (
        (d3 > tol) & (d4 < -tol) | (d3 < -tol) & (d4 > tol)
    )


def is_simple(points: np.ndarray, chunk: int = 512) -> bool:
    """True when no two non-adjacent edges of the closed polygon meet."""
    a, b = edges(points)
    n = len(a)
    for start in range(0, n, chunk):
        stop = min(start + chunk, n)
        hit = crossing_pairs(a[start:stop], b[start:stop], a, b, tol=0.0)
        # shared-vertex contacts between non-adjacent edges also count
        ii = np.arange(start, stop)[:, None]
        jj = np.arange(n)[None, :]
        adjacent = (ii == jj) | ((ii + 1) % n == jj) | ((jj + 1) % n == ii)
        if np.any(hit & ~adjacent):
            return False
        same = np.all(np.isclose(a[start:stop, None, :], a[None, :, :], atol=1e-12, rtol=0), axis=2)
        if np.any(same & (ii != jj)):
            return False
    return True


def point_segment_distance(p: np.ndarray, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Distance from each point in ``p`` (k, 2) to each segment (m, 2) -> (k, m)."""
    p = p[:, None, :]
    ab = (b - a)[None, :, :]
    ap = p - a[None, :, :]
    denom = np.sum(ab * ab, axis=2)
    u = np.clip(np.sum(ap * ab, axis=2) / np.where(denom > 0, denom, 1.0), 0.0, 1.0)
    d = ap - u[..., None] * ab
    return np.hypot(d[..., 0], d[..., 1])


def boundary_distance(poly1: np.ndarray, poly2: np.ndarray) -> float:
    """Minimum distance between the boundaries of two closed polygons; 0 if they cross."""
    a1, b1 = edges(poly1)
    a2, b2 = edges(poly2)
    if np.any(crossing_pairs(a1, b1, a2, b2)):
        return 0.0
    d12 = point_segment_distance(poly1, a2, b2).min()
    d21 = point_segment_distance(poly2, a1, b1).min()
    return float(min(d12, d21))


def contains(poly: np.ndarray, pts: np.ndarray) -> np.ndarray:
    """Even-odd point-in-polygon test."""
    x, y = pts[:, 0][:, None], pts[:, 1][:, None]
    a, b = edges(poly)
    xa, ya, xb, yb = a[:, 0], a[:, 1], b[:, 0], b[:, 1]
    straddle = (ya > y) != (yb > y)
    with np.errstate(divide="ignore", invalid="ignore"):
        xint = xa + (y - ya) * (xb - xa) / (yb - ya)
    return np.count_nonzero(straddle & (x < xint), axis=1) % 2 == 1
