"""Independent reference computations used by several test modules."""

import numpy as np

from cyclogear.geometry import epicycloid_point


def dense_curve(pcr, r, tip, n=100_000):
    # scalar evaluation on purpose: independent of the vectorised path
    t = np.linspace(0.0, tip, n)
    return np.array([epicycloid_point(r, x) for x in t]) * pcr


def distance_to_polyline(points, poly, chunk=2000):
    """Min distance from each point to any segment of an open polyline."""
    a = poly[:-1]
    b = poly[1:]
    ab = b - a
    ab2 = np.maximum(np.sum(ab * ab, axis=1), 1e-300)
    out = np.empty(len(points))
    for s in range(0, len(points), chunk):
        p = points[s : s + chunk, None, :]
        u = np.clip(np.sum((p - a) * ab, axis=2) / ab2, 0.0, 1.0)
        d = p - (a + u[..., None] * ab)
        out[s : s + chunk] = np.sqrt(np.min(np.sum(d * d, axis=2), axis=1))
    return out


def segments_cross(p1, p2, tol=1e-9):
    """True if any edge of closed polygon p1 properly crosses an edge of p2.

    Endpoints must lie more than ``tol`` from the other segment's line on
    opposite sides, so contact at shared vertices does not count.
    """
    a1, b1 = p1, np.roll(p1, -1, axis=0)
    a2, b2 = p2, np.roll(p2, -1, axis=0)

    def side(o, a, b):
        ab = a - o
        n = np.hypot(ab[..., 0], ab[..., 1])
        return (ab[..., 0] * (b[..., 1] - o[..., 1]) - ab[..., 1] * (b[..., 0] - o[..., 0])) / n

    for s in range(0, len(a1), 256):
        p, q = a1[s : s + 256, None], b1[s : s + 256, None]
        r, t = a2[None], b2[None]
        d1, d2 = side(p, q, r), side(p, q, t)
        d3, d4 = side(r, t, p), side(r, t, q)
        hit = ((d1 > tol) & (d2 < -tol) | (d1 < -tol) & (d2 > tol)) & (
            (d3 > tol) & (d4 < -tol) | (d3 < -tol) & (d4 > tol)
        )
        if hit.any():
            return True
    return False
