"""Polygonal approximation of one addendum flank.

Three ways to pick generating angles on ``[0, tip_angle]``:

* ``priority_queue``: keep splitting the longest chord in half (in angle)
  until the longest chord is at most epsilon.
* ``equal_arc``: march along the curve so every chord except the last is
  exactly epsilon long.
* ``fixed_20``: equal angle increments, as the original renderer did.

Chord lengths are Euclidean distances between evaluated curve points,
scaled by the pitch radius, so epsilon is in module units.
"""

from __future__ import annotations

import enum
import heapq
import math
from dataclasses import dataclass
from typing import List, Sequence

import numpy as np

from .errors import ToleranceTooSmall
from .geometry import epicycloid_point, epicycloid_points, epicycloid_velocity
from .rootfind import safeguarded_newton

MAX_SEGMENTS = 10**7


class Method(enum.Enum):
    PRIORITY_QUEUE = "priority_queue"
    EQUAL_ARC = "equal_arc"
    FIXED_20 = "fixed_20"


@dataclass(frozen=True)
class CurveSegment:
    start: float
    finish: float
    chord: float


@dataclass(frozen=True)
class FlankPath:
    thetas: np.ndarray      # strictly increasing, thetas[0] == 0
    points: np.ndarray      # (n, 2), module units
    method: Method

    def chords(self) -> np.ndarray:
        return np.hypot(*np.diff(self.points, axis=0).T)

    def segments(self) -> List[CurveSegment]:
        c = self.chords()
        return [
            CurveSegment(float(a), float(b), float(d))
            for a, b, d in zip(self.thetas[:-1], self.thetas[1:], c)
        ]

    def __len__(self) -> int:
        return len(self.thetas)


def chord(pcr: float, r: float, a: float, b: float) -> float:
    xa, ya = epicycloid_point(r, a)
    xb, yb = epicycloid_point(r, b)
    return pcr * math.hypot(xb - xa, yb - ya)


def _path(pcr: float, r: float, thetas: Sequence[float], method: Method) -> FlankPath:
    t = np.asarray(thetas, dtype=float)
    return FlankPath(t, pcr * epicycloid_points(r, t), method)


def tessellate_priority_queue(pcr: float, r: float, tip: float, eps: float) -> FlankPath:
    if not eps > 0:
        raise ValueError("epsilon must be positive")
    # heapq is a min-heap: store negated chords so the longest pops first
    heap = [(-chord(pcr, r, 0.0, tip), 0.0, tip)]
    while True:
        neg, a, b = heapq.heappop(heap)
        if -neg <= eps:
            heapq.heappush(heap, (neg, a, b))
            break
        if len(heap) + 2 > MAX_SEGMENTS:
            raise ToleranceTooSmall(f"epsilon={eps} needs more than {MAX_SEGMENTS} segments")
        h = 0.5 * (a + b)
        heapq.heappush(heap, (-chord(pcr, r, a, h), a, h))
        heapq.heappush(heap, (-chord(pcr, r, h, b), h, b))
    starts = sorted(a for _, a, _ in heap)
    return _path(pcr, r, starts + [tip], Method.PRIORITY_QUEUE)


_EA_FTOL = 1e-13


def tessellate_equal_arc(pcr: float, r: float, tip: float, eps: float) -> FlankPath:
    if not eps > 0:
        raise ValueError("epsilon must be positive")
    thetas = [0.0]
    prev_step = eps / (pcr * (1 + r))
    target = eps - 2 * _EA_FTOL
    while chord(pcr, r, thetas[-1], tip) > eps:
        a = thetas[-1]
        pa = epicycloid_point(r, a)

        def g(t):
            p = epicycloid_point(r, t)
            return pcr * math.hypot(p.x - pa.x, p.y - pa.y) - target

        def dg(t):
            p = epicycloid_point(r, t)
            dx, dy = p.x - pa.x, p.y - pa.y
            n = math.hypot(dx, dy)
            if n == 0.0:
                return 0.0
            v = epicycloid_velocity(r, t)
            return pcr * (dx * v.x + dy * v.y) / n

        t, _ = safeguarded_newton(g, dg, a, tip, a + prev_step, xtol=1e-15, ftol=_EA_FTOL)
        # the solver's acceptance band straddles the target; never exceed eps
        while chord(pcr, r, a, t) > eps:
            t = math.nextafter(t, a)
        prev_step = t - a
        thetas.append(t)
        if len(thetas) > MAX_SEGMENTS:
            raise ToleranceTooSmall(f"epsilon={eps} needs more than {MAX_SEGMENTS} segments")
    thetas.append(tip)
    return _path(pcr, r, thetas, Method.EQUAL_ARC)


def tessellate_fixed(pcr: float, r: float, tip: float, steps: int = 20) -> FlankPath:
    if steps < 1:
        raise ValueError("steps must be at least 1")
    thetas = [k * tip / steps for k in range(steps)] + [tip]
    return _path(pcr, r, thetas, Method.FIXED_20)


def tessellate(pcr: float, r: float, tip: float, eps: float, method: Method) -> FlankPath:
    if method is Method.PRIORITY_QUEUE:
        return tessellate_priority_queue(pcr, r, tip, eps)
    if method is Method.EQUAL_ARC:
        return tessellate_equal_arc(pcr, r, tip, eps)
    return tessellate_fixed(pcr, r, tip)


def max_deviation(path: FlankPath, r: float, pcr: float, samples: int = 100_000) -> float:
    """Largest distance from densely sampled true curve points to the path.

    Each sample is measured against the chord whose angle interval contains
    it, which bounds the distance to the polyline from above.
    """
    t = np.linspace(0.0, path.thetas[-1], samples)
    p = pcr * epicycloid_points(r, t)
    idx = np.clip(np.searchsorted(path.thetas, t, side="right") - 1, 0, len(path) - 2)
    a = path.points[idx]
    b = path.points[idx + 1]
    return float(np.max(_point_segment_distance(p, a, b)))


def _point_segment_distance(p: np.ndarray, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    ab = b - a
    denom = np.einsum("ij,ij->i", ab, ab)
    u = np.where(denom > 0, np.einsum("ij,ij->i", p - a, ab) / np.where(denom > 0, denom, 1), 0.0)
    u = np.clip(u, 0.0, 1.0)
    closest = a + u[:, None] * ab
    return np.hypot(*(p - closest).T)
