"""Bracketed Newton-Raphson with a bisection fallback."""

from __future__ import annotations

from typing import Callable, Tuple

from .errors import NoConvergence


def safeguarded_newton(
    f: Callable[[float], float],
    df: Callable[[float], float],
    lo: float,
    hi: float,
    x0: float,
    *,
    xtol: float = 1e-13,
    ftol: float = 1e-14,
    maxiter: int = 60,
) -> Tuple[float, int]:
    """Find a root of ``f`` inside ``[lo, hi]``.

    ``f(lo)`` and ``f(hi)`` must differ in sign (zero at either end is
    accepted). Each iteration takes a Newton step from the current estimate;
    a step that would leave the bracket, or a derivative below 1e-14 in
    magnitude, is replaced by bisection. The bracket is shrunk after every
    evaluation so it always contains a sign change.

    Returns ``(root, iterations)``.
    """
    flo = f(lo)
    fhi = f(hi)
    if flo == 0.0:
        return lo, 0
    if fhi == 0.0:
        return hi, 0
    if (flo > 0) == (fhi > 0):
        raise ValueError(f"[{lo!r}, {hi!r}] does not bracket a root")
    rising = fhi > 0

    x = min(max(x0, lo), hi)
    for it in range(1, maxiter + 1):
        fx = f(x)
        if abs(fx) <= ftol:
            return x, it
        if (fx > 0) == rising:
            hi = x
        else:
            lo = x

        d = df(x)
        step_ok = abs(d) >= 1e-14
        if step_ok:
            x_new = x - fx / d
            step_ok = lo < x_new < hi
        if not step_ok:
            x_new = 0.5 * (lo + hi)

        if abs(x_new - x) <= xtol:
            return x_new, it
        x = x_new
    raise NoConvergence(f"no convergence after {maxiter} iterations (x={x!r})")


def bisect(f: Callable[[float], float], lo: float, hi: float, steps: int) -> float:
    """Plain bisection for a fixed number of halvings."""
    rising = f(hi) > 0
    for _ in range(steps):
        mid = 0.5 * (lo + hi)
        if (f(mid) > 0) == rising:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)
