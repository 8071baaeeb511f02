"""Small numeric helpers shared across modules."""

from __future__ import annotations

import math

_WIDEN_ULPS = 8


def cbrt(v: float) -> float:
    """Cube root accurate to ~1 ulp.

    pow(v, 1/3) drifts by ~|ln v|/3 ulps far from 1; one Newton step on
    g**3 - v restores full precision (needed where near-equal variables
    make bracket margins a few ulps wide).
    """
    if v == 0.0:
        return 0.0
    g = v ** (1.0 / 3.0)
    return g - (g - v / (g * g)) / 3.0


def widen_down(v: float) -> float:
    """Shift v down by the standard outward-widening margin (8 ulps)."""
    return v - _WIDEN_ULPS * math.ulp(abs(v))


def widen_up(v: float) -> float:
    return v + _WIDEN_ULPS * math.ulp(abs(v))


def equal_within_band(u: float, v: float, n: int = 4) -> bool:
    """True when u and v differ by at most n ulps of the larger magnitude."""
    return abs(u - v) <= n * math.ulp(max(abs(u), abs(v)))
