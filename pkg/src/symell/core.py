"""Reference evaluators for the symmetric elliptic integrals.

The integrals handled here are the homogeneous symmetric forms

    rf(x, y, z)      first kind,       degree -1/2
    rd(x, y, z)      second kind,      degree -3/2, symmetric in (x, y)
    rj(x, y, z, p)   third kind,       degree -3/2
    rg(x, y, z)      second kind,      degree +1/2, fully symmetric
    rc(x, y)         degenerate rf(x, y, y), elementary closed forms

plus the Cauchy principal values rc_pv / rj_pv for a negative last
argument, the auxiliary function r_minus1, Gauss's arithmetic-geometric
mean, and Legendre's complete integrals K and E expressed through rf/rg.

rf, rd and rj use the standard duplication iteration (argument averaging
until the Taylor expansion about the common limit converges); rc is pure
closed forms.  Symmetric arguments are canonicalized by sorting before
evaluation, so permutation symmetry is bit-exact.  The quadrature-based
ground truth lives in :mod:`symell.oracle` and deliberately shares no code
with this module.

All functions return plain finite floats and raise
:class:`~symell.errors.DomainError` on invalid input.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass

from ._util import cbrt
from .errors import DomainError

__all__ = [
    "Scalar",
    "Sym3Args",
    "Sym4Args",
    "MeanStats",
    "rc",
    "rc_pv",
    "rf",
    "rd",
    "rj",
    "rj_pv",
    "rg",
    "r_minus1",
    "agm",
    "legendre_k",
    "legendre_e",
]

# All evaluators return plain finite floats.
Scalar = float

_EPS = sys.float_info.epsilon


def _as_finite(name: str, v) -> float:
    v = float(v)
    if not math.isfinite(v):
        raise DomainError(f"{name} must be finite, got {v!r}")
    return v


@dataclass(frozen=True)
class Sym3Args:
    """Validated argument triple: nonnegative, finite, at most one zero."""

    x: float
    y: float
    z: float

    def __post_init__(self):
        for name in ("x", "y", "z"):
            object.__setattr__(self, name, _as_finite(name, getattr(self, name)))
        if min(self.x, self.y, self.z) < 0.0:
            raise DomainError(f"arguments must be nonnegative, got {self.astuple()}")
        if sum(1 for v in self.astuple() if v == 0.0) > 1:
            raise DomainError(f"at most one argument may be zero, got {self.astuple()}")

    def astuple(self) -> tuple[float, float, float]:
        return (self.x, self.y, self.z)


@dataclass(frozen=True)
class Sym4Args:
    """Sym3Args plus a nonzero fourth argument (negative p = principal value)."""

    x: float
    y: float
    z: float
    p: float

    def __post_init__(self):
        Sym3Args(self.x, self.y, self.z)
        object.__setattr__(self, "p", _as_finite("p", self.p))
        if self.p == 0.0:
            raise DomainError("p must be nonzero")

    def astuple(self) -> tuple[float, float, float, float]:
        return (self.x, self.y, self.z, self.p)


@dataclass(frozen=True)
class MeanStats:
    """Symmetric means of two or three positive variables.

    For three variables the Maclaurin chain h <= g <= b <= a holds, with
    equality iff all variables are equal; for two variables h <= g <= a.
    ``b`` is the second-order (Maclaurin) mean sqrt((xy+xz+yz)/3), ``lam``
    the sum of pairwise geometric means, and ``d`` the shifted mean
    (z+2p)/3 carried only by the J4 constructor.
    """

    a: float
    g: float
    h: float
    b: float | None = None
    lam: float | None = None
    d: float | None = None

    @classmethod
    def of_pair(cls, x: float, y: float) -> "MeanStats":
        if x <= 0.0 or y <= 0.0:
            raise DomainError("means require positive variables")
        return cls(a=(x + y) / 2.0, g=math.sqrt(x * y), h=2.0 * x * y / (x + y))

    @classmethod
    def of_triple(cls, x: float, y: float, z: float) -> "MeanStats":
        if min(x, y, z) <= 0.0:
            raise DomainError("means require positive variables")
        s2 = x * y + x * z + y * z
        return cls(
            a=(x + y + z) / 3.0,
            g=cbrt(x * y * z),
            h=3.0 / (1.0 / x + 1.0 / y + 1.0 / z),
            b=math.sqrt(s2 / 3.0),
            lam=math.sqrt(x * y) + math.sqrt(x * z) + math.sqrt(y * z),
        )

    @classmethod
    def of_j4(cls, z: float, p: float) -> "MeanStats":
        """Means of the small pair (z, p) in the J4 regime, with b and d."""
        if z < 0.0 or p <= 0.0:
            raise DomainError("of_j4 requires z >= 0 and p > 0")
        stats = cls.of_triple(p, p, z) if z > 0.0 else None
        return cls(
            a=(z + p) / 2.0,
            g=math.sqrt(z * p),
            h=(2.0 * z * p / (z + p)) if z > 0.0 else 0.0,
            b=math.sqrt(3.0 * p * (p + 2.0 * z)) / 2.0,
            d=(z + 2.0 * p) / 3.0,
            lam=None if stats is None else stats.lam,
        )


# --------------------------------------------------------------------------
# degenerate case rc and its principal value
# --------------------------------------------------------------------------

# Small-eccentricity series for rc(y(1+e), y): sum_k binom(-1/2,k) e^k/(2k+1).
_RC_SERIES = (-1.0 / 6.0, 3.0 / 40.0, -5.0 / 112.0, 35.0 / 1152.0)

# Relative argument difference below which the closed forms are replaced by
# the series (both 0/0 at x == y).
_RC_SERIES_CUT = 1e-6


def rc(x: float, y: float) -> float:
    """Degenerate integral rf(x, y, y), y > 0, by closed forms.

    Inverse-circular branch for x < y, inverse-hyperbolic for x > y,
    x**-0.5 on the diagonal, and a short series just off the diagonal.
    Relative error <= 1e-13 everywhere.
    """
    x = _as_finite("x", x)
    y = _as_finite("y", y)
    if x < 0.0 or y <= 0.0:
        raise DomainError(f"rc requires x >= 0 and y > 0, got ({x}, {y})")
    if x == 0.0:
        return math.pi / (2.0 * math.sqrt(y))
    d = x - y
    if abs(d) < _RC_SERIES_CUT * y:
        e = d / y
        s = 1.0
        ek = 1.0
        for c in _RC_SERIES:
            ek *= e
            s += c * ek
        return s / math.sqrt(y)
    if x < y:
        # acos(sqrt(x/y))/sqrt(y-x), written so the conditioning stays O(eps)
        return math.atan(math.sqrt(-d / x)) / math.sqrt(-d)
    if x <= 2.0 * y:
        # atanh argument <= sqrt(1/2); safe away from 1
        return math.atanh(math.sqrt(d / x)) / math.sqrt(d)
    return math.log((math.sqrt(x) + math.sqrt(d)) / math.sqrt(y)) / math.sqrt(d)


def rc_pv(x: float, y_abs: float) -> float:
    """Cauchy principal value rc(x, -y_abs) for y_abs > 0."""
    x = _as_finite("x", x)
    y_abs = _as_finite("y_abs", y_abs)
    if x < 0.0 or y_abs <= 0.0:
        raise DomainError(f"rc_pv requires x >= 0 and y_abs > 0, got ({x}, {y_abs})")
    if x == 0.0:
        return 0.0
    return math.sqrt(x / (x + y_abs)) * rc(x + y_abs, y_abs)


# --------------------------------------------------------------------------
# duplication iterations
# --------------------------------------------------------------------------


def _rf_core(x: float, y: float, z: float) -> float:
    a0 = (x + y + z) / 3.0
    dev = max(abs(a0 - x), abs(a0 - y), abs(a0 - z))
    if dev == 0.0:
        return 1.0 / math.sqrt(a0)
    q = (3.0 * _EPS) ** -0.125 * dev
    am, f = a0, 1.0
    xm, ym, zm = x, y, z
    while q >= f * abs(am):
        sx, sy, sz = math.sqrt(xm), math.sqrt(ym), math.sqrt(zm)
        lam = sx * (sy + sz) + sy * sz
        xm = 0.25 * (xm + lam)
        ym = 0.25 * (ym + lam)
        zm = 0.25 * (zm + lam)
        am = 0.25 * (am + lam)
        f *= 4.0
    xx = (a0 - x) / (f * am)
    yy = (a0 - y) / (f * am)
    zz = -xx - yy
    e2 = xx * yy - zz * zz
    e3 = xx * yy * zz
    s = (
        1.0
        - e2 / 10.0
        + e3 / 14.0
        + e2 * e2 / 24.0
        - 3.0 * e2 * e3 / 44.0
        - 5.0 * e2 ** 3 / 208.0
        + 3.0 * e3 * e3 / 104.0
        + e2 * e2 * e3 / 16.0
    )
    return s / math.sqrt(am)


def _rd_core(x: float, y: float, z: float) -> float:
    a0 = (x + y + 3.0 * z) / 5.0
    dev = max(abs(a0 - x), abs(a0 - y), abs(a0 - z))
    if dev == 0.0:
        return a0 ** -1.5
    q = (0.25 * _EPS) ** (-1.0 / 6.0) * dev
    am, f, acc = a0, 1.0, 0.0
    xm, ym, zm = x, y, z
    while q >= f * abs(am):
        sx, sy, sz = math.sqrt(xm), math.sqrt(ym), math.sqrt(zm)
        lam = sx * (sy + sz) + sy * sz
        acc += 1.0 / (f * sz * (zm + lam))
        xm = 0.25 * (xm + lam)
        ym = 0.25 * (ym + lam)
        zm = 0.25 * (zm + lam)
        am = 0.25 * (am + lam)
        f *= 4.0
    xx = (a0 - x) / (f * am)
    yy = (a0 - y) / (f * am)
    zz = -(xx + yy) / 3.0
    e2 = xx * yy - 6.0 * zz * zz
    e3 = (3.0 * xx * yy - 8.0 * zz * zz) * zz
    e4 = 3.0 * (xx * yy - zz * zz) * zz * zz
    e5 = xx * yy * zz ** 3
    s = (
        1.0
        - 3.0 * e2 / 14.0
        + e3 / 6.0
        + 9.0 * e2 * e2 / 88.0
        - 3.0 * e4 / 22.0
        - 9.0 * e2 * e3 / 52.0
        + 3.0 * e5 / 26.0
    )
    return s / (f * am * math.sqrt(am)) + 3.0 * acc


def _rj_core(x: float, y: float, z: float, p: float) -> float:
    a0 = (x + y + z + 2.0 * p) / 5.0
    delta = (p - x) * (p - y) * (p - z)
    dev = max(abs(a0 - x), abs(a0 - y), abs(a0 - z), abs(a0 - p))
    if dev == 0.0:
        return a0 ** -1.5
    q = (0.25 * _EPS) ** (-1.0 / 6.0) * dev
    am, f, f3, acc = a0, 1.0, 1.0, 0.0
    xm, ym, zm, pm = x, y, z, p
    while q >= f * abs(am):
        sx, sy, sz, sp = math.sqrt(xm), math.sqrt(ym), math.sqrt(zm), math.sqrt(pm)
        lam = sx * (sy + sz) + sy * sz
        dm = (sp + sx) * (sp + sy) * (sp + sz)
        em = delta / (f3 * dm * dm)
        acc += rc(1.0, 1.0 + em) / (f * dm)
        xm = 0.25 * (xm + lam)
        ym = 0.25 * (ym + lam)
        zm = 0.25 * (zm + lam)
        pm = 0.25 * (pm + lam)
        am = 0.25 * (am + lam)
        f *= 4.0
        f3 *= 64.0
    xx = (a0 - x) / (f * am)
    yy = (a0 - y) / (f * am)
    zz = (a0 - z) / (f * am)
    pp = -(xx + yy + zz) / 2.0
    e2 = xx * yy + xx * zz + yy * zz - 3.0 * pp * pp
    e3 = xx * yy * zz + 2.0 * pp * e2 + 4.0 * pp ** 3
    e4 = (2.0 * xx * yy * zz + pp * e2 + 3.0 * pp ** 3) * pp
    e5 = xx * yy * zz * pp * pp
    s = (
        1.0
        - 3.0 * e2 / 14.0
        + e3 / 6.0
        + 9.0 * e2 * e2 / 88.0
        - 3.0 * e4 / 22.0
        - 9.0 * e2 * e3 / 52.0
        + 3.0 * e5 / 26.0
    )
    return s / (f * am * math.sqrt(am)) + 6.0 * acc


# --------------------------------------------------------------------------
# public evaluators
# --------------------------------------------------------------------------


def rf(x: float, y: float, z: float) -> float:
    """Symmetric integral of the first kind; relative error <= 1e-12."""
    args = Sym3Args(x, y, z)
    a, b, c = sorted(args.astuple())
    if a == 0.0 and b == 0.0:
        raise DomainError("rf diverges when two arguments vanish")
    return _rf_core(a, b, c)


def rd(x: float, y: float, z: float) -> float:
    """Symmetric integral of the second kind, symmetric in (x, y); z > 0."""
    x = _as_finite("x", x)
    y = _as_finite("y", y)
    z = _as_finite("z", z)
    if x < 0.0 or y < 0.0:
        raise DomainError(f"rd requires x, y >= 0, got ({x}, {y})")
    if x == 0.0 and y == 0.0:
        raise DomainError("rd diverges when x and y both vanish")
    if z <= 0.0:
        raise DomainError(f"rd requires z > 0, got z={z}")
    a, b = sorted((x, y))
    return _rd_core(a, b, z)


def rj(x: float, y: float, z: float, p: float) -> float:
    """Symmetric integral of the third kind for p > 0.

    Delegates exactly to rd when p coincides with one of x, y, z.
    """
    args = Sym4Args(x, y, z, p)
    if args.p < 0.0:
        raise DomainError("rj requires p > 0; use rj_pv for negative p")
    a, b, c = sorted((args.x, args.y, args.z))
    if a == 0.0 and b == 0.0:
        raise DomainError("rj diverges when two of x, y, z vanish")
    p = args.p
    if p == c:
        return rd(a, b, c)
    if p == b:
        return rd(a, c, b)
    if p == a:
        return rd(b, c, a)
    return _rj_core(a, b, c, p)


def rj_pv(x: float, y: float, z: float, p: float) -> float:
    """Cauchy principal value of the third kind for p < 0.

    The arguments are permuted so the middle one sits in the y slot, which
    makes (z-y)(y-x) >= 0 and hence q >= y > 0 in the shifted evaluation.
    """
    args = Sym4Args(x, y, z, p)
    if args.p >= 0.0:
        raise DomainError("rj_pv requires p < 0")
    if min(args.x, args.y, args.z) <= 0.0:
        raise DomainError("rj_pv requires strictly positive x, y, z")
    lo, med, hi = sorted((args.x, args.y, args.z))
    pabs = -args.p
    q = med + (hi - med) * (med - lo) / (med + pabs)
    u = lo * hi + pabs * q
    term = 3.0 * math.sqrt(lo * med * hi / u) * rc(u, pabs * q)
    return ((q - med) * rj(lo, med, hi, q) - 3.0 * rf(lo, med, hi) + term) / (med + pabs)


def rg(x: float, y: float, z: float) -> float:
    """Completely symmetric integral of the second kind, degree +1/2.

    Evaluated through rf and rd with the largest argument in the rd z
    slot, which keeps the subtracted term single-signed.  Two zero
    arguments are allowed: rg(0, 0, z) = sqrt(z)/2 is the finite limit.
    """
    vals = []
    for name, v in (("x", x), ("y", y), ("z", z)):
        v = _as_finite(name, v)
        if v < 0.0:
            raise DomainError(f"rg requires nonnegative arguments, got {name}={v}")
        vals.append(v)
    a, b, c = sorted(vals)
    if c == 0.0:
        raise DomainError("rg requires at least one positive argument")
    if b == 0.0:
        return math.sqrt(c) / 2.0
    two_rg = c * rf(a, b, c) - (c - a) * (c - b) / 3.0 * rd(a, b, c) + math.sqrt(a * b / c)
    return two_rg / 2.0


def r_minus1(x: float, y: float, z: float) -> float:
    """Auxiliary integral of (t+x)^-1/2 (t+y)^-1/2 (t+z)^-1 over t >= 0."""
    for name, v in (("x", x), ("y", y), ("z", z)):
        if _as_finite(name, v) <= 0.0:
            raise DomainError(f"r_minus1 requires positive arguments, got {name}={v}")
    sxy = math.sqrt(x * y)
    s = math.sqrt(x) + math.sqrt(y)
    return 2.0 * rc((sxy + z) ** 2, s * s * z)


def agm(u: float, v: float) -> float:
    """Gauss's arithmetic-geometric mean; relative error <= 1e-14."""
    u = _as_finite("u", u)
    v = _as_finite("v", v)
    if u <= 0.0 or v <= 0.0:
        raise DomainError(f"agm requires positive arguments, got ({u}, {v})")
    a, g = (u, v) if u >= v else (v, u)
    for _ in range(64):
        if a - g <= 4.0 * _EPS * a:
            break
        a, g = 0.5 * (a + g), math.sqrt(a * g)
    return 0.5 * (a + g)


def legendre_k(k: float) -> float:
    """Complete elliptic integral of the first kind, k in [0, 1)."""
    k = _as_finite("k", k)
    if not 0.0 <= k < 1.0:
        raise DomainError(f"legendre_k requires 0 <= k < 1, got {k}")
    return rf(0.0, 1.0 - k * k, 1.0)


def legendre_e(k: float) -> float:
    """Complete elliptic integral of the second kind, k in [0, 1]."""
    k = _as_finite("k", k)
    if not 0.0 <= k <= 1.0:
        raise DomainError(f"legendre_e requires 0 <= k <= 1, got {k}")
    return 2.0 * rg(0.0, 1.0 - k * k, 1.0)
