"""Zeta partial sums with tail bounds, completed values, and covolumes.

The quadratic-field zeta value is summed directly over canonical-
associate lattice points by increasing norm, with a lattice-count tail
bound; completed values multiply in the gamma factors.  Covolumes of the
unimodular integer groups are products of completed values, and the two
lattices of interest sit at fixed index ratios (one half, three halves)
below them.  Hyperbolic volumes of the four modelled fundamental domains
come from adaptive quadrature of the cusp-section integrals and verify
the index ratios numerically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from math import isqrt

import numpy as np
from scipy.special import zeta as _riemann_zeta

from .domains import TRIANGLE, DomainKind, DomainSpec
from .quadrature import integrate_interval, integrate_triangle


@dataclass(frozen=True)
class ZetaValue:
    s: float
    value: float
    tail_bound: float


@dataclass(frozen=True)
class VolumeReport:
    kind: DomainKind
    volume: float
    error: float


def _tail_bound(radius: float, s: float) -> float:
    """Bound on the sum of norm^-s over canonical points of norm > radius.

    Quarter-plane lattice counting: about pi/4 points per unit of norm,
    plus a boundary term; the constant is deliberately generous.
    """
    return (math.pi / 4 + 1) * radius ** (1 - s) / (s - 1) \
        + radius ** (-s) * (math.sqrt(radius) + 2)


_MAX_RADIUS = 4e9      # ~3e9 summed terms; larger requests are refused


def zeta_qi(s: float, tol: float = 1e-8) -> ZetaValue:
    """Sum of norm^-s over canonical associates (Re > 0, Im >= 0).

    Summation runs over all norms up to a radius chosen so the tail
    bound is below tol; the bound is returned alongside the value.
    """
    if not s > 1:
        raise ValueError("the series converges only for s > 1")
    if not tol > 0:
        raise ValueError("tolerance must be positive")
    radius = 64.0
    while _tail_bound(radius, s) > tol:
        radius *= 2
        if radius > _MAX_RADIUS:
            raise ValueError(
                f"tolerance {tol} at s={s} needs more than {_MAX_RADIUS:.0e} "
                "norm values; request a looser tolerance")
    r_int = int(radius)
    row_sums = []
    for a in range(1, isqrt(r_int) + 1):
        bmax = isqrt(r_int - a * a)
        b = np.arange(0, bmax + 1, dtype=np.float64)
        row_sums.append(np.sum((a * a + b * b) ** (-s)))
    return ZetaValue(s, math.fsum(row_sums), _tail_bound(radius, s))


def zeta_qi_euler(s: float, norm_limit: int = 10 ** 6) -> float:
    """Euler product over canonical primes of norm <= norm_limit."""
    if not s > 1:
        raise ValueError("the product converges only for s > 1")
    sieve = bytearray([1]) * (norm_limit + 1)
    sieve[:2] = b"\x00\x00"
    for p in range(2, isqrt(norm_limit) + 1):
        if sieve[p]:
            sieve[p * p::p] = b"\x00" * len(sieve[p * p::p])
    log_total = 0.0
    for p in range(2, norm_limit + 1):
        if not sieve[p]:
            continue
        if p == 2:
            log_total -= math.log1p(-2.0 ** (-s))
        elif p % 4 == 1:
            log_total -= 2 * math.log1p(-float(p) ** (-s))
        elif p * p <= norm_limit:
            log_total -= math.log1p(-float(p) ** (-2 * s))
    return math.exp(log_total)


def lambda_zeta_qi(s: float, tol: float = 1e-8) -> float:
    """Completed value pi^-s * Gamma(s) * zeta_qi(s)."""
    if not s > 1:
        raise ValueError("completed value requires s > 1")
    return math.pi ** (-s) * math.gamma(s) * zeta_qi(s, tol).value


def lambda_zeta_q(s: float) -> float:
    """Completed value pi^(-s/2) * Gamma(s/2) * zeta(s)."""
    if not s > 1:
        raise ValueError("completed value requires s > 1")
    return math.pi ** (-s / 2) * math.gamma(s / 2) * float(_riemann_zeta(s))


def covolume_sl_n(n: int, tol: float = 1e-8) -> float:
    """Covolume of the rank-n unimodular group over the Gaussian integers,
    in the symmetric normalization: the product of completed values at
    2..n (empty product 1 at n = 1)."""
    if n < 1:
        raise ValueError("rank must be >= 1")
    out = 1.0
    for k in range(2, n + 1):
        out *= lambda_zeta_qi(k, tol)
    return out


def covolume_sl_n_real(n: int) -> float:
    """Covolume of the rank-n unimodular group over the rational integers."""
    if n < 1:
        raise ValueError("rank must be >= 1")
    out = 1.0
    for k in range(2, n + 1):
        out *= lambda_zeta_q(k)
    return out


def covolume_gamma(tol: float = 1e-8) -> float:
    """Covolume of the orthogonal-group lattice: half the rank-2 value."""
    return 0.5 * covolume_sl_n(2, tol)


def covolume_gamma_int() -> float:
    """Covolume of the real-form lattice: three halves of the rank-2 value
    (analytically pi/4)."""
    return 1.5 * covolume_sl_n_real(2)


def index_ratio_covolume(base_covol: float, idx_num: int, idx_den: int) -> float:
    """Covolume rescaling of commensurable lattices by an index ratio."""
    if idx_den == 0:
        raise ValueError("zero index denominator")
    if idx_num <= 0 or idx_den < 0:
        raise ValueError("indices must be positive")
    return base_covol * idx_num / idx_den


def hyp_volume(spec: DomainSpec) -> VolumeReport:
    """Hyperbolic volume of a modelled fundamental domain.

    Half-space domains integrate dx1 dx2 / (2 f(x)^2) over the base with
    f the hemisphere lower envelope; half-plane domains integrate
    dx / f(x).
    """
    if spec.kind is DomainKind.GAMMA_INT_H2:
        value, err = integrate_interval(
            lambda x: 1.0 / math.sqrt(2.0 - (x - 1.0) ** 2), 0.0, 2.0, rel_tol=1e-9)
        return VolumeReport(spec.kind, value, err)
    if spec.kind is DomainKind.SL2Z_H2:
        value, err = integrate_interval(
            lambda x: 1.0 / math.sqrt(1.0 - x * x), -0.5, 0.5, rel_tol=1e-9)
        return VolumeReport(spec.kind, value, err)
    if spec.kind is DomainKind.GAMMA_H3:
        value, err = integrate_triangle(
            lambda x: 1.0 / (2.0 * (2.0 - abs(x - 1.0) ** 2)), TRIANGLE, rel_tol=1e-7)
        return VolumeReport(spec.kind, value, err)
    if spec.kind is DomainKind.PICARD_H3:
        f = lambda x: 1.0 / (2.0 * (1.0 - abs(x) ** 2))
        lower = (-0.5 + 0j, 0.5 + 0j, 0.5 + 0.5j)
        upper = (-0.5 + 0j, 0.5 + 0.5j, -0.5 + 0.5j)
        v1, e1 = integrate_triangle(f, lower, rel_tol=1e-7)
        v2, e2 = integrate_triangle(f, upper, rel_tol=1e-7)
        return VolumeReport(spec.kind, v1 + v2, e1 + e2)
    raise ValueError(f"unknown domain kind {spec.kind}")
