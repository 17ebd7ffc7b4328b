"""Upper half-space and half-plane models with fractional linear actions.

Points of the half-space are x + y*j with x complex and y > 0; 2x2
complex matrices of determinant 1 act by quaternionic fractional linear
transformations, which close over the (complex, real) split since the
points have no fourth component.  Heights transform through the squared
norm of the second row, which also gives the log-height displacement
function used to carve out fundamental domains.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

EPS_GEO = 1e-9


class DomainError(ValueError):
    """The transformation pushes the point to the boundary at infinity."""


class Region(enum.Enum):
    INTERIOR = "interior"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"


@dataclass(frozen=True)
class H3Point:
    x: complex
    y: float

    def __post_init__(self):
        if not (self.y > 0 and math.isfinite(self.y) and
                math.isfinite(self.x.real) and math.isfinite(self.x.imag)):
            raise ValueError(f"not an upper half-space point: {self!r}")


@dataclass(frozen=True)
class H2Point:
    x: float
    y: float

    def __post_init__(self):
        if not (self.y > 0 and math.isfinite(self.y) and math.isfinite(self.x)):
            raise ValueError(f"not an upper half-plane point: {self!r}")

    def embed(self) -> H3Point:
        return H3Point(complex(self.x, 0.0), self.y)


def _unpack(g) -> tuple[complex, complex, complex, complex]:
    (a, b), (c, d) = g[0], g[1]
    return complex(a), complex(b), complex(c), complex(d)


def act(g, z: H3Point, check_det: bool = True) -> H3Point:
    """Fractional linear action of a determinant-1 matrix on half-space."""
    a, b, c, d = _unpack(g)
    if check_det and abs(a * d - b * c - 1) > 1e-9:
        raise ValueError("action requires determinant 1")
    den_x = c * z.x + d
    den = abs(den_x) ** 2 + abs(c) ** 2 * z.y ** 2
    if den < 1e-300:
        raise DomainError("point maps to the boundary at infinity")
    x_new = ((a * z.x + b) * den_x.conjugate() + a * c.conjugate() * z.y ** 2) / den
    return H3Point(x_new, z.y / den)


def height_after(c: complex, d: complex, z: H3Point) -> float:
    """Height of the image point, from the second row (c, d) alone."""
    if c == 0 and d == 0:
        raise ValueError("second row must be nonzero")
    return z.y / (abs(c * z.x + d) ** 2 + abs(c) ** 2 * z.y ** 2)


def delta1(g, z: H3Point) -> float:
    """Log-height displacement log(y(gz)/y(z)); positive when g raises z."""
    _, _, c, d = _unpack(g)
    return -math.log(abs(c * z.x + d) ** 2 + abs(c) ** 2 * z.y ** 2)


def iwasawa(z: H3Point) -> tuple[float, float, float]:
    """Coordinates (-log y, Re x, Im x)."""
    return (-math.log(z.y), z.x.real, z.x.imag)


def iwasawa_inverse(t1: float, t2: float, t3: float) -> H3Point:
    return H3Point(complex(t2, t3), math.exp(-t1))


def in_triangle(x: complex, vertices: tuple[complex, complex, complex],
                eps: float = EPS_GEO) -> Region:
    """Signed-distance triangle membership with an eps boundary band."""
    v0, v1, v2 = (complex(v) for v in vertices)
    area2 = _cross(v1 - v0, v2 - v0)
    if abs(area2) < 1e-12:
        raise ValueError("degenerate triangle")
    orient = 1.0 if area2 > 0 else -1.0
    worst = math.inf
    for p, q in ((v0, v1), (v1, v2), (v2, v0)):
        edge = q - p
        s = orient * _cross(edge, x - p) / abs(edge)
        worst = min(worst, s)
    if worst < -eps:
        return Region.OUTSIDE
    if worst <= eps:
        return Region.BOUNDARY
    return Region.INTERIOR


def _cross(u: complex, v: complex) -> float:
    return u.real * v.imag - u.imag * v.real


def above_sphere(z: H3Point, m: complex, r2: float, eps: float = EPS_GEO) -> Region:
    """Position relative to the hemisphere |x - m|^2 + y^2 = r2."""
    if not r2 > 0:
        raise ValueError("squared radius must be positive")
    val = abs(z.x - m) ** 2 + z.y ** 2 - r2
    if val < -eps:
        return Region.OUTSIDE
    if val <= eps:
        return Region.BOUNDARY
    return Region.INTERIOR


def act_h2(g, z: H2Point, check_det: bool = True) -> H2Point:
    """Fractional linear action of a real determinant-1 matrix on the plane."""
    a, b, c, d = _unpack(g)
    for v in (a, b, c, d):
        if abs(v.imag) > 1e-12 * max(1.0, abs(v)):
            raise ValueError("plane action requires real entries")
    a, b, c, d = a.real, b.real, c.real, d.real
    if check_det and abs(a * d - b * c - 1) > 1e-9:
        raise ValueError("action requires determinant 1")
    den = (c * z.x + d) ** 2 + c ** 2 * z.y ** 2
    if den < 1e-300:
        raise DomainError("point maps to the boundary at infinity")
    x_new = ((a * z.x + b) * (c * z.x + d) + a * c * z.y ** 2) / den
    return H2Point(x_new, z.y / den)
