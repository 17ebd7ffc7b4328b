"""Adaptive quadrature on intervals and planar triangles.

Intervals use a 7-point Gauss-Legendre rule with bisection refinement;
triangles use the 7-point degree-5 symmetric rule with midpoint
subdivision into four congruent children.  Both recurse until the
parent/children discrepancy meets the relative target, and report the
accumulated discrepancy as the error estimate.
"""

from __future__ import annotations

from typing import Callable


class QuadratureError(RuntimeError):
    """Refinement failed to converge within the depth budget."""


_GL7_NODES = (
    -0.9491079123427585, -0.7415311855993944, -0.4058451513773972,
    0.0,
    0.4058451513773972, 0.7415311855993944, 0.9491079123427585,
)
_GL7_WEIGHTS = (
    0.1294849661688697, 0.2797053914892766, 0.3818300505051189,
    0.4179591836734694,
    0.3818300505051189, 0.2797053914892766, 0.1294849661688697,
)


def _gl7(f: Callable[[float], float], a: float, b: float) -> float:
    mid = 0.5 * (a + b)
    half = 0.5 * (b - a)
    return half * sum(w * f(mid + half * t) for t, w in zip(_GL7_NODES, _GL7_WEIGHTS))


def integrate_interval(f: Callable[[float], float], a: float, b: float,
                       rel_tol: float = 1e-7, max_depth: int = 40) -> tuple[float, float]:
    """Adaptive integral of f over [a, b]; returns (value, error estimate)."""
    scale = max(abs(_gl7(f, a, b)), 1e-30)

    def recurse(lo: float, hi: float, whole: float, depth: int) -> tuple[float, float]:
        mid = 0.5 * (lo + hi)
        left = _gl7(f, lo, mid)
        right = _gl7(f, mid, hi)
        diff = abs(whole - left - right)
        if diff <= rel_tol * scale * (hi - lo) / (b - a) or diff < 1e-16 * scale:
            return left + right, diff
        if depth >= max_depth:
            raise QuadratureError("interval refinement did not converge")
        v1, e1 = recurse(lo, mid, left, depth + 1)
        v2, e2 = recurse(mid, hi, right, depth + 1)
        return v1 + v2, e1 + e2

    return recurse(a, b, _gl7(f, a, b), 0)


# Degree-5 symmetric triangle rule: centroid plus two symmetric orbits.
_TRI_POINTS = (
    ((1 / 3, 1 / 3, 1 / 3), 0.225),
    ((0.0597158717897698, 0.4701420641051151, 0.4701420641051151), 0.1323941527885062),
    ((0.4701420641051151, 0.0597158717897698, 0.4701420641051151), 0.1323941527885062),
    ((0.4701420641051151, 0.4701420641051151, 0.0597158717897698), 0.1323941527885062),
    ((0.7974269853530873, 0.1012865073234563, 0.1012865073234563), 0.1259391805448271),
    ((0.1012865073234563, 0.7974269853530873, 0.1012865073234563), 0.1259391805448271),
    ((0.1012865073234563, 0.1012865073234563, 0.7974269853530873), 0.1259391805448271),
)

Triangle = tuple[complex, complex, complex]


def _tri_area(tri: Triangle) -> float:
    v0, v1, v2 = tri
    u, v = v1 - v0, v2 - v0
    return 0.5 * abs(u.real * v.imag - u.imag * v.real)


def _tri_rule(f: Callable[[complex], float], tri: Triangle) -> float:
    v0, v1, v2 = tri
    area = _tri_area(tri)
    total = 0.0
    for (l0, l1, l2), w in _TRI_POINTS:
        total += w * f(l0 * v0 + l1 * v1 + l2 * v2)
    return area * total


def _tri_children(tri: Triangle) -> tuple[Triangle, ...]:
    v0, v1, v2 = tri
    m01, m12, m20 = (v0 + v1) / 2, (v1 + v2) / 2, (v2 + v0) / 2
    return (
        (v0, m01, m20), (m01, v1, m12), (m20, m12, v2), (m01, m12, m20),
    )


def integrate_triangle(f: Callable[[complex], float], tri: Triangle,
                       rel_tol: float = 1e-5, max_depth: int = 24) -> tuple[float, float]:
    """Adaptive integral of f over a triangle; returns (value, estimate)."""
    total_area = _tri_area(tri)
    if total_area < 1e-15:
        raise ValueError("degenerate triangle")
    scale = max(abs(_tri_rule(f, tri)), 1e-30)

    def recurse(t: Triangle, whole: float, depth: int) -> tuple[float, float]:
        children = _tri_children(t)
        parts = [_tri_rule(f, c) for c in children]
        diff = abs(whole - sum(parts))
        if diff <= rel_tol * scale * _tri_area(t) / total_area or diff < 1e-16 * scale:
            return sum(parts), diff
        if depth >= max_depth:
            raise QuadratureError("triangle refinement did not converge")
        value = 0.0
        err = 0.0
        for c, part in zip(children, parts):
            v, e = recurse(c, part, depth + 1)
            value += v
            err += e
        return value, err

    return recurse(tri, _tri_rule(f, tri), 0)
