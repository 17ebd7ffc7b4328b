"""Fundamental domains and highest-point reduction.

Four domains are modelled.  On half-space: the Ford-type domain of the
orthogonal-group lattice (triangle base with one sqrt(2) hemisphere) and
the classical domain of SL(2, Z[i]) (half-square base, unit hemisphere).
On the half-plane: the real-form domain (interval base [0, 2], sqrt(2)
hemisphere at 1) and the modular domain of SL(2, Z).

Reduction uses the highest-point strategy: translate the base coordinate
into the cusp cross-section cell, apply the hemisphere inversion while
the point lies strictly inside (each such step strictly raises the
height, so the loop terminates), then tidy up with the cusp stabilizer.
Group elements are accumulated exactly and the output point is checked
against the exact element at the end.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Union

from . import lattice as lat
from .halfspace import (
    EPS_GEO,
    H2Point,
    H3Point,
    Region,
    above_sphere,
    act,
    act_h2,
    in_triangle,
)
from .spin import Mat2
from .zi import C8_INV_ONE_PLUS_I, GaussInt, I, ONE, ONE_PLUS_I, ZERO


class ReductionError(RuntimeError):
    """The reduction loop hit its iteration cap (numerical stagnation)."""


class DomainKind(str, enum.Enum):
    GAMMA_H3 = "gamma-h3"
    PICARD_H3 = "picard-h3"
    GAMMA_INT_H2 = "gamma-int-h2"
    SL2Z_H2 = "sl2z-h2"


@dataclass(frozen=True)
class DomainSpec:
    kind: DomainKind

    @property
    def is_h3(self) -> bool:
        return self.kind in (DomainKind.GAMMA_H3, DomainKind.PICARD_H3)


GAMMA_H3 = DomainSpec(DomainKind.GAMMA_H3)
PICARD_H3 = DomainSpec(DomainKind.PICARD_H3)
GAMMA_INT_H2 = DomainSpec(DomainKind.GAMMA_INT_H2)
SL2Z_H2 = DomainSpec(DomainKind.SL2Z_H2)

TRIANGLE = (1 + 0j, 2 + 0j, 1 + 1j)


@dataclass
class ReductionResult:
    element: Union[lat.LatticeElem, lat.RealLatticeElem, tuple]
    point: Union[H3Point, H2Point]
    iterations: int
    word: list[str] = field(default_factory=list)


def _combine(parts: list[Region]) -> Region:
    if any(r is Region.OUTSIDE for r in parts):
        return Region.OUTSIDE
    if any(r is Region.BOUNDARY for r in parts):
        return Region.BOUNDARY
    return Region.INTERIOR


def _band(value: float, lo: float, hi: float, eps: float = EPS_GEO) -> Region:
    if value < lo - eps or value > hi + eps:
        return Region.OUTSIDE
    if value <= lo + eps or value >= hi - eps:
        return Region.BOUNDARY
    return Region.INTERIOR


def contains(spec: DomainSpec, z) -> Region:
    """Three-way membership of a point in the chosen domain."""
    if spec.kind is DomainKind.GAMMA_H3:
        if not isinstance(z, H3Point):
            raise TypeError("this domain lives in the upper half-space")
        return _combine([
            in_triangle(z.x, TRIANGLE),
            above_sphere(z, 1 + 0j, 2.0),
        ])
    if spec.kind is DomainKind.PICARD_H3:
        if not isinstance(z, H3Point):
            raise TypeError("this domain lives in the upper half-space")
        return _combine([
            _band(z.x.real, -0.5, 0.5),
            _band(z.x.imag, 0.0, 0.5),
            above_sphere(z, 0j, 1.0),
        ])
    if spec.kind is DomainKind.GAMMA_INT_H2:
        if not isinstance(z, H2Point):
            raise TypeError("this domain lives in the upper half-plane")
        return _combine([
            _band(z.x, 0.0, 2.0),
            above_sphere(z.embed(), 1 + 0j, 2.0),
        ])
    if spec.kind is DomainKind.SL2Z_H2:
        if not isinstance(z, H2Point):
            raise TypeError("this domain lives in the upper half-plane")
        return _combine([
            _band(z.x, -0.5, 0.5),
            above_sphere(z.embed(), 0j, 1.0),
        ])
    raise ValueError(f"unknown domain kind {spec.kind}")


def in_F1(z: H3Point) -> Region:
    """Height-maximal region for the orthogonal-group lattice.

    Defined by |x - d|^2 + y^2 >= 2 for every d = 1 mod (1+i); only the
    finitely many d within distance sqrt(2) of x can fail, so those are
    enumerated from the sublattice coordinates of x - 1.
    """
    worst = Region.INTERIOR
    for d in _odd_points_near(z.x, 2.0):
        r = above_sphere(z, d, 2.0)
        if r is Region.OUTSIDE:
            return Region.OUTSIDE
        if r is Region.BOUNDARY:
            worst = Region.BOUNDARY
    return worst


def _odd_points_near(x: complex, r2: float):
    """Points of 1 + (1+i)Z[i] within squared distance r2 (+slack) of x."""
    w = (x - 1) / (1 + 1j)
    p0, q0 = round(w.real), round(w.imag)
    out = []
    for dp in range(-2, 3):
        for dq in range(-2, 3):
            d = 1 + (1 + 1j) * complex(p0 + dp, q0 + dq)
            if abs(x - d) ** 2 <= r2 + 1e-6:
                out.append(d)
    return out


def in_G(x: complex) -> Region:
    """Membership in the cusp cross-section triangle."""
    return in_triangle(x, TRIANGLE)


# Exact generator matrices used while reducing.

_GAMMA0 = Mat2.from_gauss(I, ONE, I, GaussInt(3, 0)).scale(C8_INV_ONE_PLUS_I)
_ROT = lat.T_ONE_MINUS_I * lat.R_QUARTER        # rotation by pi/2 about 1


def _translation(w: GaussInt) -> Mat2:
    return Mat2.from_gauss(ONE, w, ZERO, ONE)


def _inversion_at(m: GaussInt) -> Mat2:
    """Member whose hemisphere |x - m|^2 + y^2 = 2 swaps inside and outside."""
    w = GaussInt(0, 3) - m
    g = _GAMMA0 * _translation(w)
    if not lat.is_member_oracle(g):
        raise lat.LatticeError(f"inversion element at {m} fell outside the lattice")
    return g


def _nearest_odd(x: complex) -> GaussInt:
    """Nearest point of 1 + (1+i)Z[i] to x."""
    w = (x - 1) / (1 + 1j)
    best = None
    for dp in (-1, 0, 1):
        for dq in (-1, 0, 1):
            p, q = round(w.real) + dp, round(w.imag) + dq
            cand = ONE + ONE_PLUS_I * GaussInt(p, q)
            dist = abs(x - cand.to_complex())
            if best is None or dist < best[0]:
                best = (dist, cand)
    return best[1]


def _stabilizer_word(x: complex) -> tuple[Mat2, complex, list[str]]:
    w = (x - 1) / (1 + 1j)
    p, q = round(w.real), round(w.imag)
    shift = -(ONE_PLUS_I * GaussInt(p, q))
    acc = _translation(shift)
    tokens = [] if not shift else [f"T({shift})"]
    x1 = x + shift.to_complex()
    for _ in range(4):
        if in_G(x1) is not Region.OUTSIDE:
            return acc, x1, tokens
        x1 = 1 + 1j * (x1 - 1)
        acc = _ROT * acc
        tokens.append("rot")
    raise ReductionError(f"stabilizer reduction failed at {x}")


def stabilizer_reduce(x: complex) -> tuple[lat.LatticeElem, complex]:
    """Move x into the cross-section triangle by cusp-stabilizer moves.

    First translate by the index-(1+i) sublattice into the square cell
    around 1, then rotate by quarter turns about 1 into the triangle.
    """
    acc, x1, _ = _stabilizer_word(x)
    elem = lat.classify(acc)
    if elem is None:
        raise lat.LatticeError("stabilizer word fell outside the lattice")
    return elem, x1


def reduce(spec: DomainSpec, z, max_iter: int = 10_000) -> ReductionResult:
    """Reduce z into the domain; returns the exact element, point, count."""
    if spec.kind is DomainKind.GAMMA_H3:
        return _reduce_gamma_h3(z, max_iter)
    if spec.kind is DomainKind.PICARD_H3:
        return _reduce_picard(z, max_iter)
    if spec.kind is DomainKind.GAMMA_INT_H2:
        return _reduce_gamma_int(z, max_iter)
    if spec.kind is DomainKind.SL2Z_H2:
        return _reduce_sl2z(z, max_iter)
    raise ValueError(f"unknown domain kind {spec.kind}")


def _check_result(spec: DomainSpec, z0, result: ReductionResult, matrix) -> None:
    if contains(spec, result.point) is Region.OUTSIDE:
        raise ReductionError("reduction terminated outside the domain")
    g = matrix.to_complex() if isinstance(matrix, Mat2) else matrix
    img = act(g, z0) if isinstance(result.point, H3Point) else act_h2(g, z0)
    err = abs(img.x - result.point.x) + abs(img.y - result.point.y)
    if err > 1e-8 * max(1.0, result.point.y):
        raise ReductionError(f"element/point mismatch after reduction: {err}")


def _reduce_gamma_h3(z: H3Point, max_iter: int) -> ReductionResult:
    if contains(GAMMA_H3, z) is Region.INTERIOR:
        return ReductionResult(lat.LatticeElem.identity(), z, 0, [])
    z0 = z
    acc = Mat2.identity()
    word: list[str] = []
    for it in range(max_iter):
        m = _nearest_odd(z.x)
        gap = abs(z.x - m.to_complex()) ** 2 + z.y ** 2
        if gap >= 2.0 - EPS_GEO:
            stab, _, tokens = _stabilizer_word(z.x)
            z = act(stab.to_complex(), z)
            acc = stab * acc
            word.extend(tokens)
            out = lat.classify(acc)
            if out is None:
                raise lat.LatticeError("reduction word fell outside the lattice")
            result = ReductionResult(out, z, it, word)
            _check_result(GAMMA_H3, z0, result, acc)
            return result
        g = _inversion_at(m)
        z = act(g.to_complex(), z)
        acc = g * acc
        word.append(f"inv({m})")
    raise ReductionError(f"no convergence within {max_iter} inversions")


def _reduce_picard(z: H3Point, max_iter: int) -> ReductionResult:
    z0 = z
    acc = ((ONE, ZERO), (ZERO, ONE))
    word: list[str] = []

    def apply(g_int, tag):
        nonlocal z, acc
        (p, q), (r, s) = g_int
        z = act(((p.to_complex(), q.to_complex()), (r.to_complex(), s.to_complex())), z)
        (pa, pb), (pc, pd) = acc
        acc = ((p * pa + q * pc, p * pb + q * pd), (r * pa + s * pc, r * pb + s * pd))
        word.append(tag)

    iterations = 0
    for it in range(max_iter):
        iterations = it
        shift = GaussInt(-round(z.x.real), -round(z.x.imag))
        if shift:
            apply(((ONE, shift), (ZERO, ONE)), f"T({shift})")
        if abs(z.x) ** 2 + z.y ** 2 >= 1.0 - EPS_GEO:
            break
        apply(((ZERO, -ONE), (ONE, ZERO)), "S")
    else:
        raise ReductionError(f"no convergence within {max_iter} inversions")
    if z.x.imag < -EPS_GEO:
        apply(((I, ZERO), (ZERO, -I)), "neg")
        shift = GaussInt(-round(z.x.real), 0)
        if shift:
            apply(((ONE, shift), (ZERO, ONE)), f"T({shift})")
    result = ReductionResult(acc, z, iterations, word)
    g = tuple(tuple(e.to_complex() for e in row) for row in acc)
    _check_result(PICARD_H3, z0, result, g)
    return result


_REAL_INV = lat.real_from_ints(((-1, -1), (1, -1)), 1)   # hemisphere at 1


def _reduce_gamma_int(z: H2Point, max_iter: int) -> ReductionResult:
    z0 = z
    acc = Mat2.identity()
    word: list[str] = []
    iterations = 0
    for it in range(max_iter):
        iterations = it
        k = round((z.x - 1) / 2)
        if k:
            t = _translation(GaussInt(-2 * k, 0))
            z = act_h2(t.to_complex(), z)
            acc = t * acc
            word.append(f"T({-2 * k})")
        if (z.x - 1) ** 2 + z.y ** 2 >= 2.0 - EPS_GEO:
            break
        z = act_h2(_REAL_INV.to_complex(), z)
        acc = _REAL_INV * acc
        word.append("inv(1)")
    else:
        raise ReductionError(f"no convergence within {max_iter} inversions")
    elem = lat.is_member_real(acc)
    if elem is None:
        raise lat.LatticeError("real reduction word fell outside the lattice")
    result = ReductionResult(elem, z, iterations, word)
    _check_result(GAMMA_INT_H2, z0, result, acc)
    return result


def _reduce_sl2z(z: H2Point, max_iter: int) -> ReductionResult:
    z0 = z
    acc = ((1, 0), (0, 1))
    word: list[str] = []

    def apply(g, tag):
        nonlocal z, acc
        z = act_h2(g, z)
        (p, q), (r, s) = g
        (pa, pb), (pc, pd) = acc
        acc = ((p * pa + q * pc, p * pb + q * pd), (r * pa + s * pc, r * pb + s * pd))
        word.append(tag)

    iterations = 0
    for it in range(max_iter):
        iterations = it
        k = round(z.x)
        if k:
            apply(((1, -k), (0, 1)), f"T({-k})")
        if z.x ** 2 + z.y ** 2 >= 1.0 - EPS_GEO:
            break
        apply(((0, -1), (1, 0)), "S")
    else:
        raise ReductionError(f"no convergence within {max_iter} inversions")
    result = ReductionResult(acc, z, iterations, word)
    _check_result(SL2Z_H2, z0, result, acc)
    return result


# The stabilizer element acting on the plane as x -> 2 - x: conjugate of the
# half-turn about 0 by the unit translation.
FOLD_AT_ONE = ((1j, -2j), (0j, -1j))


def _plane_section(z3: H3Point) -> Region:
    """Membership of a plane point in the half-space domain, read along
    the plane: the triangle meets the plane in the interval [1, 2]."""
    return _combine([
        _band(z3.x.real, 1.0, 2.0),
        above_sphere(z3, 1 + 0j, 2.0),
    ])


def _union(r1: Region, r2: Region) -> Region:
    if r1 is Region.INTERIOR or r2 is Region.INTERIOR:
        return Region.INTERIOR
    if r1 is Region.OUTSIDE and r2 is Region.OUTSIDE:
        return Region.OUTSIDE
    return Region.BOUNDARY


def relation_check(z: H2Point) -> bool:
    """Real domain membership versus the union of two half-space translates.

    The real-form domain should consist of the plane points lying in the
    half-space domain or in its image under the half-turn about 1; within
    the eps band of either boundary the comparison is vacuously satisfied.
    """
    lhs = contains(GAMMA_INT_H2, z)
    z3 = z.embed()
    rhs = _union(_plane_section(z3), _plane_section(act(FOLD_AT_ONE, z3)))
    if lhs is Region.BOUNDARY or rhs is Region.BOUNDARY:
        return True
    return (lhs is Region.INTERIOR) == (rhs is Region.INTERIOR)
