"""Exact structure of the preimage lattice in SL(2,C) and its real form.

A 2x2 matrix of determinant 1 belongs to the lattice exactly when the
nine entries of its 3x3 conjugation image are Gaussian integers.  Every
member alpha has a unique normal form (i, delta, alpha') with
alpha' = w8^delta * (1+i)^(i/2) * alpha integral, i in {0, 2} and delta
in {0, 1}; determinants satisfy det(alpha') = i^delta * (1+i)^i.  The
members split into six cosets of the mod-(1+i) congruence subgroup of
SL(2, Z[i]), and determinant-N integer matrices split into unimodular
orbits indexed by (divisor, residue) pairs via an upper-triangular
factorization.  The real points form the analogous rank-1 lattice inside
SL(2, R), with sqrt(2) denominators.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .spin import Mat2, tilde_conj
from .zi import (
    C8_I,
    C8_INV_ONE_PLUS_I,
    C8_INV_SQRT2,
    C8_ONE,
    C8_SQRT2,
    C8_W8,
    C8_W8_INV,
    C8_ZERO,
    Cyc8,
    GaussInt,
    I,
    ONE,
    ONE_MINUS_I,
    ONE_PLUS_I,
    ZERO,
    gcd,
    gcd_bezout,
    general_residue,
    reduce_mod,
    standardize,
)

GMat = tuple[tuple[GaussInt, GaussInt], tuple[GaussInt, GaussInt]]


class LatticeError(RuntimeError):
    """A structural invariant of the lattice failed; indicates a bug."""


class XiClass(enum.Enum):
    """The three fibers of entry-parity reduction on SL(2, Z[i])."""

    XI1 = "Xi1"
    XI2 = "Xi2"
    XI12 = "Xi12"


@dataclass(frozen=True)
class CosetLabel:
    """Label of one of the six congruence-subgroup cosets in the lattice."""

    i: int
    delta: int
    epsilon: Optional[int] = None


class LatticeElem:
    """Lattice member in normal form (i, delta, alpha')."""

    __slots__ = ("i", "delta", "alpha_prime")

    def __init__(self, i: int, delta: int, alpha_prime: GMat):
        if i not in (0, 2) or delta not in (0, 1):
            raise ValueError("normal form requires i in {0,2}, delta in {0,1}")
        self.i = i
        self.delta = delta
        self.alpha_prime = alpha_prime

    def __eq__(self, other) -> bool:
        if not isinstance(other, LatticeElem):
            return NotImplemented
        return (self.i, self.delta, self.alpha_prime) == (
            other.i, other.delta, other.alpha_prime)

    def __hash__(self) -> int:
        return hash((self.i, self.delta, self.alpha_prime))

    def __repr__(self) -> str:
        (a, b), (c, d) = self.alpha_prime
        return f"LatticeElem(i={self.i}, delta={self.delta}, [[{a},{b}],[{c},{d}]])"

    def matrix(self) -> Mat2:
        """The represented matrix alpha' / (w8^delta * (1+i)^(i/2))."""
        s = _INV_SCALE[(self.i, self.delta)]
        (a, b), (c, d) = self.alpha_prime
        return Mat2.from_gauss(a, b, c, d).scale(s)

    def is_identity(self) -> bool:
        return self.i == 0 and self.delta == 0 and self.alpha_prime in (
            _as_gmat(ONE, ZERO, ZERO, ONE),
            _as_gmat(-ONE, ZERO, ZERO, -ONE),
        )

    def to_json(self):
        (a, b), (c, d) = self.alpha_prime
        return {
            "i": self.i,
            "delta": self.delta,
            "alpha_prime": [[str(a), str(b)], [str(c), str(d)]],
        }

    @classmethod
    def from_json(cls, obj) -> "LatticeElem":
        rows = obj["alpha_prime"]
        ap = _as_gmat(
            GaussInt.parse(rows[0][0]), GaussInt.parse(rows[0][1]),
            GaussInt.parse(rows[1][0]), GaussInt.parse(rows[1][1]))
        return cls(int(obj["i"]), int(obj["delta"]), ap)

    @classmethod
    def identity(cls) -> "LatticeElem":
        return cls(0, 0, _as_gmat(ONE, ZERO, ZERO, ONE))


class RealLatticeElem:
    """Real-form member alpha' / sqrt(2)^delta with integer alpha'."""

    __slots__ = ("delta", "alpha_prime")

    def __init__(self, delta: int, alpha_prime: tuple[tuple[int, int], tuple[int, int]]):
        if delta not in (0, 1):
            raise ValueError("sqrt(2) exponent must be 0 or 1")
        self.delta = delta
        self.alpha_prime = alpha_prime

    def __eq__(self, other) -> bool:
        if not isinstance(other, RealLatticeElem):
            return NotImplemented
        return (self.delta, self.alpha_prime) == (other.delta, other.alpha_prime)

    def __hash__(self) -> int:
        return hash((self.delta, self.alpha_prime))

    def __repr__(self) -> str:
        return f"RealLatticeElem(delta={self.delta}, {self.alpha_prime})"

    def matrix(self) -> Mat2:
        (a, b), (c, d) = self.alpha_prime
        m = Mat2(a, b, c, d)
        return m.scale(C8_INV_SQRT2) if self.delta else m

    def to_json(self):
        (a, b), (c, d) = self.alpha_prime
        return {"sqrt2_pow": self.delta, "alpha_prime": [[a, b], [c, d]]}


def _as_gmat(a: GaussInt, b: GaussInt, c: GaussInt, d: GaussInt) -> GMat:
    return ((a, b), (c, d))


# Scalars w8^delta * (1+i)^(i/2) and their inverses, per normal-form class.
_SCALE = {
    (0, 0): C8_ONE,
    (0, 1): C8_W8,
    (2, 0): Cyc8(ONE_PLUS_I, 0, 0),
    (2, 1): Cyc8(0, ONE_PLUS_I, 0),          # w8 * (1+i)
}
_INV_SCALE = {
    (0, 0): C8_ONE,
    (0, 1): C8_W8_INV,
    (2, 0): C8_INV_ONE_PLUS_I,
    (2, 1): Cyc8(0, GaussInt(0, -1), 1),     # 1/(w8*(1+i)) = -i*w8/(1+i)
}


def is_member_oracle(m: Mat2) -> bool:
    """Definitional test: determinant 1 and integral 3x3 image."""
    if m.det() != C8_ONE:
        return False
    return all(entry.is_gauss() for row in tilde_conj(m) for entry in row)


def classify(m: Mat2) -> Optional[LatticeElem]:
    """Normal form (i, delta, alpha') of a member, or None."""
    if not is_member_oracle(m):
        return None
    for key in ((0, 0), (0, 1), (2, 0), (2, 1)):
        scaled = m.scale(_SCALE[key])
        ents = scaled.entries()
        if all(e.is_gauss() for e in ents):
            a, b, c, d = (e.to_gauss() for e in ents)
            i, delta = key
            det = a * d - b * c
            expected = ONE.times_i_pow(delta) if i == 0 else \
                (ONE_PLUS_I * ONE_PLUS_I).times_i_pow(delta)
            if det != expected:
                raise LatticeError(f"normal form of {m!r} has determinant {det}")
            if i == 2 and any(g.norm() % 2 == 0 for g in (a, b, c, d)):
                raise LatticeError(f"even entry in denominator-class form of {m!r}")
            return LatticeElem(i, delta, _as_gmat(a, b, c, d))
    raise LatticeError(f"member {m!r} admits no normal form")


_XI_BY_PARITY = {
    (1, 0, 0, 1): XiClass.XI12,
    (0, 1, 1, 0): XiClass.XI12,
    (0, 1, 1, 1): XiClass.XI1,
    (1, 1, 0, 1): XiClass.XI1,
    (1, 1, 1, 0): XiClass.XI2,
    (1, 0, 1, 1): XiClass.XI2,
}


def xi_classify(m: GMat) -> XiClass:
    """Which parity fiber of SL(2, Z[i]) a unimodular matrix lies in."""
    (a, b), (c, d) = m
    if a * d - b * c != ONE:
        raise ValueError("parity classification applies to determinant-1 matrices")
    key = tuple((g.re + g.im) % 2 for g in (a, b, c, d))
    return _XI_BY_PARITY[key]


def hecke_decompose(m: GMat) -> tuple[GMat, GaussInt, GaussInt]:
    """Factor m = xi * [[m0, x], [0, N/m0]] with xi unimodular, exactly.

    N = det(m) != 0, m0 | N with N/m0 standard, and x the canonical
    residue mod N/m0.  The factorization is unique and identifies the
    unimodular orbit of m among determinant-N integer matrices.
    """
    (a, b), (c, d) = m
    n_det = a * d - b * c
    if not n_det:
        raise ValueError("singular matrix has no upper-triangular factorization")
    g = gcd(a, c)
    t = n_det.exact_div(g)
    m0 = g.times_i_pow(standardize(t).unit_exp)
    nm = n_det.exact_div(m0)
    p = a.exact_div(m0)
    r = c.exact_div(m0)
    _, s0, q0 = gcd_bezout(p, r)      # p*s0 - r*q0 = 1
    v = -q0 * d + s0 * b
    x = _residue(v, nm)
    # xi = m * adj([[m0, x], [0, nm]]) / N, with adj = [[nm, -x], [0, m0]]
    xi = _as_gmat(
        (a * nm).exact_div(n_det),
        (b * m0 - a * x).exact_div(n_det),
        (c * nm).exact_div(n_det),
        (d * m0 - c * x).exact_div(n_det),
    )
    (p1, q1), (r1, s1) = xi
    if p1 * s1 - q1 * r1 != ONE:
        raise LatticeError("factorization produced a non-unimodular cofactor")
    return xi, m0, x


def _residue(v: GaussInt, modulus: GaussInt) -> GaussInt:
    nrm = modulus.norm()
    if nrm == 1:
        return ZERO
    n = nrm.bit_length() - 1
    if 1 << n == nrm:
        return reduce_mod(v, n)
    return general_residue(v, modulus)


def hecke_recompose(xi: GMat, m0: GaussInt, x: GaussInt, n_det: GaussInt) -> GMat:
    (p, q), (r, s) = xi
    nm = n_det.exact_div(m0)
    return _as_gmat(p * m0, p * x + q * nm, r * m0, r * x + s * nm)


# Fixed generators and representatives.

T_ONE_PLUS_I = Mat2.from_gauss(ONE, ONE_PLUS_I, ZERO, ONE)
T_ONE_MINUS_I = Mat2.from_gauss(ONE, ONE_MINUS_I, ZERO, ONE)
S_MAT = Mat2.from_gauss(ZERO, -ONE, ONE, ZERO)
R_QUARTER = Mat2(C8_W8, C8_ZERO, C8_ZERO, C8_W8_INV)

XI12_GENERATORS = (T_ONE_PLUS_I, T_ONE_MINUS_I, S_MAT)
STABILIZER_GENERATORS = (T_ONE_PLUS_I, T_ONE_MINUS_I, R_QUARTER)

_XI2_FIXED = Mat2.from_gauss(ONE, ZERO, ONE, ONE)


@lru_cache(maxsize=1)
def coset_reps() -> tuple[LatticeElem, ...]:
    """Six coset representatives, one per label.

    Labels run (0,0), (0,1), (2,0,0), (2,0,1), (2,1,0), (2,1,1); the
    denominator-class representatives are built from the fixed lower
    unipotent [[1,0],[1,1]] times [[i^(1+delta), i^eps], [0, 2]] and the
    scalar 1/(w8^delta (1+i)).
    """
    mats = [Mat2.identity(), Mat2(C8_I, 0, 0, C8_ONE).scale(C8_W8_INV)]
    for delta in (0, 1):
        for eps in (0, 1):
            upper = Mat2.from_gauss(
                ONE.times_i_pow(1 + delta), ONE.times_i_pow(eps),
                ZERO, GaussInt(2, 0))
            mats.append((_XI2_FIXED * upper).scale(_INV_SCALE[(2, delta)]))
    reps = []
    for m in mats:
        elem = classify(m)
        if elem is None:
            raise LatticeError("coset representative failed the membership test")
        reps.append(elem)
    order = [(0, 0, None), (0, 1, None), (2, 0, 0), (2, 0, 1), (2, 1, 0), (2, 1, 1)]
    labeled = {}
    for e in reps:
        lab = coset_of(e)
        labeled[(lab.i, lab.delta, lab.epsilon)] = e
    return tuple(labeled[k] for k in order)


def coset_of(g: LatticeElem) -> CosetLabel:
    """Label (i, delta[, epsilon]) of the coset containing g."""
    if g.i == 0:
        return CosetLabel(0, g.delta, None)
    _, m0, x = hecke_decompose(g.alpha_prime)
    if x == ONE:
        eps = 0
    elif x == I:
        eps = 1
    else:
        raise LatticeError(f"unexpected residue {x} in coset identification")
    return CosetLabel(2, g.delta, eps)


def mul(g1: LatticeElem, g2: LatticeElem) -> LatticeElem:
    out = classify(g1.matrix() * g2.matrix())
    if out is None:
        raise LatticeError("product of members failed the membership test")
    return out


def inv(g: LatticeElem) -> LatticeElem:
    out = classify(g.matrix().adjugate())
    if out is None:
        raise LatticeError("inverse of a member failed the membership test")
    return out


def same_coset(g1: LatticeElem, g2: LatticeElem) -> bool:
    """Whether g1 and g2 lie in one congruence-subgroup coset."""
    quotient = classify(g1.matrix() * g2.matrix().adjugate())
    if quotient is None:
        raise LatticeError("coset comparison applied outside the lattice")
    if quotient.i != 0 or quotient.delta != 0:
        return False
    return xi_classify(quotient.alpha_prime) is XiClass.XI12


# Real form -----------------------------------------------------------------

_REAL_UPPER = Mat2.from_gauss(ONE, -ONE, ZERO, GaussInt(2, 0))

_XI12_PARITIES = {(1, 0, 0, 1), (0, 1, 1, 0)}
_XI2_PARITIES = {(1, 1, 1, 0), (1, 0, 1, 1)}


def is_member_real(m: Mat2) -> Optional[RealLatticeElem]:
    """Real-form membership: integral branch or sqrt(2)-denominator branch."""
    if m.det() != C8_ONE:
        return None
    ents = m.entries()
    if all(e.is_real_int() for e in ents):
        ints = tuple(e.to_gauss().re for e in ents)
        if tuple(v % 2 for v in ints) in _XI12_PARITIES:
            a, b, c, d = ints
            return RealLatticeElem(0, ((a, b), (c, d)))
        return None
    scaled = m.scale(C8_SQRT2)
    ents = scaled.entries()
    if not all(e.is_real_int() for e in ents):
        return None
    a, b, c, d = (e.to_gauss().re for e in ents)
    # Need [[a,b],[c,d]] = xi * [[1,-1],[0,2]] with xi integral unimodular
    # in the second parity fiber; xi = [[a, (a+b)/2], [c, (c+d)/2]].
    if (a + b) % 2 or (c + d) % 2:
        return None
    xa, xb, xc, xd = a, (a + b) // 2, c, (c + d) // 2
    if xa * xd - xb * xc != 1:
        return None
    if (xa % 2, xb % 2, xc % 2, xd % 2) not in _XI2_PARITIES:
        return None
    return RealLatticeElem(1, ((a, b), (c, d)))


def real_from_ints(rows: tuple[tuple[int, int], tuple[int, int]], sqrt2_pow: int) -> Mat2:
    """Exact matrix rows / sqrt(2)^sqrt2_pow."""
    (a, b), (c, d) = rows
    m = Mat2(a, b, c, d)
    for _ in range(sqrt2_pow):
        m = m.scale(C8_INV_SQRT2)
    return m
