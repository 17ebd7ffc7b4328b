"""The conjugation homomorphism from 2x2 matrices to 3x3 matrices.

A unimodular 2x2 matrix acts on trace-zero 2x2 matrices by conjugation;
in the orthonormal basis of the half-trace form this induces an element
of SO(3), given by an explicit polynomial formula in the entries.  The
same polynomial extends to all 2x2 matrices (degree-2 homogeneous).  A
diagonal change of basis produces the real form: real 2x2 inputs map to
real 3x3 outputs preserving a signature-(2,1) form.

Exact entries live in Cyc8 (the formula only needs w8^2 = i and halving,
both available there); a parallel complex-float path serves the geometry
code.
"""

from __future__ import annotations

from .zi import C8_HALF, C8_I, C8_ONE, C8_ZERO, Cyc8, GaussInt

Mat2Rows = tuple[tuple[Cyc8, Cyc8], tuple[Cyc8, Cyc8]]


class Mat2:
    """2x2 matrix with exact Cyc8 entries."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        self.a = _c8(a)
        self.b = _c8(b)
        self.c = _c8(c)
        self.d = _c8(d)

    @classmethod
    def identity(cls) -> "Mat2":
        return cls(C8_ONE, C8_ZERO, C8_ZERO, C8_ONE)

    @classmethod
    def from_gauss(cls, a: GaussInt, b: GaussInt, c: GaussInt, d: GaussInt) -> "Mat2":
        return cls(Cyc8.from_gauss(a), Cyc8.from_gauss(b),
                   Cyc8.from_gauss(c), Cyc8.from_gauss(d))

    def entries(self) -> tuple[Cyc8, Cyc8, Cyc8, Cyc8]:
        return self.a, self.b, self.c, self.d

    def det(self) -> Cyc8:
        return self.a * self.d - self.b * self.c

    def __mul__(self, other: "Mat2") -> "Mat2":
        if not isinstance(other, Mat2):
            return NotImplemented
        return Mat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def scale(self, s: Cyc8) -> "Mat2":
        return Mat2(s * self.a, s * self.b, s * self.c, s * self.d)

    def neg(self) -> "Mat2":
        return Mat2(-self.a, -self.b, -self.c, -self.d)

    def adjugate(self) -> "Mat2":
        return Mat2(self.d, -self.b, -self.c, self.a)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Mat2):
            return NotImplemented
        return self.entries() == other.entries()

    def __hash__(self) -> int:
        return hash(self.entries())

    def __repr__(self) -> str:
        return f"Mat2({self.a}, {self.b}, {self.c}, {self.d})"

    def to_complex(self) -> tuple[tuple[complex, complex], tuple[complex, complex]]:
        return ((self.a.to_complex(), self.b.to_complex()),
                (self.c.to_complex(), self.d.to_complex()))


def _c8(v) -> Cyc8:
    if isinstance(v, Cyc8):
        return v
    if isinstance(v, (int, GaussInt)):
        return Cyc8(v, 0, 0)
    raise TypeError(f"cannot use {v!r} as an exact matrix entry")


Mat3 = tuple[tuple[Cyc8, ...], ...]


def tilde_conj(m: Mat2) -> Mat3:
    """Degree-2 polynomial 3x3 image of an arbitrary 2x2 matrix, exact.

    Columns are the images of the orthonormal basis vectors under
    conjugation.  Entry (3,2) carries -i(ac+bd): this is forced by the
    derivation (conjugate the standard-basis matrix by the change of
    basis) and by the homomorphism and orthogonality identities, which
    fail with the opposite sign.
    """
    a, b, c, d = m.entries()
    a2, b2, c2, d2 = a * a, b * b, c * c, d * d
    i = C8_I
    half = C8_HALF
    return (
        (
            half * (a2 - c2 + d2 - b2),
            half * i * (a2 - c2 + b2 - d2),
            c * d - a * b,
        ),
        (
            half * i * (b2 + d2 - a2 - c2),
            half * (a2 + c2 + b2 + d2),
            i * (a * b + c * d),
        ),
        (
            b * d - a * c,
            -(i * (a * c + b * d)),
            a * d + b * c,
        ),
    )


def conj3(m: Mat2) -> Mat3:
    """Exact 3x3 rotation image of a unimodular 2x2 matrix."""
    if m.det() != C8_ONE:
        raise ValueError("conj3 requires determinant 1; use tilde_conj otherwise")
    return tilde_conj(m)


def conj3_num(g) -> list[list[complex]]:
    """Complex-float version of the 3x3 image formula."""
    (a, b), (c, d) = g[0], g[1]
    a2, b2, c2, d2 = a * a, b * b, c * c, d * d
    return [
        [(a2 - c2 + d2 - b2) / 2, 1j * (a2 - c2 + b2 - d2) / 2, c * d - a * b],
        [1j * (b2 + d2 - a2 - c2) / 2, (a2 + c2 + b2 + d2) / 2, 1j * (a * b + c * d)],
        [b * d - a * c, -1j * (a * c + b * d), a * d + b * c],
    ]


# Change of basis for the real form: second basis vector is rescaled by -i,
# conjugating the image by diag(1, -i, 1).
_D_ROW = (C8_ONE, Cyc8(GaussInt(0, -1), 0, 0), C8_ONE)
_D_INV = (C8_ONE, C8_I, C8_ONE)

# Gram matrix of the half-trace form on the rescaled basis: diag(1, -1, 1),
# of signature (2, 1).
ETA_GRAM = ((1, 0, 0), (0, -1, 0), (0, 0, 1))


def conj_eta_exact(m: Mat2) -> Mat3:
    """3x3 image in the rescaled basis, exact; real inputs give real output."""
    base = tilde_conj(m)
    return tuple(
        tuple(_D_ROW[r] * base[r][c] * _D_INV[c] for c in range(3))
        for r in range(3)
    )


def conj_eta(g) -> list[list[float]]:
    """Real 3x3 image of a real 2x2 matrix, in the rescaled basis."""
    base = conj3_num(g)
    d_row = (1, -1j, 1)
    d_inv = (1, 1j, 1)
    out = []
    for r in range(3):
        row = []
        for c in range(3):
            v = d_row[r] * base[r][c] * d_inv[c]
            if abs(v.imag) > 1e-9 * max(1.0, abs(v)):
                raise ValueError("input matrix does not have real entries")
            row.append(v.real)
        out.append(row)
    return out
