"""Exact arithmetic in Z[i] and in Z[w8, 1/(1+i)], where w8^2 = i.

Everything here is integer-exact: Gaussian integers with arbitrary-size
components, canonical ("standard") associates, Euclidean GCD with a fixed
rounding rule, valuations, the dyadic residue systems used by the lattice
code, unit groups mod (1+i)^n and the kernel/section data of the squaring
map on them, and the eighth-root-of-unity ring with (1+i)-power
denominators that matrix entries of the lattice live in.
"""

from __future__ import annotations

import cmath
import math
import re as _re
from dataclasses import dataclass
from math import inf, isqrt
from typing import Iterator, NamedTuple, Union


def _round_half_small(n: int, d: int) -> int:
    """Round n/d to the nearest integer, ties toward smaller magnitude."""
    if d < 0:
        n, d = -n, -d
    q, r = divmod(n, d)
    if 2 * r < d:
        return q
    if 2 * r > d:
        return q + 1
    return q if abs(q) <= abs(q + 1) else q + 1


_GAUSS_RE = _re.compile(
    r"""^\s*
        (?:(?P<re>[+-]?\d+)(?!i))?          # real part, not followed by i
        (?:(?P<im>[+-]?\d*)i)?              # imaginary part "3i", "-i", "i"
        \s*$""",
    _re.VERBOSE,
)


class GaussInt:
    """A Gaussian integer re + im*i with exact (unbounded) components."""

    __slots__ = ("re", "im")

    def __init__(self, re: int = 0, im: int = 0):
        self.re = re
        self.im = im

    @classmethod
    def parse(cls, text: str) -> "GaussInt":
        """Parse the textual form "a+bi" (also "a", "bi", "i", "-i")."""
        m = _GAUSS_RE.match(text)
        if not m or (m.group("re") is None and m.group("im") is None):
            raise ValueError(f"not a Gaussian integer: {text!r}")
        re_part = int(m.group("re")) if m.group("re") is not None else 0
        im_txt = m.group("im")
        if im_txt is None:
            im_part = 0
        elif im_txt in ("", "+"):
            im_part = 1
        elif im_txt == "-":
            im_part = -1
        else:
            im_part = int(im_txt)
        return cls(re_part, im_part)

    def __repr__(self) -> str:
        return f"GaussInt({self.re}, {self.im})"

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        return f"{self.re}{self.im:+}i"

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.re == other and self.im == 0
        if isinstance(other, GaussInt):
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def __bool__(self) -> bool:
        return self.re != 0 or self.im != 0

    def __neg__(self) -> "GaussInt":
        return GaussInt(-self.re, -self.im)

    def __add__(self, other) -> "GaussInt":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return GaussInt(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other) -> "GaussInt":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return GaussInt(self.re - other.re, self.im - other.im)

    def __rsub__(self, other) -> "GaussInt":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return GaussInt(other.re - self.re, other.im - self.im)

    def __mul__(self, other) -> "GaussInt":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return GaussInt(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def conj(self) -> "GaussInt":
        return GaussInt(self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def times_i_pow(self, k: int) -> "GaussInt":
        k &= 3
        if k == 0:
            return self
        if k == 1:
            return GaussInt(-self.im, self.re)
        if k == 2:
            return GaussInt(-self.re, -self.im)
        return GaussInt(self.im, -self.re)

    def is_standard(self) -> bool:
        return self.re > 0 and self.im >= 0

    def __divmod__(self, other) -> tuple["GaussInt", "GaussInt"]:
        """Nearest-integer division; ties round components toward 0."""
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if not other:
            raise ZeroDivisionError("Gaussian division by zero")
        t = self * other.conj()
        n = other.norm()
        q = GaussInt(_round_half_small(t.re, n), _round_half_small(t.im, n))
        return q, self - other * q

    def __floordiv__(self, other) -> "GaussInt":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "GaussInt":
        return divmod(self, other)[1]

    def divides(self, other: "GaussInt") -> bool:
        return not bool(other % self)

    def exact_div(self, other) -> "GaussInt":
        """self / other, raising when the quotient is not integral."""
        q, r = divmod(self, other)
        if r:
            raise ValueError(f"{self} is not divisible by {other}")
        return q

    def to_complex(self) -> complex:
        return complex(self.re, self.im)


def _coerce(value) -> Union[GaussInt, None]:
    if isinstance(value, GaussInt):
        return value
    if isinstance(value, int):
        return GaussInt(value, 0)
    return None


ZERO = GaussInt(0, 0)
ONE = GaussInt(1, 0)
I = GaussInt(0, 1)
ONE_PLUS_I = GaussInt(1, 1)
ONE_MINUS_I = GaussInt(1, -1)


class StandardForm(NamedTuple):
    """Decomposition z = i**unit_exp * standard with a canonical associate."""

    unit_exp: int
    standard: GaussInt


def standardize(z: GaussInt) -> StandardForm:
    """Write z as i**u times its associate with Re > 0, Im >= 0 (or 0)."""
    if not z:
        return StandardForm(0, ZERO)
    for u in range(4):
        cand = z.times_i_pow(-u)
        if cand.is_standard():
            return StandardForm(u, cand)
    raise AssertionError("unreachable: some associate is standard")


def gcd(x: GaussInt, y: GaussInt) -> GaussInt:
    """Standard generator of the ideal (x, y)."""
    if not x and not y:
        raise ValueError("gcd(0, 0) is undefined")
    a, b = x, y
    while b:
        a, b = b, a % b
    return standardize(a).standard


def gcd_bezout(x: GaussInt, y: GaussInt) -> tuple[GaussInt, GaussInt, GaussInt]:
    """Return (g, z, w) with x*z - y*w = g = gcd(x, y), exactly."""
    if not x and not y:
        raise ValueError("gcd(0, 0) is undefined")
    # Extended Euclid: maintain a = x*u + y*v, b = x*u2 + y*v2.
    a, b = x, y
    u, v, u2, v2 = ONE, ZERO, ZERO, ONE
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        u, u2 = u2, u - q * u2
        v, v2 = v2, v - q * v2
    k = standardize(a).unit_exp
    g = a.times_i_pow(-k)
    z, w = u.times_i_pow(-k), (-v).times_i_pow(-k)
    assert x * z - y * w == g
    return g, z, w


def _is_rational_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def is_gaussian_prime(z: GaussInt) -> bool:
    n = z.norm()
    if _is_rational_prime(n):
        return True
    return z.im == 0 and abs(z.re) % 4 == 3 and _is_rational_prime(abs(z.re))


def standard_primes_by_norm(norm_limit: int) -> Iterator[GaussInt]:
    """Yield the standard Gaussian primes of norm <= norm_limit, by norm."""
    for n in range(2, norm_limit + 1):
        if _is_rational_prime(n):
            if n == 2:
                yield ONE_PLUS_I
            elif n % 4 == 1:
                a, b = _two_squares(n)
                yield GaussInt(a, b)
                yield GaussInt(b, a)
        else:
            r = isqrt(n)
            if r * r == n and r % 4 == 3 and _is_rational_prime(r):
                yield GaussInt(r, 0)


def _two_squares(p: int) -> tuple[int, int]:
    """p = a*a + b*b with a > b > 0, for a prime p = 1 mod 4."""
    for b in range(1, isqrt(p) + 1):
        a2 = p - b * b
        a = isqrt(a2)
        if a * a == a2 and a > b:
            return a, b
    raise ValueError(f"{p} is not a sum of two squares with distinct parts")


OrdValue = Union[int, float]


def ord_at(nu: GaussInt, x) -> OrdValue:
    """nu-adic valuation of x; +inf at 0.  nu must be a standard prime.

    Accepts a GaussInt, a plain int, or a Cyc8 whose w8-component vanishes
    (the only denominators arising there are powers of 1+i).
    """
    if not (nu.is_standard() and is_gaussian_prime(nu)):
        raise ValueError(f"{nu} is not a standard Gaussian prime")
    if isinstance(x, Cyc8):
        if x.b:
            raise ValueError("valuation undefined outside the Gaussian line")
        num = ord_at(nu, x.a)
        if num is inf:
            return inf
        return num - (x.k if nu == ONE_PLUS_I else 0)
    g = _coerce(x)
    if g is None:
        raise TypeError(f"cannot take a valuation of {x!r}")
    if not g:
        return inf
    count = 0
    while True:
        q, r = divmod(g, nu)
        if r:
            return count
        g = q
        count += 1


def factor(z: GaussInt) -> tuple[int, list[tuple[GaussInt, int]]]:
    """z = i**unit_exp * product of standard primes, by trial division."""
    if not z:
        raise ValueError("cannot factor 0")
    u, m = standardize(z)
    factors: list[tuple[GaussInt, int]] = []
    for p in standard_primes_by_norm(isqrt(m.norm()) + 1):
        if m.norm() == 1:
            break
        e = 0
        while True:
            q, r = divmod(m, p)
            if r:
                break
            m, e = q, e + 1
        if e:
            factors.append((p, e))
    if m.norm() > 1:
        # Whatever remains has norm exceeding the square of every candidate,
        # hence is prime; record its standard associate.
        uu, mm = standardize(m)
        factors.append((mm, 1))
        u = (u + uu) & 3
        m = ONE
    elif m != ONE:
        u = (u + standardize(m).unit_exp) & 3
    factors.sort(key=lambda pe: (pe[0].norm(), pe[0].re, pe[0].im))
    return u, factors


@dataclass(frozen=True)
class ResidueSystem:
    """Representatives r + s*i, 0 <= r < 2^ceil(n/2), 0 <= s < 2^(n-ceil(n/2))."""

    n: int
    reps: tuple[GaussInt, ...]


def residue_reps(n: int) -> ResidueSystem:
    """The canonical system of representatives mod (1+i)^n."""
    if n < 1:
        raise ValueError("modulus exponent must be >= 1")
    r_max = 1 << ((n + 1) // 2)
    s_max = 1 << (n - (n + 1) // 2)
    reps = tuple(GaussInt(r, s) for s in range(s_max) for r in range(r_max))
    return ResidueSystem(n, reps)


def reduce_mod(x: GaussInt, n: int) -> GaussInt:
    """The representative of x mod (1+i)^n inside residue_reps(n)."""
    if n < 1:
        raise ValueError("modulus exponent must be >= 1")
    if n % 2 == 0:
        m = 1 << (n // 2)
        return GaussInt(x.re % m, x.im % m)
    big = 1 << ((n + 1) // 2)
    small = big >> 1
    r = x.re % big
    s = x.im % big
    if s >= small:
        # subtract the lattice vector small*(1+i), then wrap r back
        r -= small
        s -= small
        if r < 0:
            r += big
    return GaussInt(r, s)


def congruent_mod(x: GaussInt, y: GaussInt, n: int) -> bool:
    """x = y mod (1+i)^n."""
    d = x - y
    big = ONE_PLUS_I
    for _ in range(n):
        q, r = divmod(d, big)
        if r:
            return False
        d = q
    return True


def unit_group(n: int) -> list[GaussInt]:
    """Invertible residues mod (1+i)^n, as elements of residue_reps(n)."""
    if n < 1:
        raise ValueError("modulus exponent must be >= 1")
    return [x for x in residue_reps(n).reps if x.norm() % 2 == 1]


def sq_kernel(n: int) -> list[GaussInt]:
    """Kernel of u -> u^2 on the unit group mod (1+i)^n.

    Closed form: representatives of l*(1+i)^m +- 1 where m = n-1 for n < 4
    and m = n-2 for n >= 4, with l running over residues mod (1+i)^(n-m).
    """
    if n < 2:
        raise ValueError("squaring-kernel tables start at exponent 2")
    m = n - 1 if n < 4 else n - 2
    base = ONE_PLUS_I
    power = ONE
    for _ in range(m):
        power = power * base
    found: set[tuple[int, int]] = set()
    out: list[GaussInt] = []
    for ell in residue_reps(n - m).reps:
        for sign in (ONE, -ONE):
            rep = reduce_mod(ell * power + sign, n)
            key = (rep.re, rep.im)
            if key not in found:
                found.add(key)
                out.append(rep)
    out.sort(key=lambda g: (g.im, g.re))
    return out


_RT_TABLE = {
    2: {(1, 0): ONE},
    3: {(1, 0): ONE, (3, 0): I},
    4: {(1, 0): ONE, (3, 0): I},
}


def rt(n: int, q: GaussInt) -> GaussInt:
    """The fixed square-root section on quadratic residues mod (1+i)^n."""
    if n not in _RT_TABLE:
        raise ValueError("square-root sections are tabulated for n in {2,3,4}")
    q_red = reduce_mod(q, n)
    table = _RT_TABLE[n]
    key = (q_red.re, q_red.im)
    if key not in table:
        raise ValueError(f"{q} is not a quadratic residue mod (1+i)^{n}")
    root = table[key]
    assert reduce_mod(root * root, n) == q_red
    return root


# ---------------------------------------------------------------------------
# The ring Z[w8, 1/(1+i)], w8 = primitive eighth root of unity, w8^2 = i.


_W8_COMPLEX = cmath.exp(1j * math.pi / 4)


def _div_one_plus_i(g: GaussInt) -> Union[GaussInt, None]:
    """g / (1+i) when integral, else None."""
    s = g.re + g.im
    d = g.im - g.re
    if s % 2 or d % 2:
        return None
    return GaussInt(s // 2, d // 2)


class Cyc8:
    """(a + b*w8) / (1+i)^k with a, b Gaussian integers, k >= 0, normalized.

    Normalization divides the numerator by 1+i while possible, so equal
    values have equal field triples.
    """

    __slots__ = ("a", "b", "k")

    def __init__(self, a: GaussInt | int = 0, b: GaussInt | int = 0, k: int = 0):
        a = _coerce(a)
        b = _coerce(b)
        if a is None or b is None:
            raise TypeError("components must be Gaussian integers")
        if k < 0:
            raise ValueError("denominator exponent must be >= 0")
        if not a and not b:
            k = 0
        while k > 0:
            a2 = _div_one_plus_i(a)
            if a2 is None:
                break
            b2 = _div_one_plus_i(b)
            if b2 is None:
                break
            a, b, k = a2, b2, k - 1
        self.a = a
        self.b = b
        self.k = k

    @classmethod
    def from_gauss(cls, g: GaussInt | int) -> "Cyc8":
        return cls(g, 0, 0)

    def __repr__(self) -> str:
        return f"Cyc8({self.a!r}, {self.b!r}, {self.k})"

    def __str__(self) -> str:
        num = f"{self.a}" if not self.b else f"({self.a}) + ({self.b})*w8"
        return num if self.k == 0 else f"[{num}]/(1+i)^{self.k}"

    def __eq__(self, other) -> bool:
        other = _coerce_c8(other)
        if other is None:
            return NotImplemented
        return self.a == other.a and self.b == other.b and self.k == other.k

    def __hash__(self) -> int:
        return hash((self.a, self.b, self.k))

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)

    def __neg__(self) -> "Cyc8":
        return Cyc8(-self.a, -self.b, self.k)

    def __add__(self, other) -> "Cyc8":
        other = _coerce_c8(other)
        if other is None:
            return NotImplemented
        x, y = self, other
        if x.k < y.k:
            x, y = y, x
        scale = ONE
        for _ in range(x.k - y.k):
            scale = scale * ONE_PLUS_I
        return Cyc8(x.a + y.a * scale, x.b + y.b * scale, x.k)

    __radd__ = __add__

    def __sub__(self, other) -> "Cyc8":
        other = _coerce_c8(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Cyc8":
        other = _coerce_c8(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "Cyc8":
        other = _coerce_c8(other)
        if other is None:
            return NotImplemented
        # (a1 + b1 w)(a2 + b2 w) = (a1 a2 + i b1 b2) + (a1 b2 + a2 b1) w
        a = self.a * other.a + (self.b * other.b).times_i_pow(1)
        b = self.a * other.b + other.a * self.b
        return Cyc8(a, b, self.k + other.k)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Cyc8":
        if n < 0:
            raise ValueError("negative powers are not defined in this ring")
        out = C8_ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def is_gauss(self) -> bool:
        """True when the value lies in Z[i]."""
        return self.k == 0 and not self.b

    def to_gauss(self) -> GaussInt:
        if not self.is_gauss():
            raise ValueError(f"{self} is not a Gaussian integer")
        return self.a

    def is_real_int(self) -> bool:
        return self.is_gauss() and self.a.im == 0

    def to_complex(self) -> complex:
        num = self.a.to_complex() + self.b.to_complex() * _W8_COMPLEX
        return num / (1 + 1j) ** self.k

    def to_json(self):
        return {"a": str(self.a), "b": str(self.b), "k": self.k}

    @classmethod
    def from_json(cls, obj) -> "Cyc8":
        if isinstance(obj, str):
            return cls.from_gauss(GaussInt.parse(obj))
        return cls(GaussInt.parse(obj["a"]), GaussInt.parse(obj["b"]), int(obj["k"]))


def _coerce_c8(value) -> Union[Cyc8, None]:
    if isinstance(value, Cyc8):
        return value
    if isinstance(value, (int, GaussInt)):
        return Cyc8(value, 0, 0)
    return None


C8_ZERO = Cyc8(0, 0, 0)
C8_ONE = Cyc8(1, 0, 0)
C8_I = Cyc8(I, 0, 0)
C8_W8 = Cyc8(0, 1, 0)
C8_W8_INV = Cyc8(0, GaussInt(0, -1), 0)          # 1/w8 = -i*w8
C8_SQRT2 = Cyc8(0, ONE_MINUS_I, 0)               # sqrt(2) = (1-i)*w8
C8_INV_SQRT2 = Cyc8(0, 1, 1)                     # 1/sqrt(2) = w8/(1+i)
C8_HALF = Cyc8(I, 0, 2)                          # 1/2 = i/(1+i)^2
C8_INV_ONE_PLUS_I = Cyc8(1, 0, 1)


def general_residue(x: GaussInt, y: GaussInt) -> GaussInt:
    """Minimal-norm representative of x mod y, ties by smallest argument.

    Canonical residue set for arbitrary nonzero moduli; powers of 1+i use
    reduce_mod instead.
    """
    if not y:
        raise ValueError("zero modulus")
    q0, _ = divmod(x, y)
    best = None
    for dre in (-1, 0, 1):
        for dim in (-1, 0, 1):
            q = q0 + GaussInt(dre, dim)
            rep = x - y * q
            ang = math.atan2(rep.im, rep.re) % (2 * math.pi) if rep else 0.0
            key = (rep.norm(), ang)
            if best is None or key < best[0]:
                best = (key, rep)
    return best[1]
