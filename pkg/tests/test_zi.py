import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from so3zi.zi import (
    C8_HALF,
    C8_I,
    C8_INV_SQRT2,
    C8_ONE,
    C8_SQRT2,
    C8_W8,
    C8_W8_INV,
    Cyc8,
    GaussInt,
    I,
    ONE,
    ONE_PLUS_I,
    ZERO,
    congruent_mod,
    factor,
    gcd,
    gcd_bezout,
    general_residue,
    is_gaussian_prime,
    ord_at,
    reduce_mod,
    residue_reps,
    rt,
    sq_kernel,
    standardize,
    unit_group,
)

gauss_ints = st.builds(GaussInt, st.integers(-40, 40), st.integers(-40, 40))
gauss_nonzero = gauss_ints.filter(bool)


def G(re, im=0):
    return GaussInt(re, im)


# --- standard forms ---------------------------------------------------------

def test_standardize_examples():
    assert standardize(G(1, -1)) == (3, G(1, 1))
    assert standardize(G(1)) == (0, G(1))
    assert standardize(G(-5)) == (2, G(5))
    assert standardize(ZERO) == (0, ZERO)


@given(gauss_ints)
def test_standardize_roundtrip(z):
    u, s = standardize(z)
    assert s.times_i_pow(u) == z
    if z:
        assert s.is_standard()


# --- gcd --------------------------------------------------------------------

def test_gcd_examples():
    assert gcd(G(7, 3), ZERO) == standardize(G(7, 3)).standard
    assert gcd(ONE_PLUS_I, G(2)) == ONE_PLUS_I
    assert gcd(G(3), G(5)) == ONE
    with pytest.raises(ValueError):
        gcd(ZERO, ZERO)


def test_gcd_brute_force_small():
    # Divisor search by norm as an independent oracle.
    rng = random.Random(3)
    for _ in range(40):
        x = GaussInt(rng.randint(-4, 4), rng.randint(-4, 4))
        y = GaussInt(rng.randint(-4, 4), rng.randint(-4, 4))
        if not x and not y:
            continue
        best = ONE
        n = max(x.norm(), y.norm())
        for re in range(-n, n + 1):
            for im in range(0, n + 1):
                d = GaussInt(re, im)
                if not d or not d.is_standard():
                    continue
                if d.norm() <= best.norm():
                    continue
                if (not x or d.divides(x)) and (not y or d.divides(y)):
                    best = d
        assert gcd(x, y) == best


@given(gauss_ints, gauss_ints)
def test_gcd_properties(x, y):
    if not x and not y:
        return
    g = gcd(x, y)
    assert g.is_standard()
    if x:
        assert g.divides(x)
    if y:
        assert g.divides(y)
    xr = x.exact_div(g)
    yr = y.exact_div(g)
    if xr or yr:
        assert gcd(xr, yr) == ONE


@given(gauss_ints, gauss_ints)
def test_bezout_identity(x, y):
    if not x and not y:
        return
    g, z, w = gcd_bezout(x, y)
    assert x * z - y * w == g
    assert g == gcd(x, y)


def test_bezout_examples():
    assert gcd_bezout(ONE, ZERO) == (ONE, ONE, ZERO)
    g, z, w = gcd_bezout(G(2), ONE_PLUS_I)
    assert g == ONE_PLUS_I and G(2) * z - ONE_PLUS_I * w == g
    g, z, w = gcd_bezout(G(3), G(5))
    assert g == ONE and G(3) * z - G(5) * w == ONE


# --- valuations -------------------------------------------------------------

def test_ord_examples():
    assert ord_at(ONE_PLUS_I, G(4)) == 4
    assert ord_at(ONE_PLUS_I, I) == 0
    assert ord_at(ONE_PLUS_I, G(-1)) == 0
    assert ord_at(ONE_PLUS_I, G(2)) == 2
    assert ord_at(ONE_PLUS_I, ZERO) == math.inf
    with pytest.raises(ValueError):
        ord_at(G(4), G(2))


def test_ord_of_denominator_values():
    assert ord_at(ONE_PLUS_I, Cyc8(ONE, 0, 2)) == -2
    assert ord_at(G(2, 1), Cyc8(G(5), 0, 2)) == 1
    with pytest.raises(ValueError):
        ord_at(ONE_PLUS_I, C8_W8)


@pytest.mark.parametrize("nu", [ONE_PLUS_I, G(2, 1), G(3)])
def test_ord_axioms(nu):
    rng = random.Random(nu.norm())
    for _ in range(200):
        x = GaussInt(rng.randint(-30, 30), rng.randint(-30, 30))
        y = GaussInt(rng.randint(-30, 30), rng.randint(-30, 30))
        if not x or not y:
            continue
        ox, oy = ord_at(nu, x), ord_at(nu, y)
        assert ord_at(nu, x * y) == ox + oy
        if x + y:
            assert ord_at(nu, x + y) >= min(ox, oy)
            if ox > oy:
                assert ord_at(nu, x + y) == oy
        n = rng.randint(1, 4)
        shift = x + ONE.times_i_pow(rng.randint(0, 3)) * _pow(nu, n)
        if shift:
            assert min(ox, ord_at(nu, shift)) <= n


def _pow(g, n):
    out = ONE
    for _ in range(n):
        out = out * g
    return out


# --- factorization ----------------------------------------------------------

def test_factor_examples():
    assert factor(G(2)) == (3, [(ONE_PLUS_I, 2)])
    assert factor(ONE) == (0, [])
    u, fs = factor(G(5))
    assert [(str(p), e) for p, e in fs] == [("1+2i", 1), ("2+1i", 1)]
    with pytest.raises(ValueError):
        factor(ZERO)


@given(gauss_nonzero)
@settings(max_examples=60)
def test_factor_recomposition(z):
    u, fs = factor(z)
    out = ONE.times_i_pow(u)
    for p, e in fs:
        assert p.is_standard() and is_gaussian_prime(p)
        out = out * _pow(p, e)
    assert out == z


# --- residue systems --------------------------------------------------------

def test_residue_reps_small():
    assert [str(g) for g in residue_reps(1).reps] == ["0", "1"]
    assert [str(g) for g in residue_reps(2).reps] == ["0", "1", "1i", "1+1i"]
    assert len(residue_reps(3).reps) == 8
    with pytest.raises(ValueError):
        residue_reps(0)


@pytest.mark.parametrize("n", range(1, 9))
def test_residue_reps_pairwise_incongruent(n):
    reps = residue_reps(n).reps
    assert len(reps) == 2 ** n
    for i, x in enumerate(reps):
        for y in reps[i + 1:]:
            assert not congruent_mod(x, y, n)


def test_reduce_mod_examples():
    assert reduce_mod(G(5), 2) == ONE
    assert reduce_mod(ZERO, 7) == ZERO
    assert reduce_mod(I, 1) == ONE


@given(gauss_ints, st.integers(1, 8))
def test_reduce_mod_is_canonical(x, n):
    r = reduce_mod(x, n)
    assert r in residue_reps(n).reps
    assert congruent_mod(x, r, n)


# --- unit groups and the squaring map ---------------------------------------

def test_unit_group_values():
    assert set(map(str, unit_group(2))) == {"1", "1i"}
    assert [str(g) for g in unit_group(1)] == ["1"]
    for n in range(1, 11):
        assert len(unit_group(n)) == 2 ** (n - 1)


def test_sq_kernel_tables():
    assert set(map(str, sq_kernel(2))) == {"1", "1i"}
    assert set(map(str, sq_kernel(3))) == {"1", "3"}
    assert set(map(str, sq_kernel(4))) == {"1", "3", "1+2i", "3+2i"}
    with pytest.raises(ValueError):
        sq_kernel(1)


@pytest.mark.parametrize("n", range(2, 11))
def test_sq_kernel_matches_brute_force(n):
    brute = {(u.re, u.im) for u in unit_group(n) if reduce_mod(u * u, n) == ONE}
    assert {(u.re, u.im) for u in sq_kernel(n)} == brute


def test_rt_values():
    assert rt(2, ONE) == ONE
    assert rt(3, ONE) == ONE
    assert rt(3, G(3)) == I
    assert rt(4, ONE) == ONE
    assert rt(4, G(3)) == I
    with pytest.raises(ValueError):
        rt(3, I)                   # not a quadratic residue
    with pytest.raises(ValueError):
        rt(5, ONE)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_rt_is_a_section(n):
    residues = {(r.re, r.im) for r in
                (reduce_mod(u * u, n) for u in unit_group(n))}
    for key in residues:
        q = GaussInt(*key)
        root = rt(n, q)
        assert reduce_mod(root * root, n) == q


# --- the eighth-root ring ---------------------------------------------------

def test_cyc8_constants():
    assert C8_W8 * C8_W8 == C8_I
    assert C8_W8 * C8_W8_INV == C8_ONE
    assert C8_SQRT2 * C8_SQRT2 == Cyc8(G(2), 0, 0)
    assert C8_SQRT2 * C8_INV_SQRT2 == C8_ONE
    assert C8_HALF + C8_HALF == C8_ONE


def test_cyc8_normalization_is_canonical():
    x = Cyc8(G(2, 2), G(4), 3)
    y = Cyc8(G(2, 2), G(4), 3)
    assert x == y and hash(x) == hash(y)
    # (1+i)/(1+i) normalizes all the way down to 1
    assert Cyc8(ONE_PLUS_I, 0, 1) == C8_ONE
    with pytest.raises(ValueError):
        Cyc8(ONE, 0, -1)


@given(st.integers(-9, 9), st.integers(-9, 9), st.integers(-9, 9),
       st.integers(-9, 9), st.integers(0, 3), st.integers(0, 3))
@settings(max_examples=120)
def test_cyc8_mult_matches_complex(a1, b1, a2, b2, k1, k2):
    x = Cyc8(G(a1, b1), G(b1, a1), k1)
    y = Cyc8(G(a2, -b2), G(a2, b2), k2)
    prod = x * y
    expect = x.to_complex() * y.to_complex()
    assert abs(prod.to_complex() - expect) <= 1e-12 * max(1.0, abs(expect))


@given(st.integers(-9, 9), st.integers(-9, 9), st.integers(0, 4))
@settings(max_examples=80)
def test_cyc8_add_matches_complex(a, b, k):
    x = Cyc8(G(a, b), G(b, -a), k)
    y = Cyc8(G(1, 2), G(0, 1), 1)
    assert abs((x + y).to_complex() - (x.to_complex() + y.to_complex())) < 1e-12
    assert abs((x - y).to_complex() - (x.to_complex() - y.to_complex())) < 1e-12


def test_cyc8_json_roundtrip():
    x = Cyc8(G(3, -2), G(0, 1), 2)
    assert Cyc8.from_json(x.to_json()) == x
    assert Cyc8.from_json("3-2i") == Cyc8(G(3, -2), 0, 0)


def test_gauss_parse_forms():
    for text, expect in [("3-2i", G(3, -2)), ("0", ZERO), ("1+1i", G(1, 1)),
                         ("i", I), ("-i", G(0, -1)), ("7", G(7)), ("-2i", G(0, -2))]:
        assert GaussInt.parse(text) == expect
    for bad in ["", "2+3", "x", "3i+2"]:
        with pytest.raises(ValueError):
            GaussInt.parse(bad)


def test_general_residue_is_a_transversal():
    y = G(2, 1)
    seen = {}
    for re in range(-8, 9):
        for im in range(-8, 9):
            x = GaussInt(re, im)
            r = general_residue(x, y)
            key = (r.re, r.im)
            cls = ((x - r) % y == ZERO)
            assert cls
            seen.setdefault(key, set()).add((re, im))
    assert len(seen) == y.norm()
