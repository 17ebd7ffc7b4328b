import random

import pytest

from so3zi import lattice as lat
from so3zi.spin import Mat2
from so3zi.zi import GaussInt, I, ONE, ZERO


def rand_gauss(rng: random.Random, bound: int = 20) -> GaussInt:
    return GaussInt(rng.randint(-bound, bound), rng.randint(-bound, bound))


def rand_gauss_nonzero(rng: random.Random, bound: int = 20) -> GaussInt:
    while True:
        g = rand_gauss(rng, bound)
        if g:
            return g


def member_pool() -> list[Mat2]:
    reps = [e.matrix() for e in lat.coset_reps()]
    gens = list(lat.XI12_GENERATORS)
    pool = reps + gens
    return pool + [m.adjugate() for m in pool]


def random_member(rng: random.Random, pool: list[Mat2], max_len: int = 8) -> Mat2:
    m = Mat2.identity()
    for _ in range(rng.randint(1, max_len)):
        m = m * rng.choice(pool)
    return m


_SL2ZI_GENS = [
    Mat2.from_gauss(ONE, ONE, ZERO, ONE),
    Mat2.from_gauss(ONE, I, ZERO, ONE),
    lat.S_MAT,
]
SL2ZI_POOL = _SL2ZI_GENS + [m.adjugate() for m in _SL2ZI_GENS]


def random_sl2zi(rng: random.Random, max_len: int = 8) -> Mat2:
    m = Mat2.identity()
    for _ in range(rng.randint(1, max_len)):
        m = m * rng.choice(SL2ZI_POOL)
    return m


def as_gauss_rows(m: Mat2):
    a, b, c, d = (e.to_gauss() for e in m.entries())
    return ((a, b), (c, d))


_CRITERION_NAMES = {}


def register_criterion(number: int, label: str):
    def deco(fn):
        _CRITERION_NAMES[fn.__name__] = (number, label)
        return fn
    return deco


@pytest.hookimpl(trylast=True)
def pytest_runtest_logreport(report):
    if report.when != "call" or "test_acceptance" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if name in _CRITERION_NAMES:
        number, label = _CRITERION_NAMES[name]
        verdict = "PASS" if report.passed else "FAIL"
        print(f"\n[acceptance] criterion {number} ({label}): {verdict}")
