"""The compiled kernel and the pure-Python kernel must agree exactly."""

import random
from fractions import Fraction

import pytest

import lctkit._purepoly as pure

speedups = pytest.importorskip(
    "lctkit._speedups", reason="compiled kernel not built; fallback covers it"
)


def random_terms(rng, coeff_type=int, n=2, size=8):
    out = {}
    for _ in range(size):
        exps = tuple(rng.randint(0, 10) for _ in range(n))
        c = rng.randint(-50, 50)
        if c == 0:
            c = 7
        out[exps] = coeff_type(c) if coeff_type is int else Fraction(c, rng.randint(1, 9))
    return out


@pytest.mark.parametrize("coeff_type", [int, Fraction])
def test_mul_terms_parity(coeff_type):
    rng = random.Random(1234)
    for _ in range(200):
        a = random_terms(rng, coeff_type)
        b = random_terms(rng, coeff_type)
        assert speedups.mul_terms(a, b) == pure.mul_terms(a, b)


def test_axpy_parity():
    rng = random.Random(99)
    for _ in range(200):
        q = random_terms(rng)
        p = random_terms(rng)
        alpha = rng.randint(1, 40)
        beta = rng.randint(-40, -1)
        shift = (rng.randint(0, 5), rng.randint(0, 5))
        assert speedups.axpy_terms(alpha, q, beta, p, shift) == pure.axpy_terms(
            alpha, q, beta, p, shift
        )


def test_strip_content_parity():
    rng = random.Random(5)
    for _ in range(200):
        t = {k: v * rng.choice([2, 6, 12]) for k, v in random_terms(rng).items()}
        assert speedups.strip_int_content(t) == pure.strip_int_content(t)


def test_kernels_do_not_mutate_inputs():
    a = {(1, 0): 2, (0, 1): 3}
    b = {(1, 1): 4}
    copy_a, copy_b = dict(a), dict(b)
    speedups.mul_terms(a, b)
    speedups.axpy_terms(1, a, -1, b, (2, 2))
    speedups.strip_int_content(a)
    pure.mul_terms(a, b)
    pure.axpy_terms(1, a, -1, b, (2, 2))
    pure.strip_int_content(a)
    assert a == copy_a and b == copy_b


def test_empty_and_cancelling_cases():
    for mod in (speedups, pure):
        assert mod.mul_terms({}, {(0, 0): 1}) == {}
        assert mod.mul_terms({(1, 2): 3}, {}) == {}
        assert mod.axpy_terms(1, {(0, 0): 5}, -1, {(0, 0): 5}, (0, 0)) == {}
        assert mod.strip_int_content({}) == {}
        assert mod.strip_int_content({(0, 0): -4, (1, 0): 6}) == {(0, 0): -2, (1, 0): 3}
