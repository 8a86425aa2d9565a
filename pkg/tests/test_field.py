import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from zerobls.field import DivisionByZero, Fp, Fp2, fp2_inv, fp2_mul, fp2_pow, fp_inv, fp_sqrt

P19 = 19
P60 = 2596871878917947923

fp_values = st.integers(min_value=0, max_value=P60 - 1)


def test_fp_inv_examples():
    assert fp_inv(Fp(2, P19)) == 10
    assert fp_inv(Fp(1, P19)) == 1
    with pytest.raises(DivisionByZero):
        fp_inv(Fp(0, P19))


def test_fp_sqrt_examples():
    assert fp_sqrt(Fp(4, P19)) == 17
    assert pow(4, 5, 19) == 17 and 17 * 17 % 19 == 4
    assert fp_sqrt(Fp(0, P19)) == 0
    assert fp_sqrt(Fp(2, P19)) is None


def test_fp_sqrt_exhaustive_tiny():
    squares = {y * y % P19 for y in range(P19)}
    assert 2 not in squares
    missing = 0
    for a in range(P19):
        s = fp_sqrt(Fp(a, P19))
        if s is None:
            assert a not in squares
            missing += 1
        else:
            assert s * s == a
    assert missing == (P19 - 1) // 2


@given(fp_values)
def test_fp_sqrt_squares_back(a):
    s = fp_sqrt(Fp(a, P60))
    if s is not None:
        assert s * s == a
    else:
        assert pow(a, (P60 - 1) // 2, P60) == P60 - 1


def test_fp2_mul_examples():
    i = Fp2(0, 1, P19)
    assert fp2_mul(i, i) == Fp2(18, 0, P19)
    assert fp2_mul(Fp2(2, 3, P19), Fp2(4, 5, P19)) == Fp2(12, 3, P19)
    x = Fp2(7, 11, P19)
    assert fp2_mul(Fp2.one(P19), x) == x


def test_fp2_inv_examples():
    assert fp2_inv(Fp2(1, 0, P19)) == Fp2(1, 0, P19)
    assert fp2_inv(Fp2(0, 1, P19)) == Fp2(0, 18, P19)
    with pytest.raises(DivisionByZero):
        fp2_inv(Fp2.zero(P19))
    rng = random.Random(3)
    for _ in range(100):
        a = Fp2(rng.randrange(P60), rng.randrange(P60), P60)
        if a:
            assert a * fp2_inv(a) == 1


def test_fp2_pow():
    rng = random.Random(5)
    for _ in range(50):
        a = Fp2(rng.randrange(P19), rng.randrange(P19), P19)
        assert fp2_pow(a, 0) == 1
        assert fp2_pow(a, 1) == a
        if a:
            assert fp2_pow(a, P19 * P19 - 1) == 1


@given(fp_values, fp_values, fp_values)
def test_fp_axioms(a, b, c):
    x, y, z = Fp(a, P60), Fp(b, P60), Fp(c, P60)
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x + y == y + x and x * y == y * x
    assert x * (y + z) == x * y + x * z
    assert x - x == 0 and -x + x == 0
    if x:
        assert x / x == 1


fp2_values = st.tuples(fp_values, fp_values).map(lambda t: Fp2(t[0], t[1], P60))


@given(fp2_values, fp2_values, fp2_values)
def test_fp2_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x + y == y + x and x * y == y * x
    assert x * (y + z) == x * y + x * z
    assert x - x == 0
    if x:
        assert x * x.inv() == 1
        assert (x * y) / x == y


def test_mixed_field_rejected():
    from zerobls.field import FieldError

    with pytest.raises(FieldError):
        Fp(1, 19) + Fp(1, 23)
