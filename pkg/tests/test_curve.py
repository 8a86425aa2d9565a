import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import brute_points
from zerobls.curve import (
    G1Point,
    G2Point,
    distort,
    g1_add,
    g1_generator,
    g1_scalar_mul,
    g2_add,
    g2_scalar_mul,
    hash_to_g2,
    is_in_subgroup,
)
from zerobls.field import Fp, Fp2


@pytest.fixture(scope="module")
def tiny_points(tiny):
    return [G1Point.infinity()] + [G1Point(Fp(x, 19), Fp(y, 19)) for x, y in brute_points(19)]


def point_order(pt):
    k, acc = 1, pt
    while not acc.is_infinity():
        acc = acc + pt
        k += 1
    return k


def test_identity_and_two_torsion(tiny):
    g = g1_generator(tiny)
    assert g1_add(g, G1Point.infinity()) == g
    assert g1_add(G1Point.infinity(), g) == g
    z = G1Point(Fp(0, 19), Fp(0, 19))
    assert z.is_on_curve()
    assert g1_add(z, z).is_infinity()
    assert g1_add(g, -g).is_infinity()


def test_tiny_group_exhaustive(tiny_points):
    pts = tiny_points
    assert len(pts) == 20
    ptset = set(pts)
    for a, b in itertools.product(pts, repeat=2):
        s = a + b
        assert s in ptset
        assert s == b + a
        if not a.is_infinity() and not b.is_infinity() and a.x != b.x:
            # -(a+b) lies on the chord through a and b.
            x1, y1, x2, y2 = a.x.value, a.y.value, b.x.value, b.y.value
            x3, y3 = s.x.value, (-s.y).value
            det = x1 * (y2 - y3) - y1 * (x2 - x3) + (x2 * y3 - x3 * y2)
            assert det % 19 == 0
    for a, b, c in itertools.product(pts, repeat=3):
        assert (a + b) + c == a + (b + c)


def test_scalar_mul_matches_repeated_addition(tiny, tiny_points):
    for pt in tiny_points:
        acc = G1Point.infinity()
        for k in range(0, 25):
            assert g1_scalar_mul(k, pt) == acc
            acc = acc + pt
    g = g1_generator(tiny)
    assert g1_scalar_mul(tiny.r, g).is_infinity()
    assert g1_scalar_mul(1, g) == g
    assert g1_scalar_mul(-1, g) == -g
    assert g1_scalar_mul(tiny.r + 2, g, tiny.r) == g * 2


def test_distort(tiny, tiny_points):
    assert distort(G1Point.infinity()).is_infinity()
    g = g1_generator(tiny)
    dg = distort(g)
    assert dg.is_on_curve()
    assert g2_scalar_mul(tiny.r, dg).is_infinity()
    for pt in tiny_points:
        assert distort(pt).is_on_curve()
    # homomorphism on the subgroup
    for a, b in itertools.product(range(5), repeat=2):
        assert distort(g * a + g * b) == g2_add(distort(g * a), distort(g * b))


def test_subgroup_membership(tiny, tiny_points):
    assert is_in_subgroup(G1Point.infinity(), tiny)
    assert is_in_subgroup(G2Point.infinity(), tiny)
    assert is_in_subgroup(g1_generator(tiny), tiny)
    orders = {pt: point_order(pt) for pt in tiny_points}
    z = G1Point(Fp(0, 19), Fp(0, 19))
    assert orders[z] == 2 and not is_in_subgroup(z, tiny)
    order4 = [pt for pt, o in orders.items() if o == 4]
    assert order4
    for pt in tiny_points:
        assert is_in_subgroup(pt, tiny) == (orders[pt] in (1, 5))


def test_g2_subgroup_excludes_rational_torsion(tiny):
    g = g1_generator(tiny)
    # The F_p-rational copy of G lifted to F_p^2 has order r but is not in
    # the distortion image.
    lifted = G2Point(Fp2(g.x, 0), Fp2(g.y, 0))
    assert lifted.is_on_curve()
    assert (lifted * tiny.r).is_infinity()
    assert not is_in_subgroup(lifted, tiny)
    assert is_in_subgroup(distort(g), tiny)


scalars = st.integers(min_value=-(2**64), max_value=2**64)


@given(scalars, scalars, scalars)
def test_group_laws_60(cp, a, b, c):
    g = g1_generator(cp)
    pa, pb, pc = g * a, g * b, g * c
    assert pa + pb == pb + pa
    assert (pa + pb) + pc == pa + (pb + pc)
    assert g * (a + b) == pa + pb
    assert pa * b == g * (a * b % cp.r)


def test_group_laws_g2_60(cp):
    rng = random.Random(11)
    q = distort(g1_generator(cp))
    for _ in range(200):
        a, b, c = (rng.randrange(cp.r) for _ in range(3))
        qa, qb, qc = q * a, q * b, q * c
        assert qa + qb == qb + qa
        assert (qa + qb) + qc == qa + (qb + qc)


def test_hash_to_g2_properties(cp):
    assert hash_to_g2(b"m", cp.dst_sig, cp) == hash_to_g2(b"m", cp.dst_sig, cp)
    rng = random.Random(1)
    for _ in range(100):
        m = rng.randbytes(rng.randrange(0, 40))
        q = hash_to_g2(m, cp.dst_sig, cp)
        assert not q.is_infinity()
        assert (q * cp.r).is_infinity()
        assert is_in_subgroup(q, cp)
        assert q != hash_to_g2(m, cp.dst_pop, cp)


def test_hash_to_g2_no_duplicates(cp):
    outs = {hash_to_g2(b"msg %d" % i, cp.dst_sig, cp) for i in range(1000)}
    assert len(outs) == 1000


def test_hash_to_g2_tiny_lands_in_subgroup(tiny):
    for i in range(50):
        q = hash_to_g2(b"%d" % i, tiny.dst_sig, tiny)
        assert not q.is_infinity() and is_in_subgroup(q, tiny)
