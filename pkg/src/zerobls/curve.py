"""Points on E: y^2 = x^3 + x over F_p (G1) and F_p^2 (G2).

Affine coordinates with an explicit point at infinity (x = y = None).
G2 points used by the library are images of G1 points under the distortion
map (x, y) -> (-x, i*y).
"""

from __future__ import annotations

import hashlib
from typing import TYPE_CHECKING, Optional, Union

from .field import Fp, Fp2

if TYPE_CHECKING:
    from .params import CurveParams

Coord = Union[Fp, Fp2]

HASH_MAX_COUNTER = 512


class HashToCurveError(RuntimeError):
    pass


class _Point:
    __slots__ = ("x", "y")

    def __init__(self, x: Optional[Coord], y: Optional[Coord]):
        if (x is None) != (y is None):
            raise ValueError("both coordinates or neither")
        self.x = x
        self.y = y

    @classmethod
    def infinity(cls):
        return cls(None, None)

    def is_infinity(self) -> bool:
        return self.x is None

    def is_on_curve(self) -> bool:
        if self.is_infinity():
            return True
        return self.y * self.y == self.x * self.x * self.x + self.x

    def __eq__(self, other) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self.x == other.x and self.y == other.y

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.x, self.y))

    def __repr__(self) -> str:
        if self.is_infinity():
            return f"{type(self).__name__}(infinity)"
        return f"{type(self).__name__}({self.x!r}, {self.y!r})"

    def __neg__(self):
        if self.is_infinity():
            return self
        return type(self)(self.x, -self.y)

    def double(self):
        if self.is_infinity() or not self.y:
            return type(self).infinity()
        x, y = self.x, self.y
        lam = (3 * x * x + 1) / (2 * y)
        x3 = lam * lam - 2 * x
        return type(self)(x3, lam * (x - x3) - y)

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        if self.is_infinity():
            return other
        if other.is_infinity():
            return self
        if self.x == other.x:
            if self.y == other.y:
                return self.double()
            return type(self).infinity()
        lam = (other.y - self.y) / (other.x - self.x)
        x3 = lam * lam - self.x - other.x
        return type(self)(x3, lam * (self.x - x3) - self.y)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return (-self) * (-k)
        result = type(self).infinity()
        addend = self
        while k:
            if k & 1:
                result = result + addend
            addend = addend.double()
            k >>= 1
        return result

    __rmul__ = __mul__


class G1Point(_Point):
    """Point of E(F_p)."""

    __slots__ = ()


class G2Point(_Point):
    """Point of E(F_p^2)."""

    __slots__ = ()

    def frobenius(self) -> G2Point:
        if self.is_infinity():
            return self
        return G2Point(self.x.conjugate(), self.y.conjugate())


def g1_add(a: G1Point, b: G1Point) -> G1Point:
    return a + b


def g2_add(a: G2Point, b: G2Point) -> G2Point:
    return a + b


def g1_scalar_mul(k: int, pt: G1Point, r: Optional[int] = None) -> G1Point:
    return pt * (k % r if r else k)


def g2_scalar_mul(k: int, pt: G2Point, r: Optional[int] = None) -> G2Point:
    return pt * (k % r if r else k)


def distort(pt: G1Point) -> G2Point:
    if pt.is_infinity():
        return G2Point.infinity()
    p = pt.x.p
    return G2Point(Fp2(-pt.x, 0, p), Fp2(0, pt.y, p))


def is_in_subgroup(pt: Union[G1Point, G2Point], cp: CurveParams) -> bool:
    """True iff r*pt is the identity. Infinity is a member.

    For G2 the point must additionally sit in the distortion image, i.e. the
    trace-zero subgroup where Frobenius acts as negation. Otherwise an
    F_p-rational point of order r would slip in as a signature, and it pairs
    trivially with every public key.
    """
    if not pt.is_on_curve():
        return False
    if not (pt * cp.r).is_infinity():
        return False
    if isinstance(pt, G2Point):
        return pt.frobenius() == -pt
    return True


def g1_generator(cp: CurveParams) -> G1Point:
    if cp.gx is None:
        return G1Point.infinity()
    return G1Point(Fp(cp.gx, cp.p), Fp(cp.gy, cp.p))


def lift_x(x: int, p: int) -> Optional[G1Point]:
    """The point (x, y) with the smaller of the two square roots, if any."""
    fx = Fp(x, p)
    y = (fx * fx * fx + fx).sqrt()
    if y is None:
        return None
    return G1Point(fx, Fp(min(y.value, p - y.value), p))


def hash_to_g2(msg: bytes, dst: bytes, cp: CurveParams) -> G2Point:
    """Try-and-increment hash onto the order-r distortion image.

    Candidate x = SHA-256(dst || len(dst) || msg || counter) mod p; the
    cofactor is cleared on E(F_p) before distorting.
    """
    if len(dst) > 255:
        raise ValueError("dst longer than 255 bytes")
    prefix = dst + bytes([len(dst)]) + msg
    for counter in range(HASH_MAX_COUNTER):
        digest = hashlib.sha256(prefix + counter.to_bytes(4, "big")).digest()
        candidate = lift_x(int.from_bytes(digest, "big") % cp.p, cp.p)
        if candidate is None:
            continue
        q = candidate * cp.h
        if q.is_infinity():
            continue
        return distort(q)
    raise HashToCurveError(f"no curve point after {HASH_MAX_COUNTER} counters")

