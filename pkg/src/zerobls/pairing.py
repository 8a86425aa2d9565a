"""Reduced Tate pairing e: G1 x G2 -> GT on the embedding-degree-2 curve."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

from .curve import G1Point, G2Point
from .field import Fp2

if TYPE_CHECKING:
    from .params import CurveParams


class DegeneratePairing(ArithmeticError):
    pass


@dataclass(frozen=True)
class GtElement:
    value: Fp2

    @classmethod
    def one(cls, p: int) -> GtElement:
        return cls(Fp2.one(p))

    def is_one(self) -> bool:
        return self.value == 1

    def __mul__(self, other: GtElement) -> GtElement:
        return GtElement(self.value * other.value)

    def __pow__(self, e: int) -> GtElement:
        return GtElement(self.value ** e)


def _line(t: G1Point, s: G1Point, q: G2Point) -> Fp2:
    """Line through t and s (tangent if equal), evaluated at q."""
    if t.x == s.x and t.y != s.y:
        return q.x - t.x
    if t == s:
        if not t.y:
            return q.x - t.x
        lam = (3 * t.x * t.x + 1) / (2 * t.y)
    else:
        lam = (s.y - t.y) / (s.x - t.x)
    return q.y - t.y - (q.x - t.x) * lam


def _vertical(t: G1Point, q: G2Point) -> Fp2:
    if t.is_infinity():
        return Fp2.one(q.x.p)
    return q.x - t.x


def miller_loop(p: G1Point, q: G2Point, cp: CurveParams) -> Fp2:
    """f_{r,p} evaluated at q; 1 if either input is infinity.

    Numerator and denominator are accumulated separately so the loop does a
    single F_p^2 inversion at the end.
    """
    if p.is_infinity() or q.is_infinity():
        return Fp2.one(cp.p)
    num = Fp2.one(cp.p)
    den = Fp2.one(cp.p)
    t = p
    for bit in bin(cp.r)[3:]:
        t2 = t.double()
        num = num * num * _line(t, t, q)
        den = den * den * _vertical(t2, q)
        t = t2
        if bit == "1":
            ts = t + p
            num = num * _line(t, p, q)
            den = den * _vertical(ts, q)
            t = ts
    if not num or not den:
        raise DegeneratePairing("line function vanished at the evaluation point")
    return num / den


def final_exponentiation(f: Fp2, cp: CurveParams) -> GtElement:
    if not f:
        raise DegeneratePairing("final exponentiation of zero")
    return GtElement(f ** ((cp.p * cp.p - 1) // cp.r))


def pairing(p: G1Point, q: G2Point, cp: CurveParams) -> GtElement:
    if p.is_infinity() or q.is_infinity():
        return GtElement.one(cp.p)
    return final_exponentiation(miller_loop(p, q, cp), cp)
