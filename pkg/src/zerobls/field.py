"""Arithmetic in F_p and F_p^2 = F_p[i]/(i^2 + 1).

Nothing here is constant time. These fields back deliberately breakable
curves used to reproduce verification bugs; do not use them for real keys.
"""

from __future__ import annotations

from typing import Optional, Union


class FieldError(ArithmeticError):
    pass


class DivisionByZero(FieldError, ZeroDivisionError):
    pass


class Fp:
    """An element of the prime field F_p."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _coerce(self, other) -> int:
        if isinstance(other, Fp):
            if other.p != self.p:
                raise FieldError("mixing elements of different fields")
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Fp(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Fp(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Fp(o - self.value, self.p)

    def __mul__(self, other):
        if isinstance(other, Fp2):
            return other * self
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Fp(self.value * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * Fp(o, self.p).inv()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Fp(o, self.p) * self.inv()

    def __neg__(self) -> Fp:
        return Fp(-self.value, self.p)

    def __pow__(self, e: int) -> Fp:
        if e < 0:
            return self.inv() ** (-e)
        return Fp(pow(self.value, e, self.p), self.p)

    def __eq__(self, other) -> bool:
        if isinstance(other, Fp):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.value, self.p))

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"Fp({self.value})"

    def inv(self) -> Fp:
        if self.value == 0:
            raise DivisionByZero("inverse of zero in F_p")
        return Fp(pow(self.value, -1, self.p), self.p)

    def is_square(self) -> bool:
        # Euler's criterion; 0 counts as a square.
        return self.value == 0 or pow(self.value, (self.p - 1) // 2, self.p) == 1

    def sqrt(self) -> Optional[Fp]:
        # Needs p = 3 (mod 4).
        s = Fp(pow(self.value, (self.p + 1) // 4, self.p), self.p)
        return s if s * s == self else None

    @classmethod
    def zero(cls, p: int) -> Fp:
        return cls(0, p)

    @classmethod
    def one(cls, p: int) -> Fp:
        return cls(1, p)


class Fp2:
    """c0 + c1*i with i^2 = -1."""

    __slots__ = ("c0", "c1", "p")

    def __init__(self, c0: Union[Fp, int], c1: Union[Fp, int], p: Optional[int] = None):
        if p is None:
            if not isinstance(c0, Fp):
                raise FieldError("modulus required when building Fp2 from ints")
            p = c0.p
        self.p = p
        self.c0 = c0 if isinstance(c0, Fp) else Fp(c0, p)
        self.c1 = c1 if isinstance(c1, Fp) else Fp(c1, p)

    def _parts(self, other):
        if isinstance(other, Fp2):
            if other.p != self.p:
                raise FieldError("mixing elements of different fields")
            return other.c0.value, other.c1.value
        if isinstance(other, Fp):
            if other.p != self.p:
                raise FieldError("mixing elements of different fields")
            return other.value, 0
        if isinstance(other, int):
            return other, 0
        return None

    def __add__(self, other):
        o = self._parts(other)
        if o is None:
            return NotImplemented
        return Fp2(self.c0.value + o[0], self.c1.value + o[1], self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._parts(other)
        if o is None:
            return NotImplemented
        return Fp2(self.c0.value - o[0], self.c1.value - o[1], self.p)

    def __rsub__(self, other):
        o = self._parts(other)
        if o is None:
            return NotImplemented
        return Fp2(o[0] - self.c0.value, o[1] - self.c1.value, self.p)

    def __mul__(self, other):
        o = self._parts(other)
        if o is None:
            return NotImplemented
        a0, a1 = self.c0.value, self.c1.value
        b0, b1 = o
        return Fp2(a0 * b0 - a1 * b1, a0 * b1 + a1 * b0, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._parts(other)
        if o is None:
            return NotImplemented
        return self * Fp2(o[0], o[1], self.p).inv()

    def __rtruediv__(self, other):
        o = self._parts(other)
        if o is None:
            return NotImplemented
        return Fp2(o[0], o[1], self.p) * self.inv()

    def __neg__(self) -> Fp2:
        return Fp2(-self.c0.value, -self.c1.value, self.p)

    def __pow__(self, e: int) -> Fp2:
        if e < 0:
            return self.inv() ** (-e)
        result = Fp2.one(self.p)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other) -> bool:
        o = self._parts(other)
        if o is None:
            return NotImplemented
        return self.c0.value == o[0] % self.p and self.c1.value == o[1] % self.p

    def __hash__(self) -> int:
        return hash((self.c0.value, self.c1.value, self.p))

    def __bool__(self) -> bool:
        return bool(self.c0) or bool(self.c1)

    def __repr__(self) -> str:
        return f"Fp2({self.c0.value} + {self.c1.value}*i)"

    def conjugate(self) -> Fp2:
        # Also the p-power Frobenius, since i^p = -i when p = 3 (mod 4).
        return Fp2(self.c0.value, -self.c1.value, self.p)

    def norm(self) -> Fp:
        return self.c0 * self.c0 + self.c1 * self.c1

    def inv(self) -> Fp2:
        if not self:
            raise DivisionByZero("inverse of zero in F_p^2")
        n = self.norm().inv()
        return Fp2(self.c0 * n, -self.c1 * n, self.p)

    @classmethod
    def zero(cls, p: int) -> Fp2:
        return cls(0, 0, p)

    @classmethod
    def one(cls, p: int) -> Fp2:
        return cls(1, 0, p)


def fp_inv(a: Fp) -> Fp:
    return a.inv()


def fp_sqrt(a: Fp) -> Optional[Fp]:
    """Square root via a^((p+1)/4), or None for a non-residue."""
    return a.sqrt()


def fp2_mul(a: Fp2, b: Fp2) -> Fp2:
    return a * b


def fp2_inv(a: Fp2) -> Fp2:
    return a.inv()


def fp2_pow(a: Fp2, e: int) -> Fp2:
    if e < 0:
        raise ValueError("exponent must be non-negative")
    return a ** e
