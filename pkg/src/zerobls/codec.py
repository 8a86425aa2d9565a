"""Point encodings with flag bits, plus a strict and a bug-compatible decoder.

Byte 0 carries three flags in its top bits::

    bit7  compressed
    bit6  point at infinity
    bit5  y is the lexicographically larger root (compressed form only)

Payload is big-endian; a G2 coordinate is written c1 first, then c0. The
canonical compressed infinity is 0xC0 followed by zeros, the canonical
uncompressed infinity is 0x40 followed by zeros.
"""

from __future__ import annotations

from typing import TYPE_CHECKING, Literal, Union

from .curve import G1Point, G2Point, is_in_subgroup
from .field import Fp, Fp2

if TYPE_CHECKING:
    from .params import CurveParams

COMPRESSION_FLAG = 0x80
INFINITY_FLAG = 0x40
SORT_FLAG = 0x20
FLAG_MASK = 0xE0

Group = Literal["g1", "g2"]
Point = Union[G1Point, G2Point]


class DecodeError(ValueError):
    reason = "decode-error"


class BadLength(DecodeError):
    reason = "bad-length"


class NonCanonicalInfinity(DecodeError):
    reason = "non-canonical-infinity"


class NonCanonicalFlags(DecodeError):
    reason = "non-canonical-flags"


class CoordinateOutOfRange(DecodeError):
    reason = "coordinate-out-of-range"


class NotOnCurve(DecodeError):
    reason = "not-on-curve"


class NotInSubgroup(DecodeError):
    reason = "not-in-subgroup"


def encoded_len(group: Group, compressed: bool, cp: CurveParams) -> int:
    coords = 1 if group == "g1" else 2
    return cp.fe_len * coords * (1 if compressed else 2)


def _is_larger(y: Union[Fp, Fp2]) -> bool:
    # Lexicographic order on (c1, c0) against -y; never true for y = 0.
    if isinstance(y, Fp2):
        neg = -y
        return (y.c1.value, y.c0.value) > (neg.c1.value, neg.c0.value)
    return y.value > (-y).value


def _coord_ints(c: Union[Fp, Fp2]) -> list:
    if isinstance(c, Fp2):
        return [c.c1.value, c.c0.value]
    return [c.value]


def encode(point: Point, cp: CurveParams, compressed: bool = True) -> bytes:
    group: Group = "g2" if isinstance(point, G2Point) else "g1"
    n = encoded_len(group, compressed, cp)
    if point.is_infinity():
        flags = INFINITY_FLAG | (COMPRESSION_FLAG if compressed else 0)
        return bytes([flags]) + bytes(n - 1)
    ints = _coord_ints(point.x)
    if not compressed:
        ints += _coord_ints(point.y)
    out = bytearray(b"".join(v.to_bytes(cp.fe_len, "big") for v in ints))
    if compressed:
        out[0] |= COMPRESSION_FLAG
        if _is_larger(point.y):
            out[0] |= SORT_FLAG
    return bytes(out)


def _split(data: bytes, cp: CurveParams) -> list:
    body = bytes([data[0] & ~FLAG_MASK & 0xFF]) + data[1:]
    n = cp.fe_len
    return [int.from_bytes(body[i:i + n], "big") for i in range(0, len(body), n)]


def _decode(data: bytes, group: Group, cp: CurveParams, lenient: bool) -> Point:
    data = bytes(data)
    clen = encoded_len(group, True, cp)
    ulen = encoded_len(group, False, cp)
    if len(data) not in (clen, ulen):
        raise BadLength(f"{len(data)} bytes is neither {clen} nor {ulen}")
    compressed = len(data) == clen
    flags = data[0] & FLAG_MASK
    c_bit = bool(flags & COMPRESSION_FLAG)
    inf_bit = bool(flags & INFINITY_FLAG)
    s_bit = bool(flags & SORT_FLAG)
    payload_zero = not any(_split(data, cp))
    cls = G1Point if group == "g1" else G2Point

    if inf_bit:
        if lenient and payload_zero:
            return cls.infinity()
        if c_bit != compressed or s_bit or not payload_zero:
            raise NonCanonicalInfinity(data.hex())
        return cls.infinity()
    if c_bit != compressed:
        raise NonCanonicalFlags("compression flag disagrees with length")
    if s_bit and not compressed:
        raise NonCanonicalFlags("sort flag set on uncompressed encoding")

    ints = _split(data, cp)
    if any(v >= cp.p for v in ints):
        raise CoordinateOutOfRange(data.hex())
    p = cp.p
    if group == "g1":
        x = Fp(ints[0], p)
    else:
        x = Fp2(ints[1], ints[0], p)
    rhs = x * x * x + x
    if compressed:
        y = _sqrt(rhs)
        if y is None:
            raise NotOnCurve(data.hex())
        if not y and s_bit:
            raise NonCanonicalFlags("sort flag set for y = 0")
        if _is_larger(y) != s_bit:
            y = -y
    else:
        y = Fp(ints[1], p) if group == "g1" else Fp2(ints[3], ints[2], p)
        if y * y != rhs:
            raise NotOnCurve(data.hex())
    point = cls(x, y)
    if not lenient and not is_in_subgroup(point, cp):
        raise NotInSubgroup(data.hex())
    return point


def _sqrt(a: Union[Fp, Fp2]):
    if isinstance(a, Fp):
        return a.sqrt()
    return fp2_sqrt(a)


def fp2_sqrt(a: Fp2):
    """A square root in F_p^2 (p = 3 mod 4), or None."""
    p = a.p
    if not a:
        return a
    if not a.c1:
        s = a.c0.sqrt()
        if s is not None:
            return Fp2(s, 0, p)
        # -a0 is a square since -1 is not; sqrt(a0) = i*sqrt(-a0).
        return Fp2(0, (-a.c0).sqrt(), p)
    n = a.norm().sqrt()
    if n is None:
        return None
    half = Fp(2, p).inv()
    for cand in ((a.c0 + n) * half, (a.c0 - n) * half):
        s0 = cand.sqrt()
        if s0 is not None and s0:
            s1 = a.c1 / (2 * s0)
            root = Fp2(s0, s1, p)
            if root * root == a:
                return root
    return None


def decode_strict(data: bytes, group: Group, cp: CurveParams) -> Point:
    """Accept exactly one byte string per point per form."""
    return _decode(data, group, cp, lenient=False)


def decode_lenient(data: bytes, group: Group, cp: CurveParams) -> Point:
    """Bug-compatible decoder.

    Any input with the infinity flag and an all-zero payload is the identity,
    whatever the other two flags say, and no subgroup check is run.
    """
    return _decode(data, group, cp, lenient=True)


def is_infinity_bytes_naive(data: bytes) -> bool:
    """Byte-compare against the canonical compressed identity, and nothing else."""
    return len(data) > 0 and data[0] == 0xC0 and not any(data[1:])
