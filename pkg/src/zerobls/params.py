"""Desk-scale pairing-friendly curve parameters.

Every curve is the supersingular y^2 = x^3 + x over F_p with p = 4r - 1,
so the cofactor is 4, p = 3 (mod 4), and the embedding degree is 2.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from importlib import resources
from typing import Optional, Union

from sympy import isprime

from .curve import G1Point, g1_generator, lift_x

DEFAULT_DST_SIG = b"BLS_SIG_TOYCURVE_NUL_"
DEFAULT_DST_POP = b"BLS_POP_TOYCURVE_NUL_"

# Candidates tried per seed before giving up.
SEARCH_WINDOW = 1 << 16


class ParamsError(ValueError):
    """An invariant of CurveParams does not hold; ``reason`` names which."""

    def __init__(self, reason: str, detail: str = ""):
        self.reason = reason
        super().__init__(f"{reason}: {detail}" if detail else reason)


class SearchExhausted(ParamsError):
    def __init__(self, detail: str = ""):
        super().__init__("search-exhausted", detail)


@dataclass(frozen=True)
class CurveParams:
    p: int
    r: int
    h: int
    gx: Optional[int]
    gy: Optional[int]
    dst_sig: bytes = DEFAULT_DST_SIG
    dst_pop: bytes = DEFAULT_DST_POP

    @property
    def fe_len(self) -> int:
        # Three top bits of the first byte are always free for flags.
        return (self.p.bit_length() + 3 + 7) // 8

    @cached_property
    def generator(self) -> G1Point:
        return g1_generator(self)

    def to_text(self) -> str:
        return (
            f"p={self.p} r={self.r} h={self.h} gx={self.gx} gy={self.gy} "
            f"dst_sig={self.dst_sig.decode('ascii')} dst_pop={self.dst_pop.decode('ascii')}"
        )

    @classmethod
    def from_text(cls, text: str) -> CurveParams:
        fields = {}
        for token in text.split():
            key, sep, value = token.partition("=")
            if not sep:
                raise ValueError(f"malformed params token {token!r}")
            fields[key] = value
        expected = {"p", "r", "h", "gx", "gy", "dst_sig", "dst_pop"}
        if set(fields) != expected:
            raise ValueError(f"params record needs exactly {sorted(expected)}")
        return cls(
            p=int(fields["p"]),
            r=int(fields["r"]),
            h=int(fields["h"]),
            gx=int(fields["gx"]),
            gy=int(fields["gy"]),
            dst_sig=fields["dst_sig"].encode("ascii"),
            dst_pop=fields["dst_pop"].encode("ascii"),
        )


def _find_generator(p: int, r: int, h: int, rng: random.Random) -> G1Point:
    for _ in range(SEARCH_WINDOW):
        pt = lift_x(rng.randrange(p), p)
        if pt is None:
            continue
        if rng.getrandbits(1):
            pt = -pt
        g = pt * h
        if not g.is_infinity():
            return g
    raise SearchExhausted(f"no generator found for p={p}")


def generate_params(target_bits: int, seed: int = 0) -> CurveParams:
    """Find a prime r of ``target_bits`` bits with p = 4r - 1 also prime.

    The scan starts at a seed-derived offset inside [2^(b-1), 2^b) and wraps
    around once; the generator is h times a random curve point.
    """
    if target_bits < 2 or target_bits > 256:
        raise SearchExhausted(f"target_bits={target_bits} gives an empty search range")
    rng = random.Random(seed)
    lo, hi = 1 << (target_bits - 1), 1 << target_bits
    span = hi - lo
    start = rng.randrange(span)
    for i in range(min(span, SEARCH_WINDOW)):
        r = lo + (start + i) % span
        p = 4 * r - 1
        h = 4
        if r == 2 or not isprime(r) or not isprime(p):
            continue
        g = _find_generator(p, r, h, rng)
        cp = CurveParams(p=p, r=r, h=h, gx=g.x.value, gy=g.y.value)
        validate_params(cp)
        return cp
    raise SearchExhausted(f"no prime pair with {target_bits}-bit r in window")


def validate_params(cp: CurveParams) -> None:
    """Raise ParamsError naming the first violated invariant."""
    if not isprime(cp.p):
        raise ParamsError("p-not-prime", str(cp.p))
    if cp.p % 4 != 3:
        raise ParamsError("p-not-3-mod-4", str(cp.p))
    if not isprime(cp.r):
        raise ParamsError("r-not-prime", str(cp.r))
    if cp.r == cp.p:
        raise ParamsError("r-equals-p")
    if cp.h * cp.r != cp.p + 1:
        raise ParamsError("cofactor-mismatch", f"h*r={cp.h * cp.r}, p+1={cp.p + 1}")
    if cp.h % cp.r == 0:
        raise ParamsError("r-divides-cofactor")
    if cp.dst_sig == cp.dst_pop:
        raise ParamsError("dst-collision")
    if (cp.p - 1) >> (8 * cp.fe_len - 3):
        raise ParamsError("no-flag-room")
    if cp.gx is None or cp.gy is None:
        raise ParamsError("generator-is-identity")
    if not (0 <= cp.gx < cp.p and 0 <= cp.gy < cp.p):
        raise ParamsError("generator-out-of-range")
    g = g1_generator(cp)
    if not g.is_on_curve():
        raise ParamsError("generator-not-on-curve")
    if not (g * cp.r).is_infinity():
        raise ParamsError("generator-wrong-order")


TINY = CurveParams(p=19, r=5, h=4, gx=5, gy=15)


def load_params(source: Union[str, None] = None) -> CurveParams:
    """Load params by name (``default``/``tiny``) or from a text file."""
    if source is None or source == "default":
        text = resources.files("zerobls").joinpath("data/params60.txt").read_text()
        return CurveParams.from_text(text.strip())
    if source == "tiny":
        return TINY
    with open(source) as fh:
        cp = CurveParams.from_text(fh.read().strip())
    validate_params(cp)
    return cp
