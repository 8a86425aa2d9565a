"""BLS signatures in the minimal-pubkey-size layout (keys in G1, signatures in G2).

Covers the three ciphersuite families (basic, message augmentation, proof of
possession). Each verification entry point takes a VerifyPolicy:

* ``rfc``: the draft-v4 pseudocode as written. FastAggregateVerify runs
  KeyValidate on the *aggregated* key; nothing checks for an identity
  signature; AggregateVerify does not look at individual keys. ``verify``
  does not call KeyValidate either, so callers must run ``key_validate``
  when a key is registered.
* ``hardened``: reject identity keys, identity signatures and an identity
  aggregate key everywhere; AggregateVerify also requires distinct messages,
  since per-key checks cannot see a zero-sum subset.
* ``lenient``: what the audited libraries actually shipped. Lenient decoding
  and no identity checks at all.
"""

from __future__ import annotations

import enum
import hashlib
from dataclasses import dataclass
from functools import reduce
from typing import Sequence

from .codec import DecodeError, Group, decode_lenient, decode_strict, encode, is_infinity_bytes_naive
from .curve import G1Point, G2Point, hash_to_g2, is_in_subgroup
from .pairing import GtElement, pairing
from .params import CurveParams


class VerifyPolicy(enum.Enum):
    RFC = "rfc"
    HARDENED = "hardened"
    LENIENT = "lenient"

    def __str__(self) -> str:
        return self.value


class LengthMismatch(ValueError):
    pass


@dataclass(frozen=True)
class SecretKey:
    scalar: int

    def to_bytes(self, cp: CurveParams) -> bytes:
        return self.scalar.to_bytes((cp.r.bit_length() + 7) // 8, "big")

    @classmethod
    def from_bytes(cls, data: bytes, cp: CurveParams) -> SecretKey:
        scalar = int.from_bytes(data, "big")
        if scalar >= cp.r:
            raise ValueError("secret scalar not below the group order")
        return cls(scalar)


@dataclass(frozen=True)
class PublicKey:
    point: G1Point

    def to_bytes(self, cp: CurveParams) -> bytes:
        return encode(self.point, cp)


@dataclass(frozen=True)
class Signature:
    point: G2Point

    def to_bytes(self, cp: CurveParams) -> bytes:
        return encode(self.point, cp)


@dataclass(frozen=True)
class PopProof:
    point: G2Point

    def to_bytes(self, cp: CurveParams) -> bytes:
        return encode(self.point, cp)


def decode_point(data: bytes, group: Group, policy: VerifyPolicy, cp: CurveParams):
    """Wire bytes to a point the way a library running ``policy`` would."""
    if policy is VerifyPolicy.LENIENT:
        return decode_lenient(data, group, cp)
    return decode_strict(data, group, cp)


def pk_from_bytes(data: bytes, policy: VerifyPolicy, cp: CurveParams) -> PublicKey:
    return PublicKey(decode_point(data, "g1", policy, cp))


def sig_from_bytes(data: bytes, policy: VerifyPolicy, cp: CurveParams) -> Signature:
    return Signature(decode_point(data, "g2", policy, cp))


def keygen(seed: bytes, cp: CurveParams) -> SecretKey:
    """SHA-256(seed) mod r, re-hashed with a counter while it lands on 0."""
    if not seed:
        raise ValueError("empty seed")
    digest = hashlib.sha256(seed).digest()
    counter = 0
    while int.from_bytes(digest, "big") % cp.r == 0:
        counter += 1
        digest = hashlib.sha256(seed + counter.to_bytes(4, "big")).digest()
    return SecretKey(int.from_bytes(digest, "big") % cp.r)


def sk_to_pk(sk: SecretKey, cp: CurveParams) -> PublicKey:
    return PublicKey(cp.generator * sk.scalar)


def sign(sk: SecretKey, msg: bytes, cp: CurveParams) -> Signature:
    return Signature(hash_to_g2(msg, cp.dst_sig, cp) * sk.scalar)


def _core_equation(pk: G1Point, msg: bytes, sig: G2Point, cp: CurveParams) -> bool:
    return pairing(cp.generator, sig, cp) == pairing(pk, hash_to_g2(msg, cp.dst_sig, cp), cp)


def verify(pk: PublicKey, msg: bytes, sig: Signature, policy: VerifyPolicy, cp: CurveParams) -> bool:
    if policy is VerifyPolicy.HARDENED:
        if pk.point.is_infinity() or sig.point.is_infinity():
            return False
    return _core_equation(pk.point, msg, sig.point, cp)


def key_validate(pk_bytes: bytes, policy: VerifyPolicy, cp: CurveParams) -> bool:
    """Decode, then reject the identity and anything outside G1.

    Under ``lenient`` the identity test is a byte comparison done before
    decoding, so a non-canonical alias of the identity gets through.
    """
    if policy is VerifyPolicy.LENIENT:
        if is_infinity_bytes_naive(pk_bytes):
            return False
        try:
            point = decode_lenient(pk_bytes, "g1", cp)
        except DecodeError:
            return False
        return is_in_subgroup(point, cp)
    try:
        point = decode_strict(pk_bytes, "g1", cp)
    except DecodeError:
        return False
    return not point.is_infinity()


def aggregate(sigs: Sequence[Signature]) -> Signature:
    if not sigs:
        raise ValueError("nothing to aggregate")
    return Signature(reduce(lambda a, b: a + b, (s.point for s in sigs)))


def aggregate_pks(pks: Sequence[PublicKey]) -> G1Point:
    return reduce(lambda a, b: a + b, (pk.point for pk in pks), G1Point.infinity())


def _gt_product(values) -> GtElement:
    return reduce(lambda a, b: a * b, values)


def _aggregate_equation(pks, msgs, sig: G2Point, cp: CurveParams) -> bool:
    lhs = pairing(cp.generator, sig, cp)
    rhs = _gt_product(
        pairing(pk.point, hash_to_g2(m, cp.dst_sig, cp), cp) for pk, m in zip(pks, msgs)
    )
    return lhs == rhs


def _check_lengths(pks, msgs) -> None:
    if len(pks) != len(msgs):
        raise LengthMismatch(f"{len(pks)} keys for {len(msgs)} messages")
    if not pks:
        raise ValueError("need at least one key")


def aggregate_verify(
    pks: Sequence[PublicKey],
    msgs: Sequence[bytes],
    sig: Signature,
    policy: VerifyPolicy,
    cp: CurveParams,
) -> bool:
    _check_lengths(pks, msgs)
    if policy is VerifyPolicy.HARDENED:
        if sig.point.is_infinity():
            return False
        if any(pk.point.is_infinity() for pk in pks):
            return False
        if aggregate_pks(pks).is_infinity():
            return False
        if len(set(msgs)) != len(msgs):
            return False
    return _aggregate_equation(pks, msgs, sig.point, cp)


def aggregate_verify_basic(pks, msgs, sig: Signature, policy: VerifyPolicy, cp: CurveParams) -> bool:
    """Basic scheme: duplicate messages are refused outright."""
    _check_lengths(pks, msgs)
    if len(set(msgs)) != len(msgs):
        return False
    return aggregate_verify(pks, msgs, sig, policy, cp)


def fast_aggregate_verify(
    pks: Sequence[PublicKey],
    msg: bytes,
    sig: Signature,
    policy: VerifyPolicy,
    cp: CurveParams,
) -> bool:
    """Same-message verification with two pairings on the summed key."""
    if not pks:
        raise ValueError("need at least one key")
    agg = aggregate_pks(pks)
    if policy is not VerifyPolicy.LENIENT:
        if agg.is_infinity() or not is_in_subgroup(agg, cp):
            return False
    if policy is VerifyPolicy.HARDENED:
        if sig.point.is_infinity() or any(pk.point.is_infinity() for pk in pks):
            return False
    return _core_equation(agg, msg, sig.point, cp)


def _pop_message(pk: PublicKey, cp: CurveParams) -> bytes:
    return encode(pk.point, cp, compressed=True)


def pop_prove(sk: SecretKey, cp: CurveParams) -> PopProof:
    pk = sk_to_pk(sk, cp)
    return PopProof(hash_to_g2(_pop_message(pk, cp), cp.dst_pop, cp) * sk.scalar)


def pop_verify(pk: PublicKey, proof: PopProof, policy: VerifyPolicy, cp: CurveParams) -> bool:
    """e(pk, H'(pk)) == e(G, proof).

    ``rfc`` and ``hardened`` reject an identity key first, the way the
    draft's PopVerify runs KeyValidate; ``lenient`` goes straight to the
    pairing equation.
    """
    if policy is not VerifyPolicy.LENIENT and pk.point.is_infinity():
        return False
    q = hash_to_g2(_pop_message(pk, cp), cp.dst_pop, cp)
    return pairing(pk.point, q, cp) == pairing(cp.generator, proof.point, cp)


def _aug_message(pk: PublicKey, msg: bytes, cp: CurveParams) -> bytes:
    return encode(pk.point, cp, compressed=True) + msg


def sign_aug(sk: SecretKey, msg: bytes, cp: CurveParams) -> Signature:
    return sign(sk, _aug_message(sk_to_pk(sk, cp), msg, cp), cp)


def verify_aug(pk: PublicKey, msg: bytes, sig: Signature, policy: VerifyPolicy, cp: CurveParams) -> bool:
    return verify(pk, _aug_message(pk, msg, cp), sig, policy, cp)


def aggregate_verify_aug(pks, msgs, sig: Signature, policy: VerifyPolicy, cp: CurveParams) -> bool:
    _check_lengths(pks, msgs)
    return aggregate_verify(pks, [_aug_message(pk, m, cp) for pk, m in zip(pks, msgs)], sig, policy, cp)
