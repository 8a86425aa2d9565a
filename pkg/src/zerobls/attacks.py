"""Witnesses for the zero-related attacks on BLS verification.

Every witness carries its checks as VectorRecords over canonical wire bytes,
so ``replay`` re-derives each verdict from scratch and the same checks can be
dumped as cross-implementation test vectors.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from . import bls
from .bls import PopProof, PublicKey, SecretKey, Signature, VerifyPolicy
from .codec import DecodeError, decode_lenient, decode_strict, encode, is_infinity_bytes_naive
from .curve import G2Point, hash_to_g2
from .pairing import pairing
from .params import CurveParams
from .vectors import VectorRecord, evaluate

RFC, HARDENED, LENIENT = VerifyPolicy.RFC, VerifyPolicy.HARDENED, VerifyPolicy.LENIENT
ALL_POLICIES = (RFC, HARDENED, LENIENT)


@dataclass(frozen=True)
class SplitZeroSet:
    """Keys that are individually nonzero and PoP-valid but sum to zero."""

    sks: Tuple[SecretKey, ...]
    pks: Tuple[PublicKey, ...]
    pops: Tuple[PopProof, ...]

    def check(self, cp: CurveParams) -> None:
        if sum(sk.scalar for sk in self.sks) % cp.r:
            raise AssertionError("secret keys do not sum to zero")
        if any(sk.scalar == 0 for sk in self.sks):
            raise AssertionError("zero secret key in split set")
        if not bls.aggregate_pks(self.pks).is_infinity():
            raise AssertionError("public keys do not sum to infinity")
        for pk, pop in zip(self.pks, self.pops):
            if pk.point.is_infinity() or not bls.pop_verify(pk, pop, HARDENED, cp):
                raise AssertionError("split-set member fails proof of possession")


@dataclass
class AttackWitness:
    description: str
    inputs: Dict[str, str]
    checks: List[Tuple[str, VectorRecord]] = field(default_factory=list)
    notes: Dict[str, object] = field(default_factory=dict)

    @property
    def verdicts(self) -> Dict[Tuple[str, str], bool]:
        return {(label, rec.policy.value): rec.expect for label, rec in self.checks}

    def records(self) -> List[VectorRecord]:
        return [rec for _, rec in self.checks]

    def add(self, label: str, scheme: str, op: str, pks, msgs, sig: bytes, expect: Dict[VerifyPolicy, bool]):
        for policy in ALL_POLICIES:
            rec = VectorRecord(scheme, op, policy, tuple(pks), tuple(msgs), sig, expect[policy])
            self.checks.append((label, rec))


def replay(witness: AttackWitness, cp: CurveParams) -> Dict[Tuple[str, str], bool]:
    """Re-run every recorded check and return the verdicts actually observed."""
    return {(label, rec.policy.value): evaluate(rec, cp) for label, rec in witness.checks}


def _every(value: bool) -> Dict[VerifyPolicy, bool]:
    return {p: value for p in ALL_POLICIES}


def make_split_zero_set(n: int, seed: bytes, cp: CurveParams) -> SplitZeroSet:
    """n-1 seed-derived keys plus one key cancelling their sum."""
    if n < 2:
        raise ValueError("a split-zero set needs at least two keys")
    attempt = 0
    while True:
        sks = [bls.keygen(seed + b"/split/%d/%d" % (attempt, i), cp) for i in range(n - 1)]
        last = -sum(sk.scalar for sk in sks) % cp.r
        attempt += 1
        if last:
            break
    sks.append(SecretKey(last))
    zs = SplitZeroSet(
        sks=tuple(sks),
        pks=tuple(bls.sk_to_pk(sk, cp) for sk in sks),
        pops=tuple(bls.pop_prove(sk, cp) for sk in sks),
    )
    zs.check(cp)
    return zs


def _hex(b: bytes) -> str:
    return b.hex()


def forge_aggregate_witness(
    user_seed: bytes, user_msg: bytes, forged_msg: bytes, cp: CurveParams
) -> AttackWitness:
    """Pass off one honest signature as an aggregate over (m, m3, m).

    The colluding pair never signs m. Interleaving their keys around the
    honest one keeps every partial key sum and every partial signature sum
    away from zero, so a check on intermediate aggregates would not fire.
    """
    if user_msg == forged_msg:
        raise ValueError("forged message must differ from the user's message")
    x3 = bls.keygen(user_seed, cp)
    pk3 = bls.sk_to_pk(x3, cp)
    sig3 = bls.sign(x3, user_msg, cp)
    attempt = 0
    while True:
        pair = make_split_zero_set(2, user_seed + b"/colluders/%d" % attempt, cp)
        pks = (pair.pks[0], pk3, pair.pks[1])
        implied = (
            hash_to_g2(forged_msg, cp.dst_sig, cp) * pair.sks[0].scalar,
            sig3.point,
            hash_to_g2(forged_msg, cp.dst_sig, cp) * pair.sks[1].scalar,
        )
        prefixes_ok = all(
            not bls.aggregate_pks(pks[:k]).is_infinity()
            and not sum(implied[:k], G2Point.infinity()).is_infinity()
            for k in (1, 2)
        )
        if prefixes_ok:
            break
        attempt += 1
    msgs = (forged_msg, user_msg, forged_msg)
    pk_bytes = [pk.to_bytes(cp) for pk in pks]
    sig_bytes = sig3.to_bytes(cp)

    w = AttackWitness(
        description=(
            "splitting zero: an honest signature on m3 verifies as an aggregate "
            "over (m, m3, m) with colluding keys X1 + X2 = 0 that never signed m"
        ),
        inputs={
            "X1": _hex(pk_bytes[0]),
            "X3": _hex(pk_bytes[1]),
            "X2": _hex(pk_bytes[2]),
            "m": _hex(forged_msg),
            "m3": _hex(user_msg),
            "sig3": _hex(sig_bytes),
        },
    )
    w.add("aggregate", "pop", "aggregate_verify", pk_bytes, msgs, sig_bytes,
          {RFC: True, HARDENED: False, LENIENT: True})
    w.add("aggregate_basic", "basic", "aggregate_verify", pk_bytes, msgs, sig_bytes, _every(False))
    w.add("user_verify", "pop", "verify", [pk_bytes[1]], [user_msg], sig_bytes, _every(True))
    for i, (pk, pop) in enumerate(zip(pair.pks, pair.pops), start=1):
        w.add(f"pop_X{i}", "pop", "pop_verify", [pk.to_bytes(cp)], [], pop.to_bytes(cp), _every(True))
    w.notes["colluder_signatures_on_m"] = 0
    w.notes["prefix_sums_nonzero"] = prefixes_ok
    w.notes["colluder_scalars"] = [sk.scalar for sk in pair.sks]
    return w


def consensus_divergence_witness(seed: bytes, msg: bytes, cp: CurveParams) -> AttackWitness:
    """FastAggregateVerify and AggregateVerify disagree on a zero-sum pair."""
    pair = make_split_zero_set(2, seed, cp)
    pk_bytes = [pk.to_bytes(cp) for pk in pair.pks]
    zero_sig = encode(G2Point.infinity(), cp)
    agg = bls.aggregate([bls.sign(sk, msg, cp) for sk in pair.sks])

    w = AttackWitness(
        description=(
            "consensus divergence: with X1 + X2 = 0 and the identity signature, "
            "rfc FastAggregateVerify rejects while the equivalent AggregateVerify accepts; "
            "lenient FastAggregateVerify accepts every message"
        ),
        inputs={"X1": _hex(pk_bytes[0]), "X2": _hex(pk_bytes[1]), "m": _hex(msg), "sig": _hex(zero_sig)},
    )
    w.add("fast", "pop", "fast_aggregate_verify", pk_bytes, [msg], zero_sig,
          {RFC: False, HARDENED: False, LENIENT: True})
    w.add("aggregate", "pop", "aggregate_verify", pk_bytes, [msg, msg], zero_sig,
          {RFC: True, HARDENED: False, LENIENT: True})
    for k in (1, 2):
        other = msg + b"/other-%d" % k
        w.add(f"fast_other{k}", "pop", "fast_aggregate_verify", pk_bytes, [other], zero_sig,
              {RFC: False, HARDENED: False, LENIENT: True})
    w.notes["honest_pair_aggregate_is_identity"] = agg.point.is_infinity()
    return w


def rogue_public_key_witness(victim_seed: bytes, msg: bytes, cp: CurveParams) -> AttackWitness:
    """X2 = x2*G - X1 makes x2*H(m) look like a joint signature with the victim."""
    x1 = bls.keygen(victim_seed, cp)
    pk1 = bls.sk_to_pk(x1, cp)
    x2 = bls.keygen(victim_seed + b"/attacker", cp)
    rogue = PublicKey(cp.generator * x2.scalar - pk1.point)
    sig = Signature(hash_to_g2(msg, cp.dst_sig, cp) * x2.scalar)
    # The best proof the attacker can make without knowing log(X2).
    proof = PopProof(hash_to_g2(rogue.to_bytes(cp), cp.dst_pop, cp) * x2.scalar)

    lhs = pairing(cp.generator, sig.point, cp)
    rhs = pairing(rogue.point + pk1.point, hash_to_g2(msg, cp.dst_sig, cp), cp)
    pk_bytes = [pk1.to_bytes(cp), rogue.to_bytes(cp)]
    w = AttackWitness(
        description=(
            "rogue public key: X2 = x2*G - X1 lets the attacker's x2*H(m) pass "
            "FastAggregateVerify for (X1, X2) although the victim never signed m; "
            "proof of possession for X2 cannot be produced"
        ),
        inputs={"X1": _hex(pk_bytes[0]), "X2": _hex(pk_bytes[1]), "m": _hex(msg), "sig": _hex(sig.to_bytes(cp))},
    )
    w.add("fast", "pop", "fast_aggregate_verify", pk_bytes, [msg], sig.to_bytes(cp), _every(True))
    w.add("pop_rogue", "pop", "pop_verify", [pk_bytes[1]], [], proof.to_bytes(cp), _every(False))
    w.add("pop_victim", "pop", "pop_verify", [pk_bytes[0]], [], bls.pop_prove(x1, cp).to_bytes(cp),
          _every(True))
    w.notes["equation_holds"] = lhs == rhs
    w.notes["victim_signature_present"] = False
    return w


def _first_byte_scan(n: int, group: str, cp: CurveParams) -> Dict[str, List[int]]:
    lenient, strict, naive = [], [], []
    for u in range(256):
        b = bytes([u]) + bytes(n - 1)
        if is_infinity_bytes_naive(b):
            naive.append(u)
        try:
            if decode_lenient(b, group, cp).is_infinity():
                lenient.append(u)
        except DecodeError:
            pass
        try:
            if decode_strict(b, group, cp).is_infinity():
                strict.append(u)
        except DecodeError:
            pass
    return {"lenient_infinity": lenient, "strict_infinity": strict, "naive_flagged": naive}


def encoding_bypass_witness(cp: CurveParams, msg: bytes = b"any message at all") -> AttackWitness:
    """[0x40, 0...0] is the identity to a lenient decoder but not to the byte check."""
    pk_alias = bytes([0x40]) + bytes(cp.fe_len - 1)
    sig_alias = bytes([0x40]) + bytes(2 * cp.fe_len - 1)
    canonical_zero_pk = encode(bls.G1Point.infinity(), cp)
    try:
        decode_strict(pk_alias, "g1", cp)
        strict_error = None
    except DecodeError as exc:
        strict_error = exc.reason

    w = AttackWitness(
        description=(
            "encoding bypass: the identity alias [0x40, 0...0] slips past a byte "
            "comparison against [0xC0, 0...0], then decodes to the zero key, so a "
            "zero key and zero signature verify any message"
        ),
        inputs={"pk": _hex(pk_alias), "sig": _hex(sig_alias), "m": _hex(msg)},
    )
    w.add("key_validate_alias", "pop", "key_validate", [pk_alias], [], b"",
          {RFC: False, HARDENED: False, LENIENT: True})
    w.add("key_validate_canonical", "pop", "key_validate", [canonical_zero_pk], [], b"", _every(False))
    w.add("verify", "pop", "verify", [pk_alias], [msg], sig_alias,
          {RFC: False, HARDENED: False, LENIENT: True})
    w.add("pop_verify", "pop", "pop_verify", [pk_alias], [], sig_alias,
          {RFC: False, HARDENED: False, LENIENT: True})
    w.notes["naive_is_infinity"] = is_infinity_bytes_naive(pk_alias)
    w.notes["lenient_is_infinity"] = decode_lenient(pk_alias, "g1", cp).is_infinity()
    w.notes["strict_error"] = strict_error
    w.notes.update(_first_byte_scan(cp.fe_len, "g1", cp))
    return w


def key_binding_witness(seed: bytes, msg: bytes, cp: CurveParams) -> AttackWitness:
    """Padding an honest key with a zero-sum pair keeps the signature valid."""
    x = bls.keygen(seed, cp)
    pk = bls.sk_to_pk(x, cp)
    sig = bls.sign(x, msg, cp)
    pair = make_split_zero_set(2, seed + b"/colluders", cp)
    padded = [pair.pks[0].to_bytes(cp), pk.to_bytes(cp), pair.pks[1].to_bytes(cp)]
    altered = msg + b"/altered"
    sig_bytes = sig.to_bytes(cp)

    w = AttackWitness(
        description=(
            "key binding: sig' = Sign(x, m') also verifies for (X1, X, X2) with "
            "X1 + X2 = 0, but cannot be moved to another message"
        ),
        inputs={"X1": _hex(padded[0]), "X": _hex(padded[1]), "X2": _hex(padded[2]),
                "m": _hex(msg), "sig": _hex(sig_bytes)},
    )
    w.add("fast_padded", "pop", "fast_aggregate_verify", padded, [msg], sig_bytes, _every(True))
    w.add("fast_altered", "pop", "fast_aggregate_verify", padded, [altered], sig_bytes, _every(False))
    w.add("fast_plain", "pop", "fast_aggregate_verify", [padded[1]], [msg], sig_bytes, _every(True))
    w.add("verify_plain", "pop", "verify", [padded[1]], [msg], sig_bytes, _every(True))
    return w


DEMOS = {
    "splitting-zero": lambda seed, cp: forge_aggregate_witness(
        seed, b"user message", b"arbitrary message", cp),
    "consensus-divergence": lambda seed, cp: consensus_divergence_witness(seed, b"message", cp),
    "encoding-bypass": lambda seed, cp: encoding_bypass_witness(cp),
    "rogue-key": lambda seed, cp: rogue_public_key_witness(seed, b"message", cp),
    "key-binding": lambda seed, cp: key_binding_witness(seed, b"message", cp),
}
