"""Line-oriented test vectors for differential testing across implementations.

One record per line, space separated, fields in this order::

    scheme=pop op=fast_aggregate_verify policy=rfc pk=<hex>,<hex> msg=<hex> sig=<hex> expect=false

``pk`` and ``msg`` are comma separated lowercase hex. Ops that take no
message (``pop_verify``, ``key_validate``) leave ``msg`` empty, and
``key_validate`` leaves ``sig`` empty. Lines starting with ``#`` are comments.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Iterable, Optional, TextIO

from . import bls
from .bls import VerifyPolicy
from .codec import DecodeError
from .params import CurveParams

SCHEMES = ("basic", "aug", "pop")
OPS = ("verify", "aggregate_verify", "fast_aggregate_verify", "pop_verify", "key_validate")
FIELDS = ("scheme", "op", "policy", "pk", "msg", "sig", "expect")


class VectorFormatError(ValueError):
    pass


@dataclass(frozen=True)
class VectorRecord:
    scheme: str
    op: str
    policy: VerifyPolicy
    pks: tuple
    msgs: tuple
    sig: bytes
    expect: bool

    def __post_init__(self):
        if self.scheme not in SCHEMES:
            raise VectorFormatError(f"unknown scheme {self.scheme!r}")
        if self.op not in OPS:
            raise VectorFormatError(f"unknown op {self.op!r}")
        n_pk, n_msg = len(self.pks), len(self.msgs)
        ok = {
            "verify": n_pk == 1 and n_msg == 1,
            "aggregate_verify": n_pk >= 1 and n_pk == n_msg,
            "fast_aggregate_verify": n_pk >= 1 and n_msg == 1,
            "pop_verify": n_pk == 1 and n_msg == 0,
            "key_validate": n_pk == 1 and n_msg == 0 and not self.sig,
        }[self.op]
        if not ok:
            raise VectorFormatError(f"{self.op}: {n_pk} keys / {n_msg} messages")

    def to_line(self) -> str:
        return " ".join(
            [
                f"scheme={self.scheme}",
                f"op={self.op}",
                f"policy={self.policy.value}",
                "pk=" + ",".join(b.hex() for b in self.pks),
                "msg=" + ",".join(m.hex() for m in self.msgs),
                f"sig={self.sig.hex()}",
                f"expect={'true' if self.expect else 'false'}",
            ]
        )

    @classmethod
    def from_line(cls, line: str) -> VectorRecord:
        tokens = line.split()
        pairs = [t.partition("=") for t in tokens]
        keys = tuple(k for k, _, _ in pairs)
        if keys != FIELDS or any(not sep for _, sep, _ in pairs):
            raise VectorFormatError(f"expected fields {' '.join(FIELDS)}, got {line!r}")
        f = {k: v for k, _, v in pairs}
        if f["expect"] not in ("true", "false"):
            raise VectorFormatError(f"expect must be true or false, got {f['expect']!r}")
        op = f["op"]

        def hexlist(value: str, allow_empty_item: bool) -> tuple:
            if value == "":
                return (b"",) if allow_empty_item else ()
            return tuple(bytes.fromhex(v) for v in value.split(","))

        msg_arity_zero = op in ("pop_verify", "key_validate")
        try:
            return cls(
                scheme=f["scheme"],
                op=op,
                policy=VerifyPolicy(f["policy"]),
                pks=hexlist(f["pk"], False),
                msgs=hexlist(f["msg"], not msg_arity_zero),
                sig=bytes.fromhex(f["sig"]),
                expect=f["expect"] == "true",
            )
        except ValueError as exc:
            if isinstance(exc, VectorFormatError):
                raise
            raise VectorFormatError(str(exc)) from exc


def evaluate(rec: VectorRecord, cp: CurveParams, policy: Optional[VerifyPolicy] = None) -> bool:
    """Run the record's entry point on its wire bytes; decode failures are False."""
    policy = policy or rec.policy
    if rec.op == "key_validate":
        return bls.key_validate(rec.pks[0], policy, cp)
    try:
        pks = [bls.pk_from_bytes(b, policy, cp) for b in rec.pks]
        sig = bls.sig_from_bytes(rec.sig, policy, cp)
    except DecodeError:
        return False
    msgs = list(rec.msgs)
    if rec.op == "verify":
        fn = bls.verify_aug if rec.scheme == "aug" else bls.verify
        return fn(pks[0], msgs[0], sig, policy, cp)
    if rec.op == "aggregate_verify":
        fn = {
            "basic": bls.aggregate_verify_basic,
            "aug": bls.aggregate_verify_aug,
            "pop": bls.aggregate_verify,
        }[rec.scheme]
        return fn(pks, msgs, sig, policy, cp)
    if rec.op == "fast_aggregate_verify":
        return bls.fast_aggregate_verify(pks, msgs[0], sig, policy, cp)
    return bls.pop_verify(pks[0], bls.PopProof(sig.point), policy, cp)


def parse_vectors(lines: Iterable[str]) -> list:
    records = []
    for raw in lines:
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        records.append(VectorRecord.from_line(line))
    return records


def with_policy(rec: VectorRecord, policy: VerifyPolicy, expect: bool) -> VectorRecord:
    return replace(rec, policy=policy, expect=expect)


def write_vectors(out: TextIO, records: Iterable[VectorRecord], header: Iterable[str] = ()) -> int:
    count = 0
    for line in header:
        out.write(f"# {line}\n")
    for rec in records:
        out.write(rec.to_line() + "\n")
        count += 1
    return count
